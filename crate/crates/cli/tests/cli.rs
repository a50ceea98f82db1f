use std::process::Command;

fn pcfgram(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_pcfgram"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn derive_prints_the_fourth_derivative() {
    let (code, out, _) = pcfgram(&["derive", "--grammar", "G", "--seed", "z", "--n", "4"]);
    assert_eq!(code, 0);
    assert!(out.contains("6*x*z*w^2*v"), "{out}");
    assert!(out.contains("5*z^2*w^2*u"), "{out}");
}

#[test]
fn verify_exit_codes() {
    let (code, out, _) = pcfgram(&["verify", "involutions"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.starts_with("PASS involutions"), "{out}");
    assert_eq!(pcfgram(&["verify", "no-such-check"]).0, 2);
    assert_eq!(pcfgram(&["verify", "thm-P", "--n-max", "12"]).0, 2);
    assert_eq!(pcfgram(&["verify", "thm-P", "--mode", "numeric"]).0, 2);
    assert_eq!(pcfgram(&["frobnicate"]).0, 2);
}

#[test]
fn failing_check_exits_one() {
    // Too few samples can be drawn under a tail bound this strict.
    let (code, out, _) = pcfgram(&["verify", "gen-p-num", "--tol", "1e-30", "--samples", "2"]);
    assert_eq!(code, 1, "{out}");
    assert!(out.starts_with("FAIL gen-p-num"), "{out}");
    assert!(out.contains("first counterexample"), "{out}");
}

#[test]
fn json_document_is_written() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.json");
    let (code, _, _) = pcfgram(&["verify", "conv", "--json", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(doc["passed"], true);
    assert_eq!(doc["reports"][0]["id"], "conv");
    assert_eq!(doc["reports"][0]["spec"]["n_max"], 7);
}

#[test]
fn exported_triangles_match_the_cache() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("gessel.csv");
    assert_eq!(
        pcfgram(&[
            "enumerate",
            "--family",
            "GesselT",
            "--n",
            "7",
            "--csv",
            csv.to_str().unwrap()
        ])
        .0,
        0
    );
    let (code, out, _) = pcfgram(&["oeis", "--local", csv.to_str().unwrap(), "--ref", "A008971"]);
    assert_eq!(code, 0, "{out}");

    let seq = dir.path().join("l.seq");
    assert_eq!(
        pcfgram(&[
            "enumerate",
            "--family",
            "L",
            "--n",
            "5",
            "--seq",
            seq.to_str().unwrap()
        ])
        .0,
        0
    );
    let text = std::fs::read_to_string(&seq).unwrap();
    assert!(text.contains("L: 1 1 2 4 2 10 12 2 26 70 22 2"), "{text}");
}

#[test]
fn eulerian_csv_rows() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("e.csv");
    assert_eq!(
        pcfgram(&[
            "enumerate",
            "--family",
            "Eulerian",
            "--n",
            "4",
            "--csv",
            csv.to_str().unwrap()
        ])
        .0,
        0
    );
    let text = std::fs::read_to_string(csv).unwrap();
    assert!(text.ends_with("3,1,4,1,\n4,1,11,11,1\n"), "{text}");
}

#[test]
fn oeis_mismatch_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let local = dir.path().join("x.seq");
    std::fs::write(&local, "x: 1 1 2 5\n").unwrap();
    let (code, out, _) = pcfgram(&[
        "oeis",
        "--local",
        local.to_str().unwrap(),
        "--ref",
        "A000085",
    ]);
    assert_eq!(code, 1, "{out}");
}
