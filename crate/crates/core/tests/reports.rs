use std::io::Write;

use pcfgram::verify::{load_reference, run_all, run_check, CheckSpec, Mode, RunDocument, REGISTRY};
use pcfgram::Error;

#[test]
fn reports_are_byte_identical_across_runs() {
    let ids = ["thm-P", "gessel", "special-rec", "gen-p-num"];
    let specs: Vec<CheckSpec> = ids
        .iter()
        .map(|id| CheckSpec::for_id(id).unwrap())
        .collect();
    let a = RunDocument::new(&specs, run_all(&specs, 1).unwrap()).to_json();
    let b = RunDocument::new(&specs, run_all(&specs, 3).unwrap()).to_json();
    assert_eq!(a, b);
}

#[test]
fn run_all_returns_registry_order() {
    let specs: Vec<CheckSpec> = ["special-closed", "conv", "thm-P"]
        .iter()
        .map(|id| CheckSpec::for_id(id).unwrap())
        .collect();
    let doc = RunDocument::new(&specs, run_all(&specs, 2).unwrap());
    let got: Vec<&str> = doc.reports.iter().map(|r| r.id.as_str()).collect();
    assert_eq!(got, ["thm-P", "conv", "special-closed"]);
    assert!(doc.passed);
}

#[test]
fn every_entry_has_a_usable_default() {
    for e in REGISTRY {
        let s = CheckSpec::for_id(e.id).unwrap();
        assert_eq!(s.mode, e.mode);
        if e.mode == Mode::Numeric {
            assert!(s.tol > 0.0, "{}", e.id);
        }
    }
}

#[test]
fn numeric_report_records_the_sampling_box() {
    let r = run_check(&CheckSpec::for_id("gen-p-num").unwrap()).unwrap();
    assert!(r.passed, "{}", r.summary);
    let sampling = r.provenance.sampling.unwrap();
    assert!(sampling.contains("[0.5, 2]"), "{sampling}");
    assert_eq!(r.provenance.tol, Some(1e-8));
    assert!(r.provenance.grammar_hash.is_some());
}

#[test]
fn involutions_match_the_cached_prefix() {
    let r = load_reference("A000085").unwrap();
    let want: Vec<i64> = vec![1, 1, 2, 4, 10, 26, 76, 232, 764];
    let got: Vec<i64> = r.values[..9]
        .iter()
        .map(|v| v.try_into().unwrap())
        .collect();
    assert_eq!(got, want);
}

#[test]
fn corrupted_cache_file_names_the_line() {
    let mut f = tempfile::Builder::new().suffix(".seq").tempfile().unwrap();
    writeln!(f, "# comment\nA000085: 1 1 2\n4 10 26").unwrap();
    let path = f.path().to_str().unwrap().to_string();
    match load_reference(&path) {
        Err(Error::SequenceFormat { line, .. }) => assert_eq!(line, 3),
        other => panic!("{other:?}"),
    }
}
