use super::*;

#[test]
fn registry_ids_are_unique() {
    let mut ids: Vec<_> = REGISTRY.iter().map(|e| e.id).collect();
    ids.sort();
    ids.dedup();
    assert_eq!(ids.len(), REGISTRY.len());
}

#[test]
fn unknown_id_and_wrong_mode_are_rejected() {
    assert!(matches!(
        CheckSpec::for_id("nope"),
        Err(Error::UnknownCheck(_))
    ));
    let mut spec = CheckSpec::for_id("thm-P").unwrap();
    spec.mode = Mode::Numeric;
    assert!(matches!(
        run_check(&spec),
        Err(Error::ModeNotPermitted { .. })
    ));
}

#[test]
fn cap_is_enforced() {
    let mut spec = CheckSpec::for_id("thm-P").unwrap();
    spec.n_max = 10;
    assert!(matches!(
        run_check(&spec),
        Err(Error::CapExceeded { n: 10, cap: 9 })
    ));
    spec.cap = 12;
    assert!(matches!(
        run_check(&spec),
        Err(Error::CapExceeded { cap: 11, .. })
    ));
}

#[test]
fn small_checks_pass() {
    for (id, n) in [
        ("thm-P", 4),
        ("thm-Q", 4),
        ("cor-W", 4),
        ("insertion", 4),
        ("conv", 4),
        ("stats", 5),
    ] {
        let mut spec = CheckSpec::for_id(id).unwrap();
        spec.n_max = n;
        let r = run_check(&spec).unwrap();
        assert!(r.passed, "{id}: {}", r.summary);
    }
}

#[test]
fn failure_carries_a_counterexample() {
    let mut ev = report::Evidence::new();
    ev.close("here", 1.0, 1.5, 1e-3);
    let r = ev.finish(
        &CheckSpec::for_id("special-closed").unwrap(),
        Provenance {
            grammar_hash: None,
            cap: 9,
            tol: Some(1e-3),
            sampling: None,
        },
        "demo",
    );
    assert!(!r.passed);
    let c = r.counterexample.unwrap();
    assert_eq!(c.at, "here");
}

#[test]
fn sequence_file_errors_name_the_line() {
    let text = "# header\nA1: 1 2 3\nA2: 1 x 3\n";
    match parse_sequence_file(text, "f.seq") {
        Err(Error::SequenceFormat { line, .. }) => assert_eq!(line, 3),
        other => panic!("{other:?}"),
    }
    let b = parse_bfile("0 1\n1 1\n3 2\n", "b.txt");
    assert!(matches!(b, Err(Error::SequenceFormat { line: 3, .. })));
    assert_eq!(
        parse_bfile("# c\n0 1\n1 1\n2 2\n", "b.txt").unwrap().len(),
        3
    );
}

#[test]
fn compare_uses_the_overlap() {
    let s = |v: &[i64]| Sequence {
        id: "s".into(),
        values: v.iter().map(|&x| x.into()).collect(),
    };
    assert!(oeis_compare(&s(&[1, 1, 2]), &s(&[1, 1, 2, 4, 10])).passed);
    assert!(!oeis_compare(&s(&[1, 2]), &s(&[1, 1, 2])).passed);
    assert!(!oeis_compare(&s(&[]), &s(&[1])).passed);
}

#[test]
fn wrong_oracle_is_caught_by_sampling() {
    use crate::algebra::int;
    use crate::perm::{specialized_poly, EnumConfig, Family};
    use crate::series::RhsId;
    let cfg = EnumConfig::default();
    let wrong: Vec<_> = (0..=6)
        .map(|n| specialized_poly(n, Family::L, &cfg).unwrap())
        .collect();
    let mut ev = report::Evidence::new();
    sampled::compare_at(&mut ev, RhsId::Gessel, &[("x", int(2))], 6, |n, p| {
        wrong[n].eval(p)
    })
    .unwrap();
    assert!(!ev.passed());
}

#[test]
fn perturbed_display_names_the_monomial() {
    let g = crate::grammar::Grammar::g();
    let d4 = g.derive_n(&g.var("z").unwrap(), 4).unwrap();
    let bad = d4.checked_add(&g.parse_poly("x*z*w^2*v").unwrap()).unwrap();
    let mut ev = report::Evidence::new();
    assert!(!ev.polys("n=4", &bad, &d4));
    let r = ev.finish(
        &CheckSpec::for_id("thm-P").unwrap(),
        Provenance {
            grammar_hash: None,
            cap: 9,
            tol: None,
            sampling: None,
        },
        "demo",
    );
    let c = r.counterexample.unwrap();
    assert!(c.at.contains("x*z*w^2*v"), "{}", c.at);
    assert_eq!((c.expected.as_str(), c.actual.as_str()), ("7", "6"));
}

#[test]
fn closed_form_of_q_does_not_match_p() {
    use crate::special::{gen_numeric, EvalContext, GenKind, SamplePoint};
    let pt = SamplePoint::new([1.0, 1.2, 0.8, 1.1, 0.7, 1.5]);
    let ctx = EvalContext::default();
    let p = gen_numeric(GenKind::P, &pt, 0.2, &ctx).unwrap();
    let q = gen_numeric(GenKind::Q, &pt, 0.2, &ctx).unwrap();
    assert!((p - q).norm() > 1e-3);
}
