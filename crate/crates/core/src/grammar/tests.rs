use std::collections::BTreeMap;

use proptest::prelude::*;

use super::*;
use crate::algebra::{frac, int, HalfInt};

fn gg() -> &'static Grammar {
    Grammar::g()
}

fn p(s: &str) -> LaurentPoly {
    gg().parse_poly(s).unwrap()
}

const D4_Z: &str = "6*x*z*w^2*v + 5*z^2*w^2*u + 5*x*y*z*w*v + y*z^2*w*u + x*y^2*z*v \
                    + 3*x^2*z*v^2 + 2*x*z^2*u*v + z*w^4";

#[test]
fn single_derivatives() {
    assert_eq!(gg().derive(&p("z")).unwrap(), p("z*w"));
    assert_eq!(gg().derive(&p("z*w")).unwrap(), p("z*w^2 + x*z*v"));
    assert!(gg().derive(&p("x*v - z*u")).unwrap().is_zero());
    assert!(gg().derive(&p("7/3")).unwrap().is_zero());
}

#[test]
fn fourth_derivative_of_z_matches_display() {
    assert_eq!(gg().derive_n(&p("z"), 0).unwrap(), p("z"));
    let d4 = gg().derive_n(&p("z"), 4).unwrap();
    assert_eq!(d4, p(D4_Z));
    assert_eq!(d4.len(), 8);
    assert_eq!(d4.coeff_of("x*y*z*w*v").unwrap(), int(5));
    assert_eq!(d4.coeff_of("z*w^4").unwrap(), int(1));
}

#[test]
fn constants_generate_nothing() {
    let c = gg().gen_coeffs(&p("1"), 5).unwrap();
    assert_eq!(c[0], p("1"));
    assert!(c[1..].iter().all(|q| q.is_zero()));
}

fn binomial(n: u64, k: u64) -> u64 {
    (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
}

#[test]
fn gen_of_x_inverse_z_has_closed_form() {
    let coeffs = gg().gen_coeffs(&p("x^-1*z"), 10).unwrap();
    let dw = p("w - y");
    let dx = p("x*v - z*u");
    for (n, cn) in coeffs.iter().enumerate() {
        let mut expect = LaurentPoly::zero(gg().vars());
        for k in 0..=n / 2 {
            // n! / (2^k (n-2k)! k!)
            let c = binomial(n as u64, 2 * k as u64)
                * (1..=k as u64).map(|i| 2 * i - 1).product::<u64>();
            let term = &dw.powu((n - 2 * k) as u64) * &dx.powu(k as u64);
            expect = &expect + &term.scale(&int(c as i64));
        }
        expect = &expect * &p("x^-1*z");
        assert_eq!(cn, &expect, "n = {n}");
    }
}

#[test]
fn difference_w_minus_y_is_quadratic() {
    let d1 = gg().derive(&p("w - y")).unwrap();
    assert_eq!(d1, p("x*v - z*u"));
    assert!(gg().derive(&d1).unwrap().is_zero());
}

#[test]
fn half_seed_second_derivative() {
    let seed = p("x^-1/2*z^-1/2");
    let d1 = gg().derive(&seed).unwrap();
    assert_eq!(d1, &p("y + w") * &seed.scale(&frac(-1, 2)));
    let d2 = gg().derive(&d1).unwrap();
    let alpha = p("(y + w)^2 - 2*(x*v + z*u)");
    assert_eq!(d2, &alpha * &seed.scale(&frac(1, 4)));
}

#[test]
fn parsed_file_equals_builtin() {
    let text = "vars: x y z w u v\nrule x -> x*y\nrule y -> z*u\nrule z -> z*w\n\
                rule w -> x*v\nrule u -> x*y*z^-1*v\nrule v -> x^-1*z*w*u\n";
    assert_eq!(&parse_grammar(text).unwrap(), gg());
    for name in ["G", "g1", "g2", "g3"] {
        assert!(Grammar::builtin(name).is_some());
    }
    assert!(Grammar::builtin("g4").is_none());
}

#[test]
fn grammar_file_errors() {
    let e = parse_grammar("vars: x\nrule x -> x\nrule q -> x\n").unwrap_err();
    assert!(
        matches!(&e, Error::Parse { line: 3, msg } if msg.contains("`q`")),
        "{e}"
    );
    let e = parse_grammar("vars: x y\n").unwrap_err();
    assert!(e.to_string().contains("every variable needs a rule"), "{e}");
    let e = parse_grammar("vars: x\nrule x -> x\nrule x -> x*x\n").unwrap_err();
    assert!(e.to_string().contains("duplicate rule"), "{e}");
    let e = parse_grammar("vars: x\n\nrule x -> x +\n").unwrap_err();
    assert!(matches!(e, Error::Parse { line: 3, .. }), "{e}");
    let e = parse_grammar("vars: x\nrule x -> y\n").unwrap_err();
    assert!(e.to_string().contains("`y`"), "{e}");
    assert!(parse_grammar("rule x -> x\n").is_err());
}

#[test]
fn derive_rejects_foreign_variables() {
    let other = VarSet::new(&["x", "q"]).unwrap();
    let e = gg()
        .derive(&LaurentPoly::var(&other, "q").unwrap())
        .unwrap_err();
    assert_eq!(e, Error::UnknownVariable("q".into()));
}

fn chain(target: &Grammar, pairs: &[(&str, &str)]) -> BTreeMap<String, LaurentPoly> {
    pairs
        .iter()
        .map(|(from, to)| (from.to_string(), target.var(to).unwrap()))
        .collect()
}

fn reference_chains() -> Vec<(&'static str, Vec<(&'static str, &'static str)>)> {
    vec![
        ("g1", vec![("w", "x"), ("u", "x"), ("z", "y"), ("v", "y")]),
        ("g2", vec![("z", "x"), ("u", "x"), ("v", "x"), ("w", "y")]),
        ("g3", vec![("v", "z"), ("u", "x")]),
    ]
}

#[test]
fn rules_specialize_to_reference_grammars() {
    for (name, pairs) in reference_chains() {
        let target = Grammar::builtin(name).unwrap();
        let b = chain(target, &pairs);
        for (var, image) in gg().specialize_rules(target.vars(), &b).unwrap() {
            // the image of a rule must equal the target's derivative of the image of its variable
            let var_image = gg()
                .var(&var)
                .unwrap()
                .substitute_into(target.vars(), &b)
                .unwrap();
            assert_eq!(
                image,
                target.derive(&var_image).unwrap(),
                "{name}: rule for {var}"
            );
        }
    }
}

#[test]
fn specialization_commutes_with_derivation() {
    for (name, pairs) in reference_chains() {
        let target = Grammar::builtin(name).unwrap();
        let b = chain(target, &pairs);
        let seed = p("z");
        let image_seed = seed.substitute_into(target.vars(), &b).unwrap();
        let big = gg().gen_coeffs(&seed, 6).unwrap();
        let small = target.gen_coeffs(&image_seed, 6).unwrap();
        for n in 0..=6 {
            assert_eq!(
                big[n].substitute_into(target.vars(), &b).unwrap(),
                small[n],
                "{name} n={n}"
            );
        }
    }
}

fn laurent_monomial() -> impl Strategy<Value = LaurentPoly> {
    (proptest::collection::vec(-2i64..=2, 6), -3i64..=3).prop_map(|(twice, c)| {
        let m = Monomial::from_pairs(
            twice
                .iter()
                .enumerate()
                .map(|(i, &e)| (i as u16, HalfInt::from_twice(e))),
        );
        LaurentPoly::term(gg().vars(), m, int(if c == 0 { 1 } else { c }))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn leibniz_rule(u in laurent_monomial(), v in laurent_monomial(), n in 0usize..=5) {
        let du = gg().gen_coeffs(&u, n).unwrap();
        let dv = gg().gen_coeffs(&v, n).unwrap();
        let lhs = gg().derive_n(&(&u * &v), n).unwrap();
        let mut rhs = LaurentPoly::zero(gg().vars());
        for k in 0..=n {
            let c = int(binomial(n as u64, k as u64) as i64);
            rhs = &rhs + &(&du[k] * &dv[n - k]).scale(&c);
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn linearity(a in laurent_monomial(), b in laurent_monomial(), ca in -5i64..5, cb in 1i64..5) {
        let (ca, cb) = (int(ca), frac(1, cb));
        let lhs = gg().derive(&(&a.scale(&ca) + &b.scale(&cb))).unwrap();
        let rhs = &gg().derive(&a).unwrap().scale(&ca) + &gg().derive(&b).unwrap().scale(&cb);
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn leibniz_at_order_six() {
    let (u, v) = (p("x^-1/2*y^2*u"), p("z^-1*w*v^3/2"));
    let n = 6;
    let du = gg().gen_coeffs(&u, n).unwrap();
    let dv = gg().gen_coeffs(&v, n).unwrap();
    let mut rhs = LaurentPoly::zero(gg().vars());
    for k in 0..=n {
        rhs = &rhs + &(&du[k] * &dv[n - k]).scale(&int(binomial(n as u64, k as u64) as i64));
    }
    assert_eq!(gg().derive_n(&(&u * &v), n).unwrap(), rhs);
}
