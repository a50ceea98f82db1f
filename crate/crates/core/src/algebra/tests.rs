use std::collections::BTreeMap;

use proptest::prelude::*;

use super::*;
use crate::error::Error;

fn g() -> VarSet {
    VarSet::new(&["x", "y", "z", "w", "u", "v"]).unwrap()
}

fn p(s: &str) -> LaurentPoly {
    LaurentPoly::parse(&g(), s).unwrap()
}

#[test]
fn add_cancels_and_accumulates() {
    assert!((&p("x") + &p("-x")).is_zero());
    assert_eq!(&p("z*w") + &p("z*w"), p("2*z*w"));
    assert_eq!(&p("z*w^2 + x*z*v") + &p("x*z*v"), p("z*w^2 + 2*x*z*v"));
}

#[test]
fn mul_adds_half_exponents() {
    assert_eq!(&p("x^-1/2") * &p("x^-1/2"), p("x^-1"));
    assert_eq!(&p("z^-1") * &p("z"), p("1"));
    assert_eq!(&p("x*y") * &p("z^-1*v"), p("x*y*z^-1*v"));
}

#[test]
fn mismatched_variable_sets_are_rejected() {
    let other = VarSet::new(&["x", "y"]).unwrap();
    let a = LaurentPoly::var(&other, "x").unwrap();
    assert!(matches!(
        a.checked_add(&p("x")),
        Err(Error::VarSetMismatch { .. })
    ));
    assert!(a.checked_mul(&p("x")).is_err());
}

#[test]
fn substitution_examples() {
    let mut b = BTreeMap::new();
    b.insert("u".to_string(), p("x"));
    b.insert("v".to_string(), p("z"));
    assert_eq!(p("x*y*z^-1*v").substitute(&b).unwrap(), p("x*y"));

    let mut b = BTreeMap::new();
    b.insert("y".to_string(), p("1"));
    assert_eq!(p("x*y^2").substitute(&b).unwrap(), p("x"));
}

#[test]
fn substitution_rejects_negative_powers_of_sums() {
    let mut b = BTreeMap::new();
    b.insert("z".to_string(), p("x + y"));
    let err = p("z^-1").substitute(&b).unwrap_err();
    assert!(matches!(err, Error::NonMonomialPower { .. }));
    let err = p("z^1/2").substitute(&b).unwrap_err();
    assert!(matches!(err, Error::NonMonomialPower { .. }));
    // nonnegative integer powers of sums are fine
    assert_eq!(p("z^2").substitute(&b).unwrap(), p("x^2 + 2*x*y + y^2"));
}

#[test]
fn substitution_into_smaller_variable_set() {
    let target = VarSet::new(&["x", "y"]).unwrap();
    let x = LaurentPoly::var(&target, "x").unwrap();
    let y = LaurentPoly::var(&target, "y").unwrap();
    let mut b = BTreeMap::new();
    for n in ["w", "u"] {
        b.insert(n.to_string(), x.clone());
    }
    for n in ["z", "v"] {
        b.insert(n.to_string(), y.clone());
    }
    let img = p("x^-1*z*w*u").substitute_into(&target, &b).unwrap();
    assert_eq!(img, LaurentPoly::parse(&target, "x*y").unwrap());
}

#[test]
fn evaluation_examples() {
    let mut pt = BTreeMap::new();
    pt.insert("z".to_string(), int(7));
    assert_eq!(p("z").eval(&pt).unwrap(), int(7));

    let mut pt = BTreeMap::new();
    pt.insert("z".to_string(), int(2));
    pt.insert("x".to_string(), int(3));
    assert_eq!(p("z^-1*x").eval(&pt).unwrap(), frac(3, 2));
}

#[test]
fn evaluation_errors() {
    let mut pt = BTreeMap::new();
    pt.insert("x".to_string(), int(4));
    assert!(matches!(
        p("x^1/2").eval(&pt),
        Err(Error::HalfIntegerEval { .. })
    ));
    pt.insert("x".to_string(), int(0));
    assert!(matches!(
        p("x^-1").eval(&pt),
        Err(Error::ZeroToNegativePower { .. })
    ));
    assert!(matches!(p("y").eval(&pt), Err(Error::Unbound(_))));
}

#[test]
fn coefficient_lookup() {
    let q = p("3*x*y + 1/2*z");
    assert_eq!(q.coeff_of("x*y").unwrap(), int(3));
    assert_eq!(q.coeff_of("z").unwrap(), frac(1, 2));
    assert_eq!(LaurentPoly::zero(&g()).coeff_of("x").unwrap(), int(0));
}

#[test]
fn rendering_is_canonical() {
    let a = p("x*y - 3/2*z^-1/2 + 2");
    let b = p("2 + y*x - 3/2*z^(-1/2)");
    assert_eq!(a, b);
    assert_eq!(a.to_string(), b.to_string());
    assert_eq!(a.to_string(), "2 + x*y - 3/2*z^-1/2");
    assert_eq!(LaurentPoly::zero(&g()).to_string(), "0");
    // rendering parses back
    assert_eq!(LaurentPoly::parse(&g(), &a.to_string()).unwrap(), a);
}

#[test]
fn parse_errors_name_the_problem() {
    assert!(matches!(
        LaurentPoly::parse(&g(), "x*q"),
        Err(Error::UnknownVariable(v)) if v == "q"
    ));
    assert!(LaurentPoly::parse(&g(), "x^1/3").is_err());
    assert!(LaurentPoly::parse(&g(), "x +").is_err());
    assert!(LaurentPoly::parse(&g(), "(x + y").is_err());
}

fn small_poly() -> impl Strategy<Value = LaurentPoly> {
    poly_with_exponent_step(1)
}

fn poly_with_exponent_step(step: i64) -> impl Strategy<Value = LaurentPoly> {
    let term = (-3i64..=3, 1i64..=3, proptest::collection::vec(-3i64..=3, 6));
    proptest::collection::vec(term, 0..4).prop_map(move |ts| {
        let vars = g();
        let mut out = LaurentPoly::zero(&vars);
        for (n, d, twice) in ts {
            let m = Monomial::from_pairs(
                twice
                    .iter()
                    .enumerate()
                    .map(|(i, &e)| (i as u16, HalfInt::from_twice(e * step))),
            );
            out.add_term(m, frac(n, d));
        }
        out
    })
}

fn small_point() -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec((1i64..=5, 1i64..=4), 6)
        .prop_map(|v| v.into_iter().map(|(n, d)| frac(n, d)).collect())
}

proptest! {
    #[test]
    fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn monomial_inverse_roundtrip(a in small_poly(), twice in proptest::collection::vec(-4i64..=4, 6)) {
        let m = Monomial::from_pairs(twice.iter().enumerate().map(|(i, &e)| (i as u16, HalfInt::from_twice(e))));
        let one = num_traits::One::one();
        let there = a.mul_monomial(&m, &one);
        prop_assert_eq!(there.mul_monomial(&m.inverse(), &one), a);
    }

    #[test]
    fn eval_is_a_homomorphism(
        a in poly_with_exponent_step(2),
        b in poly_with_exponent_step(2),
        pt in small_point(),
    ) {
        let ea = a.eval_at(&pt).unwrap();
        let eb = b.eval_at(&pt).unwrap();
        prop_assert_eq!((&a * &b).eval_at(&pt).unwrap(), &ea * &eb);
        prop_assert_eq!((&a + &b).eval_at(&pt).unwrap(), ea + eb);
    }

    #[test]
    fn render_parse_roundtrip(a in small_poly()) {
        prop_assert_eq!(LaurentPoly::parse(&g(), &a.to_string()).unwrap(), a);
    }
}
