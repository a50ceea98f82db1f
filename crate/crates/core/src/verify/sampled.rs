//! Closed forms checked coefficient by coefficient at exact rational sample points.
//!
//! For a one-variable family the `n`-th coefficient of both sides is a polynomial of degree
//! at most `n`, so agreement at `order + 1` distinct points decides the identity through
//! `t^order`. Two-variable families use a product grid of the same size per axis.

use std::collections::BTreeMap;

use super::report::{CheckSpec, Evidence, Provenance, Report};
use crate::algebra::{frac, int, LaurentPoly, Rational};
use crate::error::Result;
use crate::perm::{
    for_each_permutation, involution_count, specialized_poly, EnumConfig, Family, Permutation,
};
use crate::series::{theorem_rhs, RhsId, TheoremRhs};

fn r(n: i64, d: i64) -> Rational {
    frac(n, d)
}

/// Ten distinct rationals, enough for degree nine.
fn axis_a() -> Vec<Rational> {
    vec![
        r(-2, 1),
        r(-1, 1),
        r(-1, 2),
        r(1, 3),
        r(1, 2),
        r(1, 1),
        r(3, 2),
        r(2, 1),
        r(5, 2),
        r(3, 1),
    ]
}

/// Disjoint from [`axis_a`], so every pair on the product grid has `x != y`.
fn axis_b() -> Vec<Rational> {
    vec![
        r(-3, 1),
        r(-3, 2),
        r(-1, 3),
        r(0, 1),
        r(1, 4),
        r(2, 3),
        r(5, 4),
        r(7, 4),
        r(7, 3),
        r(4, 1),
    ]
}

fn roots() -> Vec<Rational> {
    vec![
        r(-3, 1),
        r(-2, 1),
        r(-1, 1),
        r(-1, 2),
        r(1, 3),
        r(1, 2),
        r(1, 1),
        r(3, 2),
        r(2, 1),
        r(5, 2),
        r(3, 1),
    ]
}

fn oracle(family: Family, order: usize, cfg: &EnumConfig) -> Result<Vec<LaurentPoly>> {
    (0..=order)
        .map(|n| match specialized_poly(n, family, cfg) {
            Ok(p) => Ok(p),
            Err(_) if n == 0 => Ok(LaurentPoly::zero(&family.vars())),
            Err(e) => Err(e),
        })
        .collect()
}

fn render_point(params: &[(&str, Rational)]) -> String {
    let body: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    format!("({})", body.join(", "))
}

/// Compares every coefficient `0..=order` of the closed form at one point.
pub(crate) fn compare_at(
    ev: &mut Evidence,
    id: RhsId,
    params: &[(&str, Rational)],
    order: usize,
    lhs: impl Fn(usize, &BTreeMap<String, Rational>) -> Result<Rational>,
) -> Result<()> {
    let spec = TheoremRhs::new(id, params, order)?;
    let point = spec.lhs_point()?;
    let values = theorem_rhs(&spec)?.egf_values();
    let at = render_point(params);
    let mut bad = 0;
    for (n, rhs) in values.iter().enumerate() {
        let l = lhs(n, &point)?;
        if !ev.expect(&l == rhs, format!("{at}, n={n}"), || {
            (l.to_string(), rhs.to_string())
        }) {
            bad += 1;
        }
    }
    ev.note(at, format!("{bad} coefficients differ"));
    Ok(())
}

fn eval_family(
    polys: &[LaurentPoly],
) -> impl Fn(usize, &BTreeMap<String, Rational>) -> Result<Rational> + '_ {
    move |n, point| polys[n].eval(point)
}

fn provenance(spec: &CheckSpec, sampling: String) -> Provenance {
    Provenance {
        grammar_hash: None,
        cap: spec.cap,
        tol: None,
        sampling: Some(sampling),
    }
}

fn one_var(
    spec: &CheckSpec,
    id: RhsId,
    family: Family,
    var: &'static str,
    points: Vec<Rational>,
    what: &str,
) -> Result<Report> {
    let cfg = EnumConfig::large(spec.cap)?;
    let polys = oracle(family, spec.order, &cfg)?;
    let mut ev = Evidence::new();
    for v in &points {
        compare_at(
            &mut ev,
            id,
            &[(var, v.clone())],
            spec.order,
            eval_family(&polys),
        )?;
    }
    let grid: Vec<String> = points.iter().map(|p| p.to_string()).collect();
    let sampling = format!(
        "{var} in {{{}}}, degree bound {}",
        grid.join(", "),
        spec.order
    );
    Ok(ev.finish(spec, provenance(spec, sampling), what))
}

pub(crate) fn gessel(spec: &CheckSpec) -> Result<Report> {
    one_var(
        spec,
        RhsId::Gessel,
        Family::GesselT,
        "x",
        axis_a(),
        "exterior peak distribution",
    )
}

pub(crate) fn ln(spec: &CheckSpec) -> Result<Report> {
    let pts = vec![
        r(-3, 1),
        r(-2, 1),
        r(-1, 1),
        r(0, 1),
        r(1, 3),
        r(1, 2),
        r(1, 1),
        r(3, 2),
        r(2, 1),
        r(3, 1),
    ];
    one_var(
        spec,
        RhsId::Ln,
        Family::L,
        "x",
        pts,
        "consecutive 231 and 321 distribution",
    )
}

pub(crate) fn tbar(spec: &CheckSpec) -> Result<Report> {
    one_var(
        spec,
        RhsId::Tbar,
        Family::Tbar,
        "x",
        axis_a(),
        "132 exterior peak distribution",
    )
}

pub(crate) fn ttilde(spec: &CheckSpec) -> Result<Report> {
    one_var(
        spec,
        RhsId::Ttilde,
        Family::Ttilde,
        "y",
        axis_a(),
        "231 exterior peak distribution",
    )
}

/// `y = a + 1/a - 1`; the listed `a` give ten distinct `y`.
pub(crate) fn elizalde_noy(spec: &CheckSpec) -> Result<Report> {
    let cfg = EnumConfig::large(spec.cap)?;
    let polys = oracle(Family::U, spec.order, &cfg)?;
    let a = [
        r(2, 1),
        r(3, 1),
        r(5, 2),
        r(4, 1),
        r(7, 3),
        r(5, 1),
        r(3, 2),
        r(6, 1),
        r(-2, 1),
        r(-3, 1),
    ];
    let mut ev = Evidence::new();
    for v in &a {
        compare_at(
            &mut ev,
            RhsId::ElizaldeNoy,
            &[("a", v.clone())],
            spec.order,
            eval_family(&polys),
        )?;
    }
    let sampling = format!("y = a + 1/a - 1 for a in {{{}}}", join(&a));
    Ok(ev.finish(
        spec,
        provenance(spec, sampling),
        "proper double descent distribution",
    ))
}

pub(crate) fn barry_basset(spec: &CheckSpec) -> Result<Report> {
    let cfg = EnumConfig::large(spec.cap)?;
    let polys = oracle(Family::U, spec.order, &cfg)?;
    let mut ev = Evidence::new();
    compare_at(
        &mut ev,
        RhsId::BarryBasset,
        &[],
        spec.order,
        eval_family(&polys),
    )?;
    Ok(ev.finish(
        spec,
        provenance(spec, "y = 0".into()),
        "permutations without proper double descents",
    ))
}

fn join(v: &[Rational]) -> String {
    v.iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn root_pairs() -> Vec<(Rational, Rational)> {
    let rs = roots();
    let mut out = Vec::new();
    for (i, a) in rs.iter().enumerate() {
        for b in &rs[i + 1..] {
            out.push((a.clone(), b.clone()));
        }
    }
    out
}

/// `y + w = a + b`, `xz = ab`, with `z` cycling through a few values.
pub(crate) fn fu(spec: &CheckSpec) -> Result<Report> {
    let cfg = EnumConfig::large(spec.cap)?;
    let polys = oracle(Family::FuP, spec.order, &cfg)?;
    let zs = [r(1, 1), r(2, 3), r(3, 2), r(-1, 1)];
    let mut ev = Evidence::new();
    let mut k = 0;
    for (a, b) in root_pairs() {
        for y in axis_b() {
            let z = zs[k % zs.len()].clone();
            k += 1;
            let params = [("a", a.clone()), ("b", b.clone()), ("y", y), ("z", z)];
            compare_at(&mut ev, RhsId::Fu, &params, spec.order, eval_family(&polys))?;
        }
    }
    let sampling = format!(
        "a < b from {{{}}}, y in {{{}}}, z cycling {{{}}}",
        join(&roots()),
        join(&axis_b()),
        join(&zs)
    );
    Ok(ev.finish(spec, provenance(spec, sampling), "Fu's joint distribution"))
}

pub(crate) fn carlitz_scoville(spec: &CheckSpec) -> Result<Report> {
    let cfg = EnumConfig::large(spec.cap)?;
    let polys = oracle(Family::F, spec.order, &cfg)?;
    let xs = [r(1, 1), r(2, 1), r(1, 2), r(-3, 1)];
    let mut ev = Evidence::new();
    let mut k = 0;
    for (a, b) in root_pairs() {
        for y in axis_b() {
            let x = xs[k % xs.len()].clone();
            k += 1;
            let params = [("a", a.clone()), ("b", b.clone()), ("x", x), ("y", y)];
            compare_at(
                &mut ev,
                RhsId::CarlitzScoville,
                &params,
                spec.order,
                eval_family(&polys),
            )?;
        }
    }
    let sampling = format!(
        "a < b from {{{}}}, y in {{{}}}, x cycling {{{}}}",
        join(&roots()),
        join(&axis_b()),
        join(&xs)
    );
    Ok(ev.finish(
        spec,
        provenance(spec, sampling),
        "peaks, valleys, double rises and descents",
    ))
}

fn two_var(spec: &CheckSpec, id: RhsId, family: Family, what: &str) -> Result<Report> {
    let cfg = EnumConfig::large(spec.cap)?;
    let polys = oracle(family, spec.order, &cfg)?;
    let mut ev = Evidence::new();
    for x in axis_a() {
        for y in axis_b() {
            compare_at(
                &mut ev,
                id,
                &[("x", x.clone()), ("y", y)],
                spec.order,
                eval_family(&polys),
            )?;
        }
    }
    let sampling = format!(
        "x in {{{}}} times y in {{{}}}",
        join(&axis_a()),
        join(&axis_b())
    );
    Ok(ev.finish(spec, provenance(spec, sampling), what))
}

pub(crate) fn tn(spec: &CheckSpec) -> Result<Report> {
    two_var(spec, RhsId::Tn, Family::T, "joint 132/231 exterior peaks")
}

pub(crate) fn ta(spec: &CheckSpec) -> Result<Report> {
    two_var(
        spec,
        RhsId::TA,
        Family::TA,
        "exterior peaks over down-up permutations",
    )
}

/// Coefficients of `exp(t + t^2/2)` against a direct involution count and `L_n(0)`.
pub(crate) fn involutions(spec: &CheckSpec) -> Result<Report> {
    let cfg = EnumConfig::large(spec.cap)?;
    let values = theorem_rhs(&TheoremRhs::new(RhsId::Involutions, &[], spec.n_max)?)?.egf_values();
    let zero: BTreeMap<String, Rational> = [("x".to_string(), int(0))].into();
    let mut ev = Evidence::new();
    for (n, v) in values.iter().enumerate() {
        let count = int(involution_count(n, &cfg)? as i64);
        ev.expect(&count == v, format!("involutions, n={n}"), || {
            (count.to_string(), v.to_string())
        });
        let l0 = specialized_poly(n, Family::L, &cfg)?.eval(&zero)?;
        ev.expect(&l0 == v, format!("L_{n}(0), n={n}"), || {
            (l0.to_string(), v.to_string())
        });
        ev.note(format!("n={n}"), v.to_string());
    }
    Ok(ev.finish(
        spec,
        provenance(spec, "x = 0".into()),
        "involutions and consecutive-pattern avoiders",
    ))
}

/// Counts permutations with no window order-isomorphic to `pattern`, optionally after
/// prepending a zero. Independent of the statistic code.
fn avoiders(n: usize, pattern: &[u8], prepend_zero: bool) -> i64 {
    let k = pattern.len();
    let mut count = 0;
    for_each_permutation(n, |p: &Permutation| {
        let mut seq: Vec<u8> = Vec::with_capacity(n + 1);
        if prepend_zero {
            seq.push(0);
        }
        seq.extend_from_slice(p.values());
        let hit = seq
            .windows(k)
            .any(|w| (0..k).all(|i| (0..k).all(|j| (w[i] < w[j]) == (pattern[i] < pattern[j]))));
        count += !hit as i64;
    });
    count
}

/// `Tbar` at `x = 0` and `Ttilde` at `y = 0` against consecutive-pattern avoiders.
pub(crate) fn kitaev(spec: &CheckSpec) -> Result<Report> {
    EnumConfig::large(spec.cap)?.check(spec.order)?;
    let mut ev = Evidence::new();
    let cases = [
        (
            RhsId::Tbar,
            "x",
            "132 after a leading 0",
            &[1u8, 3, 2][..],
            true,
        ),
        (RhsId::Ttilde, "y", "231", &[2u8, 3, 1][..], false),
    ];
    for (id, var, label, pattern, lead) in cases {
        let values = theorem_rhs(&TheoremRhs::new(id, &[(var, int(0))], spec.order)?)?.egf_values();
        for (n, v) in values.iter().enumerate() {
            let count = int(avoiders(n, pattern, lead));
            ev.expect(&count == v, format!("{id} at {var}=0, n={n}"), || {
                (count.to_string(), v.to_string())
            });
        }
        ev.note(
            format!("{id} at {var}=0"),
            format!("avoiders of consecutive {label}"),
        );
    }
    Ok(ev.finish(
        spec,
        provenance(spec, "x = 0 and y = 0".into()),
        "consecutive-pattern avoidance",
    ))
}
