//! Floating-point checks of the parabolic-cylinder closed forms and the special functions.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::report::{CheckSpec, Evidence, Provenance, Report};
use crate::algebra::{frac, LaurentPoly, Rational};
use crate::error::Result;
use crate::grammar::Grammar;
use crate::series::{exp_poly, hyp1f1_ct2, Series};
use crate::special::{
    erf, gen_numeric, hyp1f1, hyp1f1_derivs, pcf_d, pcf_d_derivs, sample_point, EvalContext,
    GenKind, SamplePoint,
};

/// Imaginary parts above this mean the complex branch bookkeeping went wrong.
const IMAG_TOL: f64 = 1e-10;
const BOX: (f64, f64) = (0.5, 2.0);
const MIN_GAP: f64 = 0.25;
const T_RADIUS: f64 = 0.3;

fn provenance(spec: &CheckSpec, grammar: Option<&Grammar>, sampling: String) -> Provenance {
    Provenance {
        grammar_hash: grammar.map(|g| g.source_hash().to_string()),
        cap: spec.cap,
        tol: Some(spec.tol),
        sampling: Some(sampling),
    }
}

/// `sum c_n t^n / n!` with the last term kept separately for the tail estimate.
struct Truncation {
    sum: f64,
    last: f64,
    prev: f64,
}

fn truncated(coeffs: &[LaurentPoly], pt: &SamplePoint, t: f64) -> Truncation {
    let mut sum = 0.0;
    let mut term_scale = 1.0;
    let (mut last, mut prev) = (0.0, 0.0);
    for (n, c) in coeffs.iter().enumerate() {
        if n > 0 {
            term_scale *= t / n as f64;
        }
        let term = c.eval_f64(&pt.vars) * term_scale;
        sum += term;
        prev = last;
        last = term;
    }
    Truncation { sum, last, prev }
}

impl Truncation {
    /// Geometric bound on what the truncation dropped, or `None` if the terms are not shrinking.
    fn tail(&self) -> Option<f64> {
        if self.last == 0.0 {
            return Some(0.0);
        }
        let ratio = (self.last / self.prev).abs();
        (ratio < 0.9).then(|| self.last.abs() * ratio / (1.0 - ratio))
    }
}

struct Sample {
    pt: SamplePoint,
    t: f64,
}

/// Draws points until `spec.samples` have a negligible truncation tail for every series.
fn draw(spec: &CheckSpec, series: &[&[LaurentPoly]], ev: &mut Evidence) -> Vec<Sample> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut out = Vec::new();
    let mut rejected = 0;
    let limit = 50 * spec.samples.max(1);
    for _ in 0..limit {
        if out.len() == spec.samples {
            break;
        }
        let pt = sample_point(&mut rng, BOX.0, BOX.1, MIN_GAP);
        let t = rng.gen_range(-T_RADIUS..=T_RADIUS);
        let small = series.iter().all(|c| {
            truncated(c, &pt, t)
                .tail()
                .is_some_and(|tail| tail <= spec.tol / 100.0)
        });
        if small {
            out.push(Sample { pt, t });
        } else {
            rejected += 1;
        }
    }
    ev.note(
        "sampling",
        format!(
            "{} accepted, {rejected} rejected for truncation tail",
            out.len()
        ),
    );
    if out.len() < spec.samples {
        ev.fail(
            "sampling",
            format!("{} samples", spec.samples),
            format!("{} samples with a small tail", out.len()),
        );
    }
    out
}

fn at(s: &Sample) -> String {
    let v = s.pt.vars;
    format!(
        "x={:.6} y={:.6} z={:.6} w={:.6} u={:.6} v={:.6} t={:.6}",
        v[0], v[1], v[2], v[3], v[4], v[5], s.t
    )
}

fn sampling_text(spec: &CheckSpec) -> String {
    format!(
        "seed {}, variables uniform in [{}, {}], |xv - zu| >= {MIN_GAP}, |t| <= {T_RADIUS}, truncation order {}",
        spec.seed, BOX.0, BOX.1, spec.order
    )
}

fn check_value(ev: &mut Evidence, label: &str, exact: f64, value: Complex64, tol: f64) {
    ev.close(label, exact, value.re, tol);
    let im = value.im.abs();
    ev.note(format!("{label}, imaginary part"), format!("{im:.3e}"));
    ev.expect(im <= IMAG_TOL, format!("{label}, imaginary part"), || {
        ("0".into(), format!("{im:.3e}"))
    });
}

fn gen_check(spec: &CheckSpec, kind: GenKind, seed: &str, what: &str) -> Result<Report> {
    let g = Grammar::g();
    let ctx = EvalContext::new(1e-15, 2000, T_RADIUS)?;
    let coeffs = g.gen_coeffs(&g.parse_poly(seed)?, spec.order)?;
    let mut ev = Evidence::new();
    let samples = draw(spec, &[&coeffs], &mut ev);
    for s in &samples {
        let exact = truncated(&coeffs, &s.pt, s.t).sum;
        let value = gen_numeric(kind, &s.pt, s.t, &ctx)?;
        check_value(&mut ev, &at(s), exact, value, spec.tol);
    }
    Ok(ev.finish(spec, provenance(spec, Some(g), sampling_text(spec)), what))
}

pub(crate) fn gen_p(spec: &CheckSpec) -> Result<Report> {
    gen_check(spec, GenKind::P, "z", "closed form of Gen(z)")
}

pub(crate) fn gen_f(spec: &CheckSpec) -> Result<Report> {
    gen_check(
        spec,
        GenKind::F,
        "x^-1/2*z^-1/2",
        "closed form of Gen(x^-1/2 z^-1/2)",
    )
}

/// The closed form of `Gen(w)` against its own series and against `Gen'(z)/Gen(z)`.
pub(crate) fn gen_q(spec: &CheckSpec) -> Result<Report> {
    let g = Grammar::g();
    let ctx = EvalContext::new(1e-15, 2000, T_RADIUS)?;
    let q = g.gen_coeffs(&g.var("w")?, spec.order)?;
    let p = g.gen_coeffs(&g.var("z")?, spec.order + 1)?;
    let dp = &p[1..];
    let p = &p[..=spec.order];
    let mut ev = Evidence::new();
    let samples = draw(spec, &[&q, p, dp], &mut ev);
    for s in &samples {
        let label = at(s);
        let value = gen_numeric(GenKind::Q, &s.pt, s.t, &ctx)?;
        check_value(
            &mut ev,
            &label,
            truncated(&q, &s.pt, s.t).sum,
            value,
            spec.tol,
        );
        let log_deriv = truncated(dp, &s.pt, s.t).sum / truncated(p, &s.pt, s.t).sum;
        ev.close(
            &format!("{label}, Gen'(z)/Gen(z)"),
            log_deriv,
            value.re,
            spec.tol,
        );
    }
    Ok(ev.finish(
        spec,
        provenance(spec, Some(g), sampling_text(spec)),
        "closed form of Gen(w)",
    ))
}

fn grid(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let n = ((hi - lo) / step).round() as usize;
    (0..=n).map(|k| lo + step * k as f64).collect()
}

fn ctx() -> EvalContext {
    EvalContext::default()
}

pub(crate) fn special_closed(spec: &CheckSpec) -> Result<Report> {
    let c = ctx();
    let tol = spec.tol;
    let mut ev = Evidence::new();
    let z = 1.3f64;
    ev.close("D_0(1.3)", (-z * z / 4.0).exp(), pcf_d(0.0, z, &c)?, tol);
    let z = 0.7f64;
    ev.close(
        "D_1(0.7)",
        z * (-z * z / 4.0).exp(),
        pcf_d(1.0, z, &c)?,
        tol,
    );
    let half_pi = (std::f64::consts::PI / 2.0).sqrt();
    for z in grid(-2.0, 2.0, 0.5) {
        let expect = half_pi * (z * z / 4.0).exp() * (1.0 - erf(z / std::f64::consts::SQRT_2));
        ev.close(&format!("D_-1({z})"), expect, pcf_d(-1.0, z, &c)?, tol);
    }
    for z in [0.25f64, 0.5, 1.0, 1.5] {
        let expect = std::f64::consts::PI.sqrt() / (2.0 * z) * (z * z).exp() * erf(z);
        ev.close(
            &format!("1F1(1;3/2;{z}^2)"),
            expect,
            hyp1f1(1.0, 1.5, z * z, &c)?,
            tol,
        );
    }
    Ok(ev.finish(
        spec,
        provenance(spec, None, "fixed points".into()),
        "reduced parabolic cylinder forms",
    ))
}

pub(crate) fn special_rec(spec: &CheckSpec) -> Result<Report> {
    let c = ctx();
    let mut ev = Evidence::new();
    for a in grid(-1.5, 1.5, 0.5) {
        for z in grid(-2.0, 2.0, 0.5) {
            let [d, dp, _] = pcf_d_derivs(a, Complex64::new(z, 0.0), &c)?;
            let up = pcf_d(a + 1.0, z, &c)?;
            let down = pcf_d(a - 1.0, z, &c)?;
            ev.close(
                &format!("first recurrence, a={a} z={z}"),
                z / 2.0 * d.re - up,
                dp.re,
                spec.tol,
            );
            ev.close(
                &format!("second recurrence, a={a} z={z}"),
                a * down - z / 2.0 * d.re,
                dp.re,
                spec.tol,
            );
        }
    }
    let sampling = "a in -1.5..1.5 step 0.5, z in -2..2 step 0.5".to_string();
    Ok(ev.finish(
        spec,
        provenance(spec, None, sampling),
        "derivative recurrences",
    ))
}

/// `d^2/dz^2 D_a(rz + s) = r^2/4 ((rz + s)^2 - 4a - 2) D_a(rz + s)`.
pub(crate) fn special_ode(spec: &CheckSpec) -> Result<Report> {
    let c = ctx();
    let rs = [
        Complex64::new(0.5, 0.0),
        Complex64::new(1.2, 0.0),
        Complex64::new(std::f64::consts::SQRT_2, 0.0),
        Complex64::new(0.0, 0.8),
    ];
    let ss = [-0.3, 0.8];
    let mut ev = Evidence::new();
    for a in grid(-1.5, 1.5, 0.5) {
        for z in grid(-2.0, 2.0, 0.5) {
            for r in rs {
                for s in ss {
                    let zeta = r * z + s;
                    let [d, _, d2] = pcf_d_derivs(a, zeta, &c)?;
                    let lhs = r * r * d2;
                    let rhs = r * r / 4.0 * (zeta * zeta - 4.0 * a - 2.0) * d;
                    let err = (lhs - rhs).norm();
                    let label = format!("a={a} z={z} r={r} s={s}");
                    ev.close(&label, 0.0, err, spec.tol);
                }
            }
        }
    }
    let sampling = "a in -1.5..1.5 step 0.5, z in -2..2 step 0.5, r in {0.5, 1.2, sqrt 2, 0.8i}, s in {-0.3, 0.8}";
    Ok(ev.finish(
        spec,
        provenance(spec, None, sampling.into()),
        "parabolic cylinder equation",
    ))
}

/// Kummer's transformation and a contiguous relation, in floats and as exact series in `t`
/// with `z = c t^2`.
pub(crate) fn special_kummer(spec: &CheckSpec) -> Result<Report> {
    let c = ctx();
    let mut ev = Evidence::new();
    let bs = [0.5, 1.5, 2.5, -0.5];
    for a in grid(-1.5, 1.5, 0.5) {
        for b in bs {
            for z in grid(-2.0, 2.0, 0.5) {
                let lhs = hyp1f1(a, b, z, &c)?;
                let rhs = z.exp() * hyp1f1(b - a, b, -z, &c)?;
                ev.close(&format!("Kummer, a={a} b={b} z={z}"), lhs, rhs, spec.tol);
                // b(b-1) M(a,b-1) + b(1-b-z) M(a,b) + z(b-a) M(a,b+1) = 0
                let m = |bb: f64| hyp1f1_derivs(a, bb, Complex64::new(z, 0.0), &c).map(|v| v[0].re);
                let res = b * (b - 1.0) * m(b - 1.0)?
                    + b * (1.0 - b - z) * m(b)?
                    + z * (b - a) * m(b + 1.0)?;
                ev.close(
                    &format!("contiguous, a={a} b={b} z={z}"),
                    0.0,
                    res,
                    spec.tol,
                );
            }
        }
    }
    let order = spec.order.min(12);
    let q = |n: i64, d: i64| frac(n, d);
    for a in [q(-3, 2), q(-1, 2), q(1, 3), q(1, 1), q(5, 2)] {
        for b in [q(1, 2), q(3, 2), q(5, 2), q(-1, 2)] {
            for cc in [q(-2, 1), q(1, 3), q(3, 2)] {
                let lhs = hyp1f1_ct2(&a, &b, &cc, order)?;
                let e = exp_poly(&Rational::from_integer(0.into()), &cc, order);
                let rhs = e.mul(&hyp1f1_ct2(&(&b - &a), &b, &-&cc, order)?);
                let at = format!("series Kummer, a={a} b={b} c={cc}");
                ev.expect(lhs == rhs, at, || (lhs.render(), rhs.render()));
                let one = q(1, 1);
                let zt2 = Series::t(order).mul(&Series::t(order)).scale(&cc);
                let t1 = hyp1f1_ct2(&a, &(&b - &one), &cc, order)?.scale(&(&b * (&b - &one)));
                let lin = &Series::constant(&b * (&one - &b), order) - &zt2.scale(&b);
                let t2 = lin.mul(&hyp1f1_ct2(&a, &b, &cc, order)?);
                let t3 = zt2
                    .scale(&(&b - &a))
                    .mul(&hyp1f1_ct2(&a, &(&b + &one), &cc, order)?);
                let sum = &(&t1 + &t2) + &t3;
                let zero = Series::zero(order);
                let at = format!("series contiguous, a={a} b={b} c={cc}");
                ev.expect(sum == zero, at, || (zero.render(), sum.render()));
            }
        }
    }
    let sampling = format!(
        "a in -1.5..1.5 step 0.5, b in {{0.5, 1.5, 2.5, -0.5}}, z in -2..2 step 0.5; series through t^{order}"
    );
    Ok(ev.finish(
        spec,
        provenance(spec, None, sampling),
        "Kummer and contiguous relations",
    ))
}
