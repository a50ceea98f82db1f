//! Floating-point Γ, erf, ₁F₁ and the parabolic cylinder function `D_a`.

mod theorem;

use std::f64::consts::{PI, SQRT_2};

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

pub use theorem::{gen_numeric, sample_point, GenKind, SamplePoint};

/// Accuracy and range settings shared by the numeric routines.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct EvalContext {
    /// Target absolute tolerance.
    pub tol: f64,
    /// Maximum number of ₁F₁ terms.
    pub max_terms: usize,
    /// Largest `|t|` accepted by the closed-form evaluators.
    pub t_radius: f64,
}

impl Default for EvalContext {
    fn default() -> Self {
        EvalContext {
            tol: 1e-12,
            max_terms: 2000,
            t_radius: 0.3,
        }
    }
}

impl EvalContext {
    pub fn new(tol: f64, max_terms: usize, t_radius: f64) -> Result<Self> {
        if !tol.is_finite() || tol <= 0.0 || max_terms == 0 || t_radius.is_nan() || t_radius <= 0.0
        {
            return Err(Error::Domain(format!(
                "invalid evaluation context (tol {tol}, terms {max_terms}, radius {t_radius})"
            )));
        }
        Ok(EvalContext {
            tol,
            max_terms,
            t_radius,
        })
    }
}

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// Lanczos for `x >= 1/2`.
fn gamma_lanczos(x: f64) -> f64 {
    let x = x - 1.0;
    let mut acc = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * t.powf(x + 0.5) * (-t).exp() * acc
}

/// Γ(x); poles are errors.
pub fn gamma(x: f64) -> Result<f64> {
    if x.is_nan() {
        return Err(Error::Numeric("gamma of NaN".into()));
    }
    if is_nonpositive_integer(x) {
        return Err(Error::Numeric(format!("gamma has a pole at {x}")));
    }
    if x < 0.5 {
        Ok(PI / ((PI * x).sin() * gamma_lanczos(1.0 - x)))
    } else {
        Ok(gamma_lanczos(x))
    }
}

/// 1/Γ(x), which is 0 at the poles of Γ.
pub fn recip_gamma(x: f64) -> f64 {
    if is_nonpositive_integer(x) {
        0.0
    } else if x < 0.5 {
        (PI * x).sin() * gamma_lanczos(1.0 - x) / PI
    } else {
        1.0 / gamma_lanczos(x)
    }
}

/// erf(x): positive-term series below 3, continued fraction for erfc above.
pub fn erf(x: f64) -> f64 {
    if x < 0.0 {
        return -erf(-x);
    }
    if x < 3.0 {
        // erf x = 2/sqrt(pi) e^{-x^2} sum 2^n x^{2n+1} / (1*3*...*(2n+1))
        let x2 = x * x;
        let mut term = x;
        let mut sum = x;
        let mut k = 0.0;
        while term > sum * 1e-17 {
            k += 1.0;
            term *= 2.0 * x2 / (2.0 * k + 1.0);
            sum += term;
        }
        2.0 / PI.sqrt() * (-x2).exp() * sum
    } else {
        1.0 - erfc_cf(x)
    }
}

/// erfc for `x >= 3` by the Laplace continued fraction, evaluated with modified Lentz.
fn erfc_cf(x: f64) -> f64 {
    // erfc x = e^{-x^2}/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
    let tiny = 1e-300;
    let mut f = x;
    let mut c = x;
    let mut d = 0.0;
    for k in 1..500 {
        let a = k as f64 / 2.0;
        d = x + a * d;
        d = if d.abs() < tiny { tiny } else { d };
        c = x + a / c;
        c = if c.abs() < tiny { tiny } else { c };
        d = 1.0 / d;
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).abs() < 1e-16 {
            break;
        }
    }
    (-x * x).exp() / (PI.sqrt() * f)
}

/// ₁F₁(a; b; z) and its first two derivatives in `z`, by direct summation.
pub fn hyp1f1_derivs(a: f64, b: f64, z: Complex64, ctx: &EvalContext) -> Result<[Complex64; 3]> {
    if is_nonpositive_integer(b) {
        return Err(Error::Numeric(format!("1F1 with b = {b}")));
    }
    // term_n = (a)_n/(b)_n z^n/n!, differentiated term by term
    let zero = Complex64::new(0.0, 0.0);
    let mut out = [zero; 3];
    let mut coef = 1.0f64; // (a)_n/((b)_n n!)
    let (mut p0, mut p1, mut p2) = (Complex64::new(1.0, 0.0), zero, zero); // z^n, z^(n-1), z^(n-2)
    let mut quiet = 0;
    for n in 0..ctx.max_terms {
        let nf = n as f64;
        let terms = [p0 * coef, p1 * (coef * nf), p2 * (coef * nf * (nf - 1.0))];
        for (o, t) in out.iter_mut().zip(terms) {
            *o += t;
        }
        if coef == 0.0 {
            return Ok(out);
        }
        let small = terms
            .iter()
            .zip(&out)
            .all(|(t, o)| t.norm() <= o.norm().max(1.0) * ctx.tol * 1e-4);
        if small && n >= 2 {
            quiet += 1;
            if quiet >= 3 {
                return Ok(out);
            }
        } else {
            quiet = 0;
        }
        coef *= (a + nf) / ((b + nf) * (nf + 1.0));
        p2 = p1;
        p1 = p0;
        p0 *= z;
    }
    Err(Error::Numeric(format!(
        "1F1({a}; {b}; {z}) did not converge in {} terms",
        ctx.max_terms
    )))
}

pub fn hyp1f1(a: f64, b: f64, z: f64, ctx: &EvalContext) -> Result<f64> {
    if z == 0.0 {
        return Ok(1.0);
    }
    Ok(hyp1f1_derivs(a, b, Complex64::new(z, 0.0), ctx)?[0].re)
}

/// `D_a(z)` and its first two derivatives, all from term-wise differentiation of the defining series.
pub fn pcf_d_derivs(a: f64, z: Complex64, ctx: &EvalContext) -> Result<[Complex64; 3]> {
    let g1 = recip_gamma((1.0 - a) / 2.0);
    let g2 = recip_gamma(-a / 2.0);
    if g1 == 0.0 && g2 == 0.0 {
        return Err(Error::Numeric(format!(
            "both gamma factors vanish at a = {a}"
        )));
    }
    let c = 2f64.powf(a / 2.0) * PI.sqrt();
    let z2 = z * z;
    let x = z2 / 2.0;
    let zero = [Complex64::new(0.0, 0.0); 3];
    let hyp = |aa: f64, bb: f64, g: f64| -> Result<[Complex64; 3]> {
        if g == 0.0 {
            Ok(zero)
        } else {
            hyp1f1_derivs(aa, bb, x, ctx)
        }
    };
    let m1 = hyp(-a / 2.0, 0.5, g1)?;
    let m2 = hyp((1.0 - a) / 2.0, 1.5, g2)?;
    let s2 = SQRT_2 * g2;
    // B = g1 M1(z^2/2) - sqrt2 g2 z M2(z^2/2)
    let b0 = m1[0] * g1 - z * m2[0] * s2;
    let b1 = z * m1[1] * g1 - (m2[0] + z2 * m2[1]) * s2;
    let b2 = (m1[1] + z2 * m1[2]) * g1 - (z * m2[1] * 3.0 + z * z2 * m2[2]) * s2;
    let e0 = (-z2 / 4.0).exp();
    let e1 = -z / 2.0 * e0;
    let e2 = (z2 / 4.0 - 0.5) * e0;
    Ok([
        c * e0 * b0,
        c * (e1 * b0 + e0 * b1),
        c * (e2 * b0 + e1 * b1 * 2.0 + e0 * b2),
    ])
}

pub fn pcf_d_complex(a: f64, z: Complex64, ctx: &EvalContext) -> Result<Complex64> {
    Ok(pcf_d_derivs(a, z, ctx)?[0])
}

pub fn pcf_d(a: f64, z: f64, ctx: &EvalContext) -> Result<f64> {
    Ok(pcf_d_complex(a, Complex64::new(z, 0.0), ctx)?.re)
}

#[cfg(test)]
mod tests;
