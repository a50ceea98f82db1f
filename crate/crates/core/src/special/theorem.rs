use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;

use super::{pcf_d_complex, EvalContext};
use crate::error::{Error, Result};

/// Which closed form to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GenKind {
    /// `sum D^n(z) t^n/n!`
    P,
    /// `sum D^n(w) t^n/n!`
    Q,
    /// `sum D^n(x^-1/2 z^-1/2) t^n/n!`
    F,
}

/// Values of `x y z w u v`, in that order.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SamplePoint {
    pub vars: [f64; 6],
}

impl SamplePoint {
    pub fn new(vars: [f64; 6]) -> Self {
        SamplePoint { vars }
    }

    /// `xv - zu`, the square of both `delta` and `i * delta_hat`.
    pub fn disc(&self) -> f64 {
        let [x, _, z, _, u, v] = self.vars;
        x * v - z * u
    }
}

/// Uniform draw from `[lo, hi]^6` with `|xv - zu| >= min_gap`.
pub fn sample_point<R: Rng>(rng: &mut R, lo: f64, hi: f64, min_gap: f64) -> SamplePoint {
    loop {
        let mut vars = [0.0; 6];
        for v in vars.iter_mut() {
            *v = rng.gen_range(lo..=hi);
        }
        let p = SamplePoint { vars };
        if p.disc().abs() >= min_gap {
            return p;
        }
    }
}

struct Pieces {
    a1: f64,
    a2: f64,
    delta: Complex64,
    delta_hat: Complex64,
    big_a: Complex64,
    big_b: Complex64,
    k: Complex64,
}

fn pieces(pt: &SamplePoint, ctx: &EvalContext) -> Result<Pieces> {
    let [x, y, z, w, u, v] = pt.vars;
    let d2 = x * v - z * u;
    if d2 == 0.0 {
        return Err(Error::Domain("xv = zu: delta vanishes".into()));
    }
    let delta = Complex64::new(d2, 0.0).sqrt();
    let delta_hat = Complex64::new(-d2, 0.0).sqrt();
    let a1 = (z * u - y * w) / d2;
    let a2 = (x * v - y * w) / -d2;
    let wy = Complex64::new(w - y, 0.0);
    let p = pcf_d_complex(a1, wy / delta, ctx)?;
    let q = pcf_d_complex(a2, -wy / delta_hat, ctx)?;
    let r = pcf_d_complex(a1 + 1.0, wy / delta, ctx)?;
    let s = pcf_d_complex(a2 + 1.0, -wy / delta_hat, ctx)?;
    Ok(Pieces {
        a1,
        a2,
        delta,
        delta_hat,
        big_a: delta_hat * s - q * y,
        big_b: p * w - delta * r,
        k: p * q * (w - y) + delta_hat * p * s - delta * q * r,
    })
}

/// Evaluates a closed form at `(pt, t)`; the caller decides what to do with the imaginary part.
pub fn gen_numeric(
    kind: GenKind,
    pt: &SamplePoint,
    t: f64,
    ctx: &EvalContext,
) -> Result<Complex64> {
    if t.abs() > ctx.t_radius {
        return Err(Error::Domain(format!(
            "|t| = {} exceeds the radius {}",
            t.abs(),
            ctx.t_radius
        )));
    }
    let [x, y, z, w, _, _] = pt.vars;
    let pc = pieces(pt, ctx)?;
    let wy = w - y;
    let zeta1 = pc.delta * t + wy / pc.delta;
    let zeta2 = pc.delta_hat * t - wy / pc.delta_hat;
    let d_a1 = pcf_d_complex(pc.a1, zeta1, ctx)?;
    let d_a2 = pcf_d_complex(pc.a2, zeta2, ctx)?;
    let den = pc.big_a * d_a1 + pc.big_b * d_a2;
    if den.norm() == 0.0 || pc.k.norm() == 0.0 {
        return Err(Error::Numeric(
            "closed form has a vanishing denominator".into(),
        ));
    }
    let d2 = pt.disc();
    Ok(match kind {
        GenKind::P => {
            let expo = (wy * t / 2.0 + d2 * t * t / 4.0).exp();
            pc.k * z * expo / den
        }
        GenKind::Q => {
            let d_a1p = pcf_d_complex(pc.a1 + 1.0, zeta1, ctx)?;
            let d_a2p = pcf_d_complex(pc.a2 + 1.0, zeta2, ctx)?;
            ((d2 * t + wy) * pc.big_b * d_a2
                + pc.delta * pc.big_a * d_a1p
                + pc.delta_hat * pc.big_b * d_a2p)
                / den
        }
        GenKind::F => den / pc.k / (x * z).sqrt(),
    })
}
