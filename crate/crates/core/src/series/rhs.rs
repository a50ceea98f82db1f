use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::Serialize;

use super::{exp_linear, exp_poly, hyp1f1_ct2, rabs, trig_sqrt, Series};
use crate::algebra::{frac, int, Rational};
use crate::error::{Error, Result};

/// Closed-form right-hand sides that are exactly rational at rational parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RhsId {
    /// params `x`
    Gessel,
    /// params `a`, with `y = a + 1/a - 1`
    ElizaldeNoy,
    /// no params
    BarryBasset,
    /// params `a, b, y, z`, with `y + w = a + b` and `xz = ab`
    Fu,
    /// params `a, b, x, y`, with `y + w = a + b` and `xz = ab`
    CarlitzScoville,
    /// params `x`
    Ln,
    /// params `x, y`, `x != y`
    Tn,
    /// params `x`
    Tbar,
    /// params `y`
    Ttilde,
    /// params `x, y`, `x != y`
    TA,
    /// no params
    Involutions,
}

impl RhsId {
    pub const ALL: [RhsId; 11] = [
        RhsId::Gessel,
        RhsId::ElizaldeNoy,
        RhsId::BarryBasset,
        RhsId::Fu,
        RhsId::CarlitzScoville,
        RhsId::Ln,
        RhsId::Tn,
        RhsId::Tbar,
        RhsId::Ttilde,
        RhsId::TA,
        RhsId::Involutions,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RhsId::Gessel => "gessel",
            RhsId::ElizaldeNoy => "elizalde-noy",
            RhsId::BarryBasset => "barry-basset",
            RhsId::Fu => "fu",
            RhsId::CarlitzScoville => "carlitz-scoville",
            RhsId::Ln => "L",
            RhsId::Tn => "T",
            RhsId::Tbar => "Tbar",
            RhsId::Ttilde => "Ttilde",
            RhsId::TA => "TA",
            RhsId::Involutions => "involutions",
        }
    }

    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            RhsId::Gessel | RhsId::Ln | RhsId::Tbar => &["x"],
            RhsId::Ttilde => &["y"],
            RhsId::ElizaldeNoy => &["a"],
            RhsId::BarryBasset | RhsId::Involutions => &[],
            RhsId::Fu => &["a", "b", "y", "z"],
            RhsId::CarlitzScoville => &["a", "b", "x", "y"],
            RhsId::Tn | RhsId::TA => &["x", "y"],
        }
    }
}

impl fmt::Display for RhsId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RhsId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        RhsId::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown closed form {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremRhs {
    pub id: RhsId,
    pub params: BTreeMap<String, Rational>,
    pub order: usize,
}

impl TheoremRhs {
    pub fn new(id: RhsId, params: &[(&str, Rational)], order: usize) -> Result<Self> {
        let params: BTreeMap<String, Rational> = params
            .iter()
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect();
        for name in params.keys() {
            if !id.param_names().contains(&name.as_str()) {
                return Err(Error::Domain(format!("{id} takes no parameter {name}")));
            }
        }
        let spec = TheoremRhs { id, params, order };
        for name in id.param_names() {
            spec.p(name)?;
        }
        Ok(spec)
    }

    fn p(&self, name: &str) -> Result<&Rational> {
        self.params
            .get(name)
            .ok_or_else(|| Error::Domain(format!("{} needs parameter {name}", self.id)))
    }

    /// Values of the original variables at which the left-hand side is evaluated.
    pub fn lhs_point(&self) -> Result<BTreeMap<String, Rational>> {
        let mut m = BTreeMap::new();
        let mut set = |k: &str, v: Rational| {
            m.insert(k.to_string(), v);
        };
        match self.id {
            RhsId::Gessel | RhsId::Ln | RhsId::Tbar => set("x", self.p("x")?.clone()),
            RhsId::Ttilde => set("y", self.p("y")?.clone()),
            RhsId::Tn | RhsId::TA => {
                set("x", self.p("x")?.clone());
                set("y", self.p("y")?.clone());
            }
            RhsId::ElizaldeNoy => {
                let a = self.p("a")?;
                set("y", a + a.recip() - int(1));
            }
            RhsId::BarryBasset => set("y", Rational::zero()),
            RhsId::Fu => {
                let (a, b, y, z) = (self.p("a")?, self.p("b")?, self.p("y")?, self.p("z")?);
                set("x", a * b / z);
                set("y", y.clone());
                set("z", z.clone());
                set("w", a + b - y);
            }
            RhsId::CarlitzScoville => {
                let (a, b, x, y) = (self.p("a")?, self.p("b")?, self.p("x")?, self.p("y")?);
                set("x", x.clone());
                set("y", y.clone());
                set("z", a * b / x);
                set("w", a + b - y);
            }
            RhsId::Involutions => {}
        }
        Ok(m)
    }
}

fn degenerate(what: &str) -> Error {
    Error::Domain(format!("degenerate sample: {what}"))
}

/// Builds the exact series of the closed form at the sampled parameters.
pub fn theorem_rhs(spec: &TheoremRhs) -> Result<Series> {
    let n = spec.order;
    let half = frac(1, 2);
    let one = Rational::one();
    match spec.id {
        RhsId::Gessel => {
            let q = &one - spec.p("x")?;
            let (e, o) = trig_sqrt(&q, n);
            Series::one(n).div(&(&e - &o))
        }
        RhsId::ElizaldeNoy => {
            let a = spec.p("a")?;
            if a.is_zero() {
                return Err(degenerate("a = 0"));
            }
            let y = a + a.recip() - &one;
            let s = rabs(&(a - a.recip()));
            if s.is_zero() {
                return Err(degenerate("a = +-1 makes the discriminant vanish"));
            }
            let num = exp_linear(&((&one - &y + &s) * &half), n).scale(&(int(2) * &s));
            let den =
                &Series::constant(&one + &y + &s, n) - &exp_linear(&s, n).scale(&(&one + &y - &s));
            num.div(&den)
        }
        RhsId::BarryBasset => {
            // cos(sqrt3 t/2 + pi/6) = (sqrt3/2)(cos(sqrt3 t/2) - sin(sqrt3 t/2)/sqrt3)
            let (e, o) = trig_sqrt(&frac(-3, 4), n);
            exp_linear(&half, n).div(&(&e - &o.scale(&half)))
        }
        RhsId::Fu => {
            let (a, b, y, z) = (spec.p("a")?, spec.p("b")?, spec.p("y")?, spec.p("z")?);
            if a == b {
                return Err(degenerate("a = b makes the discriminant vanish"));
            }
            if z.is_zero() {
                return Err(degenerate("z = 0"));
            }
            let w = a + b - y;
            let s = rabs(&(a - b));
            let (hi, lo) = if a > b { (a, b) } else { (b, a) };
            let num = exp_linear(&((&w - y + &s) * &half), n).scale(&(int(2) * z * &s));
            let den = &Series::constant(int(2) * hi, n) - &exp_linear(&s, n).scale(&(int(2) * lo));
            num.div(&den)
        }
        RhsId::CarlitzScoville => {
            let (a, b) = (spec.p("a")?, spec.p("b")?);
            if a == b {
                return Err(degenerate("a = b"));
            }
            if spec.p("x")?.is_zero() {
                return Err(degenerate("x = 0"));
            }
            let ea = exp_linear(a, n);
            let eb = exp_linear(b, n);
            (&eb - &ea).div(&(&ea.scale(b) - &eb.scale(a)))
        }
        RhsId::Ln => {
            let x = spec.p("x")?;
            let k = &one - x;
            let num = exp_poly(&k, &(&k * &half), n);
            let integral = exp_poly(&k, &(&k * &half), n).integrate().truncate(n);
            num.div(&(&Series::one(n) - &integral.scale(x)))
        }
        RhsId::Tn => {
            let (x, y) = (spec.p("x")?, spec.p("y")?);
            if x == y {
                return Err(degenerate("x = y"));
            }
            let c = (x - y) * &half;
            let a = (&one - y) / (int(2) * (x - y));
            let m0 = hyp1f1_ct2(&a, &half, &c, n)?;
            let m1 = hyp1f1_ct2(&(&a + &half), &frac(3, 2), &c, n)?;
            exp_poly(&Rational::zero(), &c, n).div(&(&m0 - &m1.shift()))
        }
        RhsId::Tbar => {
            let x = spec.p("x")?;
            let c = (x - &one) * &half;
            let z = Rational::zero();
            let den = &Series::one(n) - &exp_poly(&z, &c, n).integrate().truncate(n);
            exp_poly(&z, &c, n).div(&den)
        }
        RhsId::Ttilde => {
            let y = spec.p("y")?;
            let c = (y - &one) * &half;
            let den = &Series::one(n) - &exp_poly(&Rational::zero(), &c, n).integrate().truncate(n);
            Series::one(n).div(&den)
        }
        RhsId::TA => {
            let (x, y) = (spec.p("x")?, spec.p("y")?);
            if x == y {
                return Err(degenerate("x = y"));
            }
            let c = (x - y) * &half;
            let d = int(2) * (x - y);
            let odd = hyp1f1_ct2(&(x / &d), &frac(3, 2), &-&c, n)?;
            let even = hyp1f1_ct2(&(-y / &d), &half, &c, n)?;
            let num = exp_poly(&Rational::zero(), &c, n).mul(&(&Series::one(n) + &odd.shift()));
            num.div(&even)
        }
        RhsId::Involutions => Ok(exp_poly(&one, &half, n)),
    }
}
