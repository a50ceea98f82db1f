use std::fmt;

use serde::Serialize;

use super::{stats, Permutation};
use crate::algebra::{int, LaurentPoly, Monomial};
use crate::error::{Error, Result};
use crate::grammar::Grammar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Scheme {
    Exterior,
    Peak,
}

/// One of the six variables of grammar `G`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Label {
    X,
    Y,
    Z,
    W,
    U,
    V,
}

impl Label {
    pub fn name(self) -> &'static str {
        match self {
            Label::X => "x",
            Label::Y => "y",
            Label::Z => "z",
            Label::W => "w",
            Label::U => "u",
            Label::V => "v",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Labels for `pi_1 .. pi_n` followed by the appended 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labeling {
    pub labels: Vec<Label>,
    pub weight: LaurentPoly,
}

impl Labeling {
    pub fn render(&self) -> String {
        let parts: Vec<&str> = self.labels.iter().map(|l| l.name()).collect();
        parts.join(" ")
    }
}

pub fn label(p: &Permutation, scheme: Scheme) -> Result<Labeling> {
    let n = p.len();
    let mut slots: Vec<Option<Label>> = vec![None; n + 1];
    let mut put = |pos: usize, l: Label| -> Result<()> {
        match slots[pos] {
            None => {
                slots[pos] = Some(l);
                Ok(())
            }
            Some(prev) => Err(Error::Domain(format!(
                "labeling of {p} assigns both {prev} and {l} to position {}",
                pos + 1
            ))),
        }
    };
    // position i-1 holds pi_i; position n holds the appended 0
    match scheme {
        Scheme::Exterior => {
            put(n, Label::Z)?;
            for i in 1..n {
                let (a, b, c) = (p.at(i - 1), p.at(i), p.at(i + 1));
                if a < b && b > c {
                    if a < c {
                        put(i - 1, Label::X)?;
                        put(i, Label::V)?;
                    } else {
                        put(i - 1, Label::U)?;
                        put(i, Label::Z)?;
                    }
                } else if i >= 2 && a > b && b > c {
                    put(i, Label::Y)?;
                }
            }
            for s in slots.iter_mut() {
                s.get_or_insert(Label::W);
            }
        }
        Scheme::Peak => {
            if n == 0 {
                return Err(Error::Domain(
                    "the peak labeling needs a nonempty permutation".into(),
                ));
            }
            for i in 1..=n {
                let (a, b, c) = (p.at(i - 1), p.at(i), p.at(i + 1));
                match (a < b, b < c) {
                    (true, false) if a <= c => {
                        put(i - 1, Label::X)?;
                        put(i, Label::V)?;
                    }
                    (true, false) => {
                        put(i - 1, Label::U)?;
                        put(i, Label::Z)?;
                    }
                    (false, false) => put(i, Label::Y)?,
                    (true, true) => put(i - 1, Label::W)?,
                    (false, true) => {}
                }
            }
        }
    }
    let labels: Vec<Label> = slots
        .into_iter()
        .enumerate()
        .map(|(pos, l)| {
            l.ok_or_else(|| {
                Error::Domain(format!("labeling of {p} leaves position {} empty", pos + 1))
            })
        })
        .collect::<Result<_>>()?;

    let mut exps = [0i64; 6];
    for l in &labels {
        exps[l.index()] += 1;
    }
    let weight = LaurentPoly::term(
        Grammar::g().vars(),
        Monomial::from_int_exponents(&exps),
        int(1),
    );
    Ok(Labeling { labels, weight })
}

/// The weight formula for a scheme, computed from the statistics alone.
pub(crate) fn weight_exponents(p: &Permutation, scheme: Scheme) -> [i64; 6] {
    let s = stats(p);
    let n = p.len() as i64;
    let c = |k: usize| k as i64;
    match scheme {
        // x y z w u v
        Scheme::Exterior => [
            c(s.ep1),
            c(s.pdd),
            c(s.ep2) + 1,
            n - 2 * c(s.ep1 + s.ep2) - c(s.pdd),
            c(s.ep2),
            c(s.ep1),
        ],
        Scheme::Peak => [c(s.p1), c(s.dd), c(s.p2), c(s.dr), c(s.p2), c(s.p1)],
    }
}
