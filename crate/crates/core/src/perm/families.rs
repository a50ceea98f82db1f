use std::collections::HashMap;
use std::fmt;
use std::io;
use std::str::FromStr;
use std::sync::LazyLock;

use num_bigint::BigInt;
use serde::Serialize;

use super::labeling::weight_exponents;
use super::{fold_permutations, stats, Permutation, Scheme};
use crate::algebra::{LaurentPoly, Monomial, Rational, VarSet};
use crate::error::{Error, Result};
use crate::grammar::Grammar;

/// Largest `n` allowed even with the large-enumeration flag.
pub const HARD_CAP: usize = 11;
pub const DEFAULT_CAP: usize = 9;

/// Guards brute-force runtime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EnumConfig {
    pub cap: usize,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig { cap: DEFAULT_CAP }
    }
}

impl EnumConfig {
    /// Raises the cap to at most [`HARD_CAP`].
    pub fn large(cap: usize) -> Result<Self> {
        if cap > HARD_CAP {
            return Err(Error::CapExceeded {
                n: cap,
                cap: HARD_CAP,
            });
        }
        Ok(EnumConfig { cap })
    }

    pub fn check(&self, n: usize) -> Result<()> {
        if n > self.cap {
            Err(Error::CapExceeded { n, cap: self.cap })
        } else {
            Ok(())
        }
    }
}

/// Polynomials in the six variables of `G` (or five for `W`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Target {
    P,
    Q,
    W,
}

/// Classical specializations, each computed straight from the statistics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    /// `sum x^ep1 y^ep2`
    T,
    /// `sum x^ep`
    GesselT,
    /// `sum x^(#231 + #321)` over consecutive occurrences
    L,
    /// `sum y^pdd`
    U,
    /// `sum x^(p-1) y^dd z^valleys w^dr`, n >= 1
    F,
    /// `T` restricted to down-up permutations
    TA,
    /// `sum x^ep1`
    Tbar,
    /// `sum y^ep2`
    Ttilde,
    /// `sum x^des`
    Eulerian,
    /// `sum x^ep y^pdd z^(ep+1) w^(n-2ep-pdd)`
    FuP,
    /// `sum x^(2ep+1) y^(n-2ep)`
    ExtPeakXY,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::T,
        Family::GesselT,
        Family::L,
        Family::U,
        Family::F,
        Family::TA,
        Family::Tbar,
        Family::Ttilde,
        Family::Eulerian,
        Family::FuP,
        Family::ExtPeakXY,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::T => "T",
            Family::GesselT => "GesselT",
            Family::L => "L",
            Family::U => "U",
            Family::F => "F",
            Family::TA => "TA",
            Family::Tbar => "Tbar",
            Family::Ttilde => "Ttilde",
            Family::Eulerian => "Eulerian",
            Family::FuP => "FuP",
            Family::ExtPeakXY => "ExtPeakXY",
        }
    }

    pub fn var_names(self) -> &'static [&'static str] {
        match self {
            Family::T | Family::TA | Family::ExtPeakXY => &["x", "y"],
            Family::GesselT | Family::L | Family::Tbar | Family::Eulerian => &["x"],
            Family::U | Family::Ttilde => &["y"],
            Family::F | Family::FuP => &["x", "y", "z", "w"],
        }
    }

    pub fn vars(self) -> VarSet {
        VarSet::new(self.var_names()).expect("distinct names")
    }

    fn min_n(self) -> usize {
        match self {
            Family::F => 1,
            _ => 0,
        }
    }

    /// Exponent vector contributed by `p`, or `None` when `p` is not counted.
    fn exponents(self, p: &Permutation) -> Option<Vec<i64>> {
        let s = stats(p);
        let n = p.len() as i64;
        let c = |k: usize| k as i64;
        Some(match self {
            Family::T => vec![c(s.ep1), c(s.ep2)],
            Family::GesselT => vec![c(s.ep())],
            Family::L => vec![c(
                p.consecutive_count(&PAT_231).unwrap() + p.consecutive_count(&PAT_321).unwrap()
            )],
            Family::U => vec![c(s.pdd)],
            Family::F => vec![c(s.peaks()) - 1, c(s.dd), c(s.valleys), c(s.dr)],
            Family::TA => {
                if !s.alternating {
                    return None;
                }
                vec![c(s.ep1), c(s.ep2)]
            }
            Family::Tbar => vec![c(s.ep1)],
            Family::Ttilde => vec![c(s.ep2)],
            Family::Eulerian => vec![c(s.des)],
            Family::FuP => vec![
                c(s.ep()),
                c(s.pdd),
                c(s.ep()) + 1,
                n - 2 * c(s.ep()) - c(s.pdd),
            ],
            Family::ExtPeakXY => vec![2 * c(s.ep()) + 1, n - 2 * c(s.ep())],
        })
    }
}

static PAT_231: LazyLock<Permutation> = LazyLock::new(|| Permutation::new(vec![2, 3, 1]).unwrap());
static PAT_321: LazyLock<Permutation> = LazyLock::new(|| Permutation::new(vec![3, 2, 1]).unwrap());

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Domain(format!("unknown family {s:?}")))
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "P" | "p" => Ok(Target::P),
            "Q" | "q" => Ok(Target::Q),
            "W" | "w" => Ok(Target::W),
            _ => Err(Error::Domain(format!("unknown target {s:?}"))),
        }
    }
}

/// Variables of `W_n`: those of `G` without `v`.
pub fn w_vars() -> VarSet {
    static W: LazyLock<VarSet> = LazyLock::new(|| VarSet::new(&["x", "y", "z", "w", "u"]).unwrap());
    W.clone()
}

pub fn g_vars() -> VarSet {
    Grammar::g().vars().clone()
}

type Tally = HashMap<Vec<i64>, u64>;

fn tally<F>(n: usize, f: F) -> Tally
where
    F: Fn(&Permutation) -> Option<Vec<i64>> + Sync + Send,
{
    fold_permutations(
        n,
        Tally::new,
        |acc, p| {
            if let Some(k) = f(p) {
                *acc.entry(k).or_insert(0) += 1;
            }
        },
        |mut a, b| {
            for (k, c) in b {
                *a.entry(k).or_insert(0) += c;
            }
            a
        },
    )
}

fn tally_to_poly(vars: &VarSet, t: Tally) -> LaurentPoly {
    let acc = t
        .into_iter()
        .map(|(k, c)| {
            (
                Monomial::from_int_exponents(&k),
                Rational::from_integer(BigInt::from(c)),
            )
        })
        .collect();
    LaurentPoly::from_accumulator(vars, acc)
}

/// `P_n`, `Q_n` or `W_n` summed over `S_n` from the weight formulas.
pub fn enumerate_poly(n: usize, target: Target, cfg: &EnumConfig) -> Result<LaurentPoly> {
    cfg.check(n)?;
    if n == 0 && target != Target::P {
        return Err(Error::Domain(format!("{target:?}_n is defined for n >= 1")));
    }
    match target {
        Target::P => Ok(tally_to_poly(
            &g_vars(),
            tally(n, |p| Some(weight_exponents(p, Scheme::Exterior).to_vec())),
        )),
        Target::Q => Ok(tally_to_poly(
            &g_vars(),
            tally(n, |p| Some(weight_exponents(p, Scheme::Peak).to_vec())),
        )),
        Target::W => Ok(tally_to_poly(
            &w_vars(),
            tally(n, |p| {
                let s = stats(p);
                let c = |k: usize| k as i64;
                Some(vec![c(s.p1), c(s.dd), c(s.valleys) + 1, c(s.dr), c(s.p2)])
            }),
        )),
    }
}

pub fn specialized_poly(n: usize, family: Family, cfg: &EnumConfig) -> Result<LaurentPoly> {
    cfg.check(n)?;
    if n < family.min_n() {
        return Err(Error::Domain(format!(
            "{family} is defined for n >= {}",
            family.min_n()
        )));
    }
    Ok(tally_to_poly(
        &family.vars(),
        tally(n, |p| family.exponents(p)),
    ))
}

/// Number of involutions of `[n]`, counted directly.
pub fn involution_count(n: usize, cfg: &EnumConfig) -> Result<u64> {
    cfg.check(n)?;
    Ok(fold_permutations(
        n,
        || 0u64,
        |acc, p| *acc += p.is_involution() as u64,
        |a, b| a + b,
    ))
}

/// Rows `0..=n_max` of a one-variable family: entry `[n][k]` is the coefficient of the `k`-th power.
pub fn triangle(family: Family, n_max: usize, cfg: &EnumConfig) -> Result<Vec<Vec<u64>>> {
    if family.var_names().len() != 1 {
        return Err(Error::Domain(format!(
            "{family} is not a one-variable family"
        )));
    }
    cfg.check(n_max)?;
    (family.min_n()..=n_max)
        .map(|n| {
            let t = tally(n, |p| family.exponents(p));
            let deg = t.keys().map(|k| k[0]).max().unwrap_or(0) as usize;
            let mut row = vec![0u64; deg + 1];
            for (k, c) in t {
                row[k[0] as usize] += c;
            }
            Ok(row)
        })
        .collect()
}

/// Wide CSV: header `n,0,1,...`, one row per `n`, trailing cells left empty.
pub fn write_triangle_csv<W: io::Write>(rows: &[Vec<u64>], first_n: usize, out: W) -> Result<()> {
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(out);
    let mut header = vec!["n".to_string()];
    header.extend((0..width).map(|k| k.to_string()));
    w.write_record(&header).map_err(csv_err)?;
    for (i, row) in rows.iter().enumerate() {
        let mut rec = vec![(first_n + i).to_string()];
        rec.extend(row.iter().map(u64::to_string));
        rec.resize(width + 1, String::new());
        w.write_record(&rec).map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

/// Inverse of [`write_triangle_csv`]; returns `(n, row)` pairs.
pub fn read_triangle_csv<R: io::Read>(input: R) -> Result<Vec<(usize, Vec<BigInt>)>> {
    let mut r = csv::ReaderBuilder::new().flexible(true).from_reader(input);
    let mut out = Vec::new();
    for (i, rec) in r.records().enumerate() {
        let line = i + 2;
        let rec = rec.map_err(csv_err)?;
        let bad = |msg: String| Error::Parse { line, msg };
        let mut cells = rec.iter();
        let n = cells
            .next()
            .ok_or_else(|| bad("empty row".into()))?
            .trim()
            .parse::<usize>()
            .map_err(|e| bad(format!("row index: {e}")))?;
        let row = cells
            .map(str::trim)
            .filter(|c| !c.is_empty())
            .map(|c| c.parse::<BigInt>().map_err(|e| bad(format!("{c:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        out.push((n, row));
    }
    Ok(out)
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(e.to_string())
}
