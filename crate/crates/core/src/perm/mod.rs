//! Permutations, their statistics, grammatical labelings, and brute-force generating polynomials.

mod families;
mod labeling;
mod stats;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};

pub use families::{
    enumerate_poly, g_vars, involution_count, read_triangle_csv, specialized_poly, triangle,
    w_vars, write_triangle_csv, EnumConfig, Family, Target, DEFAULT_CAP, HARD_CAP,
};
pub use labeling::{label, Label, Labeling, Scheme};
pub use stats::{stats, StatVector};

/// A permutation of `[n]` in one-line notation, 1-based values.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    values: Vec<u8>,
}

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        if n > u8::MAX as usize {
            return Err(Error::InvalidPermutation(format!("length {n} too large")));
        }
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{values:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation {
            values: values.into_iter().map(|v| v as u8).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (1..=n as u8).collect(),
        }
    }

    pub fn empty() -> Self {
        Permutation { values: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    /// `pi_i` for `1 <= i <= n`, and 0 for the virtual boundaries `i = 0` and `i = n + 1`.
    pub fn at(&self, i: usize) -> u8 {
        if i == 0 || i > self.values.len() {
            0
        } else {
            self.values[i - 1]
        }
    }

    pub fn is_involution(&self) -> bool {
        self.values
            .iter()
            .enumerate()
            .all(|(i, &v)| self.values[v as usize - 1] as usize == i + 1)
    }

    /// Down-up: `pi_1 > pi_2 < pi_3 > ...`.
    pub fn is_alternating(&self) -> bool {
        self.values.windows(2).enumerate().all(
            |(i, w)| {
                if i % 2 == 0 {
                    w[0] > w[1]
                } else {
                    w[0] < w[1]
                }
            },
        )
    }

    /// The `n + 1` permutations obtained by inserting `n + 1` before each entry or at the end.
    pub fn insertion_children(&self) -> Vec<Permutation> {
        let n = self.values.len();
        let big = (n + 1) as u8;
        (0..=n)
            .map(|slot| {
                let mut v = Vec::with_capacity(n + 1);
                v.extend_from_slice(&self.values[..slot]);
                v.push(big);
                v.extend_from_slice(&self.values[slot..]);
                Permutation { values: v }
            })
            .collect()
    }

    /// Number of windows of `|pattern|` adjacent entries whose relative order matches `pattern`.
    pub fn consecutive_count(&self, pattern: &Permutation) -> Result<usize> {
        let m = pattern.len();
        if m == 0 {
            return Err(Error::InvalidPermutation("empty pattern".into()));
        }
        if m > self.len() {
            return Ok(0);
        }
        Ok(self
            .values
            .windows(m)
            .filter(|w| reduces_to(w, &pattern.values))
            .count())
    }

    /// Lexicographic successor, or `None` at the last permutation.
    pub fn next_lex(&self) -> Option<Permutation> {
        let mut v = self.values.clone();
        next_permutation(&mut v).then_some(Permutation { values: v })
    }
}

fn reduces_to(window: &[u8], pattern: &[u8]) -> bool {
    // ranks agree iff every pair compares the same way
    for i in 0..window.len() {
        for j in i + 1..window.len() {
            if (window[i] < window[j]) != (pattern[i] < pattern[j]) {
                return false;
            }
        }
    }
    true
}

/// Standard in-place lexicographic successor.
fn next_permutation(v: &mut [u8]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Calls `f` on every permutation of `[n]` in lexicographic order.
pub fn for_each_permutation<F: FnMut(&Permutation)>(n: usize, mut f: F) {
    let mut p = Permutation::identity(n);
    loop {
        f(&p);
        if !next_permutation(&mut p.values) {
            break;
        }
    }
}

/// Folds over `S_n` in parallel, one task per first entry; partial results are merged in
/// first-entry order.
pub fn fold_permutations<T, I, F, M>(n: usize, init: I, fold: F, merge: M) -> T
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    F: Fn(&mut T, &Permutation) + Sync + Send,
    M: Fn(T, T) -> T + Sync + Send,
{
    if n <= 1 {
        let mut acc = init();
        for_each_permutation(n, |p| fold(&mut acc, p));
        return acc;
    }
    let parts: Vec<T> = (1..=n as u8)
        .into_par_iter()
        .map(|first| {
            let mut acc = init();
            let mut rest: Vec<u8> = (1..=n as u8).filter(|&v| v != first).collect();
            let mut p = Permutation {
                values: Vec::with_capacity(n),
            };
            loop {
                p.values.clear();
                p.values.push(first);
                p.values.extend_from_slice(&rest);
                fold(&mut acc, &p);
                if !next_permutation(&mut rest) {
                    break;
                }
            }
            acc
        })
        .collect();
    parts.into_iter().reduce(merge).unwrap_or_else(init)
}

impl FromStr for Permutation {
    type Err = Error;

    /// Digits without separators (`534621`) or whitespace/comma separated values.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let vals: Option<Vec<usize>> = if s.contains(|c: char| c.is_whitespace() || c == ',') {
            s.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().ok())
                .collect()
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect()
        };
        let vals = vals.ok_or_else(|| Error::InvalidPermutation(s.to_string()))?;
        Permutation::new(vals)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.values.len() <= 9 {
            for v in &self.values {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(" "))
        }
    }
}

#[cfg(test)]
mod tests;
