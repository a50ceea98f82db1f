use std::cmp::Ordering;

use super::HalfInt;

/// A product of variables with half-integer exponents.
///
/// Entries are sorted by variable id and never carry a zero exponent, so the derived
/// ordering is lexicographic on (variable id, exponent) and equality is structural.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    entries: Vec<(u16, HalfInt)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(id: u16, exp: HalfInt) -> Self {
        let mut m = Monomial::one();
        m.add_exponent(id, exp);
        m
    }

    /// Builds a monomial from (id, exponent) pairs in any order; repeated ids accumulate.
    pub fn from_pairs<I: IntoIterator<Item = (u16, HalfInt)>>(pairs: I) -> Self {
        let mut m = Monomial::one();
        for (id, e) in pairs {
            m.add_exponent(id, e);
        }
        m
    }

    /// Builds a monomial from integer exponents indexed by variable id.
    pub fn from_int_exponents(exps: &[i64]) -> Self {
        Monomial::from_pairs(
            exps.iter()
                .enumerate()
                .map(|(i, &e)| (i as u16, HalfInt::from_int(e))),
        )
    }

    pub fn is_one(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(u16, HalfInt)] {
        &self.entries
    }

    pub fn exponent(&self, id: u16) -> HalfInt {
        match self.entries.binary_search_by_key(&id, |&(v, _)| v) {
            Ok(pos) => self.entries[pos].1,
            Err(_) => HalfInt::ZERO,
        }
    }

    pub fn add_exponent(&mut self, id: u16, delta: HalfInt) {
        if delta.is_zero() {
            return;
        }
        match self.entries.binary_search_by_key(&id, |&(v, _)| v) {
            Ok(pos) => {
                let e = self.entries[pos].1 + delta;
                if e.is_zero() {
                    self.entries.remove(pos);
                } else {
                    self.entries[pos].1 = e;
                }
            }
            Err(pos) => self.entries.insert(pos, (id, delta)),
        }
    }

    pub fn with_exponent_added(&self, id: u16, delta: HalfInt) -> Self {
        let mut m = self.clone();
        m.add_exponent(id, delta);
        m
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.entries, &other.entries);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if !e.is_zero() {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { entries: out }
    }

    pub fn inverse(&self) -> Monomial {
        Monomial {
            entries: self.entries.iter().map(|&(v, e)| (v, -e)).collect(),
        }
    }

    /// Total degree (sum of exponents).
    pub fn degree(&self) -> HalfInt {
        self.entries
            .iter()
            .fold(HalfInt::ZERO, |acc, &(_, e)| acc + e)
    }

    pub fn max_var_id(&self) -> Option<u16> {
        self.entries.last().map(|&(v, _)| v)
    }
}
