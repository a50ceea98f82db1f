use serde::Serialize;

use super::Permutation;

/// Every statistic computed from the definitions, with virtual boundary zeros.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct StatVector {
    /// Exterior peaks of pattern 132 (`pi_{i-1} < pi_{i+1}`), `pi_0 = 0`, `1 <= i <= n-1`.
    pub ep1: usize,
    /// Exterior peaks of pattern 231 (`pi_{i-1} > pi_{i+1}`).
    pub ep2: usize,
    /// Proper double descents, `2 <= i <= n-1`.
    pub pdd: usize,
    /// Peaks of pattern 132 with the non-strict `pi_{i-1} <= pi_{i+1}`, `pi_0 = pi_{n+1} = 0`.
    pub p1: usize,
    pub p2: usize,
    pub dd: usize,
    pub dr: usize,
    pub valleys: usize,
    /// Descents `pi_i > pi_{i+1}`, `1 <= i <= n-1`.
    pub des: usize,
    pub alternating: bool,
}

impl StatVector {
    pub fn ep(&self) -> usize {
        self.ep1 + self.ep2
    }

    pub fn peaks(&self) -> usize {
        self.p1 + self.p2
    }
}

pub fn stats(p: &Permutation) -> StatVector {
    let n = p.len();
    let at = |i: usize| p.at(i);
    let mut s = StatVector {
        alternating: p.is_alternating(),
        ..StatVector::default()
    };

    // exterior statistics: left boundary only
    for i in 1..n {
        let (a, b, c) = (at(i - 1), at(i), at(i + 1));
        if a < b && b > c {
            if a < c {
                s.ep1 += 1;
            } else {
                s.ep2 += 1;
            }
        }
        if i >= 2 && a > b && b > c {
            s.pdd += 1;
        }
        if b > c {
            s.des += 1;
        }
    }

    // peak statistics: both boundaries
    for i in 1..=n {
        let (a, b, c) = (at(i - 1), at(i), at(i + 1));
        match (a < b, b < c) {
            (true, false) => {
                if a <= c {
                    s.p1 += 1;
                } else {
                    s.p2 += 1;
                }
            }
            (false, true) => s.valleys += 1,
            (true, true) => s.dr += 1,
            (false, false) => s.dd += 1,
        }
    }
    s
}
