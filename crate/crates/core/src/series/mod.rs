//! Truncated power series in `t` with exact rational coefficients.

mod rhs;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::{int, LaurentPoly, Rational};
use crate::error::{Error, Result};

pub use rhs::{theorem_rhs, RhsId, TheoremRhs};

/// Coefficients of `t^0 .. t^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Rational>,
}

impl Series {
    /// Panics on an empty coefficient list; every series has at least a constant term.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs order >= 0");
        Series { coeffs }
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        let mut c: Vec<Rational> = coeffs.iter().map(|&v| int(v)).collect();
        c.resize(order + 1, Rational::zero());
        c.truncate(order + 1);
        Series::new(c)
    }

    pub fn zero(order: usize) -> Self {
        Series::new(vec![Rational::zero(); order + 1])
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Series::constant(Rational::one(), order)
    }

    /// `t` truncated at `order`.
    pub fn t(order: usize) -> Self {
        let mut s = Series::zero(order);
        if order >= 1 {
            s.coeffs[1] = Rational::one();
        }
        s
    }

    /// Series whose `n`-th coefficient is `values[n] / n!`.
    pub fn from_egf(values: &[Rational]) -> Self {
        let mut fact = Rational::one();
        let coeffs = values
            .iter()
            .enumerate()
            .map(|(n, v)| {
                if n > 0 {
                    fact *= int(n as i64);
                }
                v / &fact
            })
            .collect();
        Series::new(coeffs)
    }

    /// `n! * coeff(n)` for every `n`.
    pub fn egf_values(&self) -> Vec<Rational> {
        let mut fact = Rational::one();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| {
                if n > 0 {
                    fact *= int(n as i64);
                }
                c * &fact
            })
            .collect()
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Rational {
        self.coeffs.get(n).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn truncate(&self, order: usize) -> Series {
        let mut c = self.coeffs.clone();
        c.resize(order + 1, Rational::zero());
        Series::new(c)
    }

    pub fn scale(&self, c: &Rational) -> Series {
        Series::new(self.coeffs.iter().map(|v| v * c).collect())
    }

    /// Multiplies by `t`, keeping the order.
    pub fn shift(&self) -> Series {
        let mut c = Vec::with_capacity(self.coeffs.len());
        c.push(Rational::zero());
        c.extend_from_slice(&self.coeffs[..self.coeffs.len() - 1]);
        Series::new(c)
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|n| {
                let mut acc = Rational::zero();
                for k in 0..=n {
                    if !self.coeffs[k].is_zero() && !other.coeffs[n - k].is_zero() {
                        acc += &self.coeffs[k] * &other.coeffs[n - k];
                    }
                }
                acc
            })
            .collect();
        Series::new(coeffs)
    }

    pub fn recip(&self) -> Result<Series> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv0 = c0.recip();
        let mut out: Vec<Rational> = vec![inv0.clone()];
        for n in 1..=self.order() {
            let mut acc = Rational::zero();
            for k in 1..=n {
                acc += &self.coeffs[k] * &out[n - k];
            }
            out.push(-acc * &inv0);
        }
        Ok(Series::new(out))
    }

    pub fn div(&self, other: &Series) -> Result<Series> {
        Ok(self.mul(&other.recip()?))
    }

    /// Antiderivative with zero constant term; the order grows by one.
    pub fn integrate(&self) -> Series {
        let mut c = vec![Rational::zero()];
        c.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(n, v)| v / int(n as i64 + 1)),
        );
        Series::new(c)
    }

    /// Term-wise derivative; the order drops by one (order 0 stays 0).
    pub fn derivative(&self) -> Series {
        if self.order() == 0 {
            return Series::zero(0);
        }
        Series::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, v)| v * int(n as i64))
                .collect(),
        )
    }

    /// `exp(self)` for a series with zero constant term, via `E' = self' * E`.
    pub fn exp(&self) -> Result<Series> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Domain(
                "exp of a series needs a zero constant term".into(),
            ));
        }
        let order = self.order();
        let mut e = vec![Rational::one()];
        for n in 1..=order {
            // n e_n = sum_{k=1..n} k a_k e_{n-k}
            let mut acc = Rational::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * int(k as i64) * &e[n - k];
                }
            }
            e.push(acc / int(n as i64));
        }
        Ok(Series::new(e))
    }

    /// Renders `n: p/q` lines, one per coefficient.
    pub fn render(&self) -> String {
        let mut s = String::new();
        for (n, c) in self.coeffs.iter().enumerate() {
            s.push_str(&format!("{n}: {c}\n"));
        }
        s
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        Series::new(
            (0..=order)
                .map(|n| &self.coeffs[n] + &rhs.coeffs[n])
                .collect(),
        )
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        Series::new(
            (0..=order)
                .map(|n| &self.coeffs[n] - &rhs.coeffs[n])
                .collect(),
        )
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        Series::mul(self, rhs)
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// `exp(c1 t + c2 t^2)`.
pub fn exp_poly(c1: &Rational, c2: &Rational, order: usize) -> Series {
    let mut arg = Series::zero(order);
    if order >= 1 {
        arg.coeffs[1] = c1.clone();
    }
    if order >= 2 {
        arg.coeffs[2] = c2.clone();
    }
    arg.exp().expect("zero constant term")
}

/// `exp(c t)`.
pub fn exp_linear(c: &Rational, order: usize) -> Series {
    let mut coeffs = vec![Rational::one()];
    for n in 1..=order {
        let next = &coeffs[n - 1] * c / int(n as i64);
        coeffs.push(next);
    }
    Series::new(coeffs)
}

/// `(a)_n`.
pub fn pochhammer(a: &Rational, n: usize) -> Rational {
    let mut p = Rational::one();
    for k in 0..n {
        p *= a + int(k as i64);
    }
    p
}

/// `1F1(a; b; c t^2)`: the `t^(2n)` coefficient is `(a)_n c^n / ((b)_n n!)`.
pub fn hyp1f1_ct2(a: &Rational, b: &Rational, c: &Rational, order: usize) -> Result<Series> {
    let mut s = Series::zero(order);
    let mut term = Rational::one();
    s.coeffs[0] = term.clone();
    for n in 1..=order / 2 {
        let bn = b + int(n as i64 - 1);
        if bn.is_zero() {
            return Err(Error::PochhammerZero {
                b: b.to_string(),
                n,
            });
        }
        term = term * (a + int(n as i64 - 1)) * c / (bn * int(n as i64));
        s.coeffs[2 * n] = term.clone();
    }
    Ok(s)
}

/// `(sum q^n t^(2n)/(2n)!, sum q^n t^(2n+1)/(2n+1)!)`: `cosh(sqrt(q) t)` and `sinh(sqrt(q) t)/sqrt(q)`
/// with the square roots cancelled.
pub fn trig_sqrt(q: &Rational, order: usize) -> (Series, Series) {
    let mut even = Series::zero(order);
    let mut odd = Series::zero(order);
    let mut term = Rational::one();
    for k in 0..=order {
        if k > 0 {
            term /= int(k as i64);
            if k % 2 == 0 {
                term *= q;
            }
        }
        if k % 2 == 0 {
            even.coeffs[k] = term.clone();
        } else {
            odd.coeffs[k] = term.clone();
        }
    }
    (even, odd)
}

/// Binomial (exponential) convolution: `sum_k C(n,k) a_k b_(n-k)` for `n` up to the shorter length.
pub fn egf_mul(a: &[LaurentPoly], b: &[LaurentPoly]) -> Result<Vec<LaurentPoly>> {
    let len = a.len().min(b.len());
    let mut out = Vec::with_capacity(len);
    for n in 0..len {
        let mut acc = LaurentPoly::zero(a[0].vars());
        let mut binom = BigInt::one();
        for k in 0..=n {
            let term = a[k].checked_mul(&b[n - k])?;
            acc = acc.checked_add(&term.scale(&Rational::from_integer(binom.clone())))?;
            binom = binom * BigInt::from(n - k) / BigInt::from(k + 1);
        }
        out.push(acc);
    }
    Ok(out)
}

/// Absolute value of a rational.
pub(crate) fn rabs(x: &Rational) -> Rational {
    x.abs()
}
