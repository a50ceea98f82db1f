use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{HalfInt, Monomial, Rational};
use crate::error::{Error, Result};

/// An ordered list of variable names; a variable's id is its position.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VarSet(Arc<[String]>);

impl VarSet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::Grammar(format!("variable `{n}` declared twice")));
            }
        }
        if names.len() > u16::MAX as usize {
            return Err(Error::Grammar("too many variables".into()));
        }
        Ok(VarSet(names.into()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn name(&self, id: u16) -> &str {
        &self.0[id as usize]
    }

    pub fn index_of(&self, name: &str) -> Option<u16> {
        self.0.iter().position(|n| n == name).map(|i| i as u16)
    }

    pub fn require(&self, name: &str) -> Result<u16> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    fn same(&self, other: &VarSet) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }

    fn check_same(&self, other: &VarSet) -> Result<()> {
        if self.same(other) {
            Ok(())
        } else {
            Err(Error::VarSetMismatch {
                left: self.0.join(" "),
                right: other.0.join(" "),
            })
        }
    }
}

/// Exact multivariate Laurent polynomial with rational coefficients and half-integer exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    vars: VarSet,
    terms: BTreeMap<Monomial, Rational>,
}

impl LaurentPoly {
    pub fn zero(vars: &VarSet) -> Self {
        LaurentPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &VarSet, c: Rational) -> Self {
        Self::term(vars, Monomial::one(), c)
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn term(vars: &VarSet, m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(m, c);
        p
    }

    pub fn var(vars: &VarSet, name: &str) -> Result<Self> {
        let id = vars.require(name)?;
        Ok(Self::term(
            vars,
            Monomial::var(id, HalfInt::ONE),
            Rational::one(),
        ))
    }

    /// Parses an expression such as `x*y*z^-1*v - 3/2*w^2` over `vars`.
    pub fn parse(vars: &VarSet, text: &str) -> Result<Self> {
        super::parse::parse_expr(vars, text)
    }

    /// Collects an accumulator map, dropping cancelled terms.
    pub(crate) fn from_accumulator(vars: &VarSet, acc: HashMap<Monomial, Rational>) -> Self {
        LaurentPoly {
            vars: vars.clone(),
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Adds `c * m` in place; an exact cancellation removes the term.
    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        if let Some(max) = m.max_var_id() {
            assert!(
                (max as usize) < self.vars.len(),
                "monomial outside variable set"
            );
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Coefficient of `m`, zero when absent.
    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient of the monomial written as e.g. `x*y*z*w*v`.
    pub fn coeff_of(&self, monomial: &str) -> Result<Rational> {
        let p = Self::parse(&self.vars, monomial)?;
        match p.as_single_term() {
            Some((m, c)) if c.is_one() => Ok(self.coeff(m)),
            _ => Err(Error::Domain(format!("`{monomial}` is not a monomial"))),
        }
    }

    /// The lone term of a one-term polynomial.
    pub fn as_single_term(&self) -> Option<(&Monomial, &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// The constant value, if this polynomial is a constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn checked_add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.vars.check_same(&other.vars)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.vars.check_same(&other.vars)?;
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        Ok(Self::from_accumulator(&self.vars, acc))
    }

    pub fn scale(&self, c: &Rational) -> LaurentPoly {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> LaurentPoly {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    /// Raises to a half-integer power.
    ///
    /// A single term `c*m` accepts any integer power, and half-integer powers when `c = 1`
    /// and every exponent of `m` stays half-integral. Anything else needs a nonnegative
    /// integer exponent.
    pub fn pow(&self, e: HalfInt) -> Result<LaurentPoly> {
        if e.is_zero() {
            return Ok(Self::one(&self.vars));
        }
        let fail = || Error::NonMonomialPower {
            base: self.to_string(),
            exp: e.to_string(),
        };
        if let Some((m, c)) = self.as_single_term() {
            let coeff = if let Some(k) = e.to_integer() {
                rational_powi(c, k)
            } else if c.is_one() {
                Rational::one()
            } else {
                return Err(fail());
            };
            let mut pairs = Vec::with_capacity(m.entries().len());
            for &(v, ve) in m.entries() {
                pairs.push((v, ve.checked_mul(e).ok_or_else(fail)?));
            }
            return Ok(Self::term(&self.vars, Monomial::from_pairs(pairs), coeff));
        }
        let k = match e.to_integer() {
            Some(k) if k > 0 => k as u64,
            _ => return Err(fail()),
        };
        if self.is_zero() {
            return Ok(self.clone());
        }
        Ok(self.powu(k))
    }

    pub fn powu(&self, mut k: u64) -> LaurentPoly {
        let mut result = Self::one(&self.vars);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Simultaneous substitution within the same variable set.
    pub fn substitute(&self, bindings: &BTreeMap<String, LaurentPoly>) -> Result<LaurentPoly> {
        let target = self.vars.clone();
        self.substitute_into(&target, bindings)
    }

    /// Simultaneous substitution producing a polynomial over `target`.
    ///
    /// Unbound variables map to the same-named variable of `target`.
    pub fn substitute_into(
        &self,
        target: &VarSet,
        bindings: &BTreeMap<String, LaurentPoly>,
    ) -> Result<LaurentPoly> {
        let mut images = Vec::with_capacity(self.vars.len());
        for name in bindings.keys() {
            self.vars.require(name)?;
        }
        for name in self.vars.names() {
            let image = match bindings.get(name) {
                Some(p) => {
                    target.check_same(&p.vars)?;
                    p.clone()
                }
                None => LaurentPoly::var(target, name)?,
            };
            images.push(image);
        }
        let mut powers: HashMap<(u16, HalfInt), LaurentPoly> = HashMap::new();
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut prod = Self::constant(target, c.clone());
            for &(v, e) in m.entries() {
                let pw = match powers.get(&(v, e)) {
                    Some(p) => p.clone(),
                    None => {
                        let p = images[v as usize].pow(e)?;
                        powers.insert((v, e), p.clone());
                        p
                    }
                };
                prod = &prod * &pw;
            }
            for (pm, pc) in prod.terms {
                out.add_term(pm, pc);
            }
        }
        Ok(out)
    }

    /// Exact evaluation at a rational point given by variable name.
    pub fn eval(&self, point: &BTreeMap<String, Rational>) -> Result<Rational> {
        let mut values = Vec::with_capacity(self.vars.len());
        for name in self.vars.names() {
            values.push(point.get(name).cloned());
        }
        self.eval_partial(&values)
    }

    /// Exact evaluation with values indexed by variable id.
    pub fn eval_at(&self, values: &[Rational]) -> Result<Rational> {
        let values: Vec<Option<Rational>> = values.iter().cloned().map(Some).collect();
        self.eval_partial(&values)
    }

    fn eval_partial(&self, values: &[Option<Rational>]) -> Result<Rational> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.entries() {
                let name = self.vars.name(v);
                let x = values
                    .get(v as usize)
                    .cloned()
                    .flatten()
                    .ok_or_else(|| Error::Unbound(name.to_string()))?;
                let k = e.to_integer().ok_or_else(|| Error::HalfIntegerEval {
                    var: name.to_string(),
                    exp: e.to_string(),
                })?;
                if x.is_zero() && k < 0 {
                    return Err(Error::ZeroToNegativePower {
                        var: name.to_string(),
                        exp: e.to_string(),
                    });
                }
                t *= rational_powi(&x, k);
            }
            total += t;
        }
        Ok(total)
    }

    /// Floating-point evaluation at positive (for half exponents) values indexed by id.
    pub fn eval_f64(&self, values: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(m, c)| {
                m.entries().iter().fold(rational_to_f64(c), |acc, &(v, e)| {
                    let x = values[v as usize];
                    match e.to_integer() {
                        Some(k) => acc * x.powi(k as i32),
                        None => acc * x.powf(e.to_f64()),
                    }
                })
            })
            .sum()
    }
}

pub(crate) fn rational_powi(x: &Rational, k: i64) -> Rational {
    let base = if k < 0 { x.recip() } else { x.clone() };
    let k = k.unsigned_abs();
    let mut result = Rational::one();
    let mut b = base;
    let mut e = k;
    while e > 0 {
        if e & 1 == 1 {
            result *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    result
}

pub fn rational_to_f64(x: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    match (x.numer().to_f64(), x.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            // Scale both parts down to stay in range.
            let shift = x.numer().bits().max(x.denom().bits()).saturating_sub(1000);
            let n = (x.numer() >> shift).to_f64().unwrap_or(f64::NAN);
            let d = (x.denom() >> shift).to_f64().unwrap_or(f64::NAN);
            n / d
        }
    }
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).expect("variable sets differ")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_sub(rhs).expect("variable sets differ")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).expect("variable sets differ")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

/// Renders a monomial as `x*z^-1/2*w^2`; the empty monomial renders as the empty string.
pub(crate) fn render_monomial(vars: &VarSet, m: &Monomial) -> String {
    let mut parts = Vec::with_capacity(m.entries().len());
    for &(v, e) in m.entries() {
        if e == HalfInt::ONE {
            parts.push(vars.name(v).to_string());
        } else {
            parts.push(format!("{}^{}", vars.name(v), e));
        }
    }
    parts.join("*")
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono = render_monomial(&self.vars, m);
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}
