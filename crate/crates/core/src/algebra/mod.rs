//! Exact arithmetic kernel: half-integer exponents, monomials, Laurent polynomials.

mod halfint;
mod laurent;
mod monomial;
mod parse;

pub use halfint::HalfInt;
pub use laurent::{frac, int, rational_to_f64, LaurentPoly, VarSet};
pub use monomial::Monomial;

/// Exact rational number over arbitrary-precision integers.
pub type Rational = num_rational::BigRational;

#[cfg(test)]
mod tests;
