//! Grammar calculus for permutation statistics.
//!
//! The crate computes formal derivatives `D^n` with respect to context-free grammars over
//! exact Laurent polynomials, enumerates permutation statistics by brute force, builds
//! exact truncated power series for closed-form generating functions, and evaluates the
//! parabolic cylinder closed forms in floating point. The [`verify`] module ties these
//! together into a registry of checks.

pub mod algebra;
pub mod error;
pub mod grammar;
pub mod perm;
pub mod series;
pub mod special;
pub mod verify;

pub use algebra::{HalfInt, LaurentPoly, Monomial, Rational, VarSet};
pub use error::{Error, Result};
pub use grammar::{parse_grammar, DerivationCache, Grammar};
