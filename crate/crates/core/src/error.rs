use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("variable sets differ: [{left}] vs [{right}]")]
    VarSetMismatch { left: String, right: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("cannot raise non-monomial `{base}` to the power {exp}")]
    NonMonomialPower { base: String, exp: String },

    #[error("exponent of `{var}` is not an integer ({exp}); exact evaluation undefined")]
    HalfIntegerEval { var: String, exp: String },

    #[error("zero raised to the negative power {exp} at variable `{var}`")]
    ZeroToNegativePower { var: String, exp: String },

    #[error("no value bound for variable `{0}`")]
    Unbound(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("grammar error: {0}")]
    Grammar(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("n = {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("{0}")]
    Domain(String),

    #[error("series division by a series with zero constant term")]
    ZeroConstantTerm,

    #[error("Pochhammer ({b})_{n} vanishes inside the truncation")]
    PochhammerZero { b: String, n: usize },

    #[error("numeric evaluation failed: {0}")]
    Numeric(String),

    #[error("unknown check `{0}`")]
    UnknownCheck(String),

    #[error("mode {mode} is not permitted for check `{id}`")]
    ModeNotPermitted { id: String, mode: String },

    #[error("sequence file {path}, line {line}: {msg}")]
    SequenceFormat {
        path: String,
        line: usize,
        msg: String,
    },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
