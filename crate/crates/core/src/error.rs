use thiserror::Error;

/// Errors raised by the exact kernel and the algorithms built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("mismatched surd base: sqrt({left}) vs sqrt({right})")]
    MismatchedBase { left: u32, right: u32 },

    #[error("invalid surd base {0}: must be 0 or a squarefree integer >= 2")]
    InvalidBase(u32),

    #[error("division by zero")]
    DivisionByZero,

    #[error("gcd of all-zero inputs is undefined")]
    AllZero,

    #[error("inexact division: nonzero remainder")]
    InexactDivision,

    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,

    #[error("components are not coprime: {0}")]
    NotCoprime(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
