use alloc::string::String;

use thiserror::Error;

/// Errors produced by the algebra kernel and the theorem checks built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("operands use different monomial orderings")]
    OrderingMismatch,

    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error("{0} violated")]
    InvalidParams(&'static str),

    #[error("generators are not coprime (gcd = {0})")]
    NotCoprime(u64),

    #[error("unsupported parameters: {0}")]
    Unsupported(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: &'static str },
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
