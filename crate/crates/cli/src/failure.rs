use std::fmt;

use pseudosym_core::Error;

/// Process exit codes.
pub const EXIT_OK: u8 = 0;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_MISMATCH: u8 = 3;
pub const EXIT_INTERNAL: u8 = 4;

/// A failed run, classified by exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    /// Bad parameters, malformed files, unreadable paths.
    Invalid(String),
    /// A computed object disagrees with the closed form or a fixture.
    Mismatch(String),
    /// The pipeline contradicted itself.
    Internal(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Invalid(_) => EXIT_INVALID,
            Failure::Mismatch(_) => EXIT_MISMATCH,
            Failure::Internal(_) => EXIT_INTERNAL,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Invalid(m) | Failure::Mismatch(m) | Failure::Internal(m) => m,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.message())
    }
}

impl std::error::Error for Failure {}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::InvalidParams(_)
            | Error::NotCoprime(_)
            | Error::Parse { .. }
            | Error::Dimension { .. }
            | Error::Precondition(_)
            | Error::Unsupported(_) => Failure::Invalid(msg),
            Error::TheoremViolation(_) => Failure::Mismatch(msg),
            Error::Inconsistency(_) | Error::OrderingMismatch | Error::ZeroPolynomial => Failure::Internal(msg),
        }
    }
}
