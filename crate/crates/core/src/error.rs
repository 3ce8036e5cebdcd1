use thiserror::Error;

use crate::exact::Integer;

/// Errors raised anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("constant term must be 1 for inversion")]
    NonUnitConstantTerm,

    #[error("cycle classes live on different ambient data")]
    CycleMismatch,

    #[error("expected {expected} exponents, got {got}")]
    ExponentCount { expected: usize, got: usize },

    #[error("composition weight {weight} exceeds the enumeration cap {cap}")]
    WeightCap { weight: usize, cap: usize },

    #[error("{0}")]
    InvalidInput(String),

    #[error("primality of {0} is outside the deterministic range")]
    PrimeCapacity(Integer),

    #[error("internal consistency failure in {what}: {left} != {right}")]
    PathDisagreement {
        what: &'static str,
        left: Integer,
        right: Integer,
    },

    #[error("elements belong to different base fields")]
    MixedFields,

    #[error("{0}")]
    Field(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    /// Process exit code for the CLI: 3 for internal consistency failures,
    /// 2 for everything the caller can fix.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::PathDisagreement { .. } => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
