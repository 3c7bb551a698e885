use thiserror::Error;

use crate::scalar::Domain;

pub type Result<T, E = TropError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TropError {
    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("{0}")]
    Domain(String),

    #[error("entry outside {expected}: {detail}")]
    OutsideDomain { expected: Domain, detail: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A self-check that should be unreachable failed.
    #[error("internal verification failed: {0}")]
    Internal(String),

    #[error("size guard: {0}")]
    SizeGuard(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl TropError {
    pub(crate) fn shape(msg: impl Into<String>) -> Self {
        TropError::Shape(msg.into())
    }

    pub fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        TropError::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
