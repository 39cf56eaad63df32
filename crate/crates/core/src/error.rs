use thiserror::Error;

use crate::bicomm::BcPolynomial;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input text. Line and column are 1-based.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid presentation: {0}")]
    Validation(String),

    /// An argument outside the domain of the operation.
    #[error("usage error: {0}")]
    Usage(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{what}: budget of {limit} exhausted")]
    Budget { what: String, limit: usize },

    /// Completion ran out of steps. The partial basis generates the same
    /// ideal as the input but is not yet closed under compositions.
    #[error("completion budget of {limit} steps exhausted with {} basis elements", partial.len())]
    CompletionBudget {
        limit: usize,
        partial: Vec<BcPolynomial>,
    },

    /// The sampled counting window never became polynomial.
    #[error("growth sequence did not stabilize: {0}")]
    Unstable(String),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    /// True for errors caused by resource limits rather than bad input.
    pub fn is_resource(&self) -> bool {
        matches!(
            self,
            Error::Budget { .. } | Error::CompletionBudget { .. } | Error::Unstable(_)
        )
    }
}
