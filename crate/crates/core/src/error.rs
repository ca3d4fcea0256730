use thiserror::Error;

/// Errors surfaced by graph construction, the oracles, and the solvers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The instance is larger than the exact search is configured to accept.
    #[error("{operation} refused: n = {n} exceeds the limit of {limit}; raise the limit explicitly (worst-case time is exponential)")]
    Capability {
        operation: &'static str,
        n: usize,
        limit: usize,
    },

    /// The operation has no certified implementation for these parameters.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A certificate produced by the solver failed its own re-check.
    #[error("internal certificate failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_limit(operation: &'static str, n: usize, limit: usize) -> Result<()> {
    if n > limit {
        Err(Error::Capability {
            operation,
            n,
            limit,
        })
    } else {
        Ok(())
    }
}
