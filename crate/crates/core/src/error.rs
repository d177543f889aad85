use thiserror::Error;

/// Every failure the library can report.
///
/// Negative mathematical verdicts (a graph that is not unmixed, a lattice
/// that is not full) are ordinary return values, never errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    Validation(String),
    #[error("{what} size {size} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("{0}")]
    Io(String),
    /// A postcondition that should always hold was found violated.
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl Error {
    /// Stable short tag used in machine-readable CLI diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "parse",
            Error::Validation(_) => "validation",
            Error::CapExceeded { .. } => "cap-exceeded",
            Error::Io(_) => "io",
            Error::Internal(_) => "internal",
        }
    }

    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
