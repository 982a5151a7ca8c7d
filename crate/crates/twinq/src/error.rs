use thiserror::Error;

/// Errors surfaced by every fallible operation in the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument violated a precondition (range, parity, dimension mismatch, ...).
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// Input text could not be decoded into a valid instance; the message
    /// names the violated invariant.
    #[error("parse error: {0}")]
    Parse(String),

    /// Randomized generation exhausted its retry budget.
    #[error("generation failed: {0}")]
    Generation(String),

    /// A size cap (qubit count, brute-force variable count) was exceeded.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// An internal contract was violated (caller broke a documented
    /// precondition that is only checkable at runtime).
    #[error("contract violation: {0}")]
    Contract(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parameter(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
