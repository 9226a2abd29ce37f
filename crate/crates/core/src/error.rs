use thiserror::Error;

/// Errors raised by the geometry kernel and the layout algorithms.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The caller broke a precondition (bad arguments, invalid instance).
    #[error("usage error: {0}")]
    Usage(String),
    /// The arguments are well-formed but the request has no answer.
    #[error("domain error: {0}")]
    Domain(String),
    /// An invariant the algorithms guarantee did not hold.
    #[error("internal error: {0}")]
    Internal(String),
    /// Real-mode construction ran out of floating-point resolution.
    #[error("precision exhausted at recursion depth {depth}: {detail}")]
    Precision { depth: usize, detail: String },
}

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
