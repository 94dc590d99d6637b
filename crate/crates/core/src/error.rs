use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A documented precondition of an operation was not met by the caller.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// Interpolation was asked to pass through two points with equal abscissa.
    #[error("duplicate interpolation abscissa {0}")]
    DuplicateAbscissa(String),
    /// A certified computation reached a state that a proven bound rules out.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
