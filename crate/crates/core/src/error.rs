use thiserror::Error;

/// Errors raised across the toolkit.
///
/// The CLI maps `Input` and `Budget` to exit status 2; `Internal` indicates a
/// consistency failure inside an algorithm and should never surface in
/// normal use.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
