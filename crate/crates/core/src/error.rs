use thiserror::Error;

/// Errors surfaced by the library.
///
/// `Internal` is reserved for conditions that can only arise from a bug in the
/// exact arithmetic (an inexact division, a failed cancellation).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid block profile: {0}")]
    InvalidProfile(String),

    #[error("invalid dent set: {0}")]
    InvalidDentSet(String),

    #[error("skew shape requires {inner} to be contained in {outer}")]
    Containment { inner: String, outer: String },

    #[error("size limit exceeded: {what} (limit {limit}); rerun with --unsafe-max to override")]
    SizeLimit { what: String, limit: u64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}
