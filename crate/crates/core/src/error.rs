use thiserror::Error;

/// Errors raised by every engine in this crate.
///
/// Search-bound and cap violations are reported explicitly; no operation
/// silently truncates a search and returns a partial answer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("search bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("cap exceeded: {what} is {value}, cap is {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("missing certificate: {0}")]
    MissingCertificate(String),

    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
