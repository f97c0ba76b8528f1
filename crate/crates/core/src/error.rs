use thiserror::Error;

/// Errors raised by the construction, application and verification routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// Malformed or inconsistent input.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// The requested object would exceed the configured size bound.
    #[error("resource bound exceeded: {what} needs dimension {required}, limit is {limit}")]
    Resource {
        what: String,
        required: u128,
        limit: u128,
    },

    /// A cross-check between two independent routes disagreed.
    #[error("consistency check failed: {0}")]
    Consistency(String),
}

impl Error {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
