use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    Validation(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// An exhaustive enumeration would exceed its size guard.
    #[error("enumeration budget exceeded for {what}: limit {limit}, requested {requested}{hint}")]
    Budget {
        what: &'static str,
        limit: usize,
        requested: usize,
        hint: &'static str,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::Validation(msg.into())
}
