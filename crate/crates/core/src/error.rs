use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Input lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Two vectors of different dimension were combined.
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    /// No check with this name is registered.
    #[error("unknown check `{0}`")]
    UnknownCheck(String),

    /// Table ids run from 1 to 7.
    #[error("unknown table id {0} (valid ids are 1..=7)")]
    UnknownTable(u32),

    /// Malformed textual input (CLI arguments, table data).
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
