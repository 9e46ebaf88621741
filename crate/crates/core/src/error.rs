use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A line of an instance or witness file could not be read.
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// The text parsed but describes an invalid object (bad vertex id, weight, self-loop...).
    #[error("invalid instance: {0}")]
    Validation(String),

    /// An operation was called with arguments that violate its precondition.
    #[error("usage: {0}")]
    Usage(String),

    /// An exhaustive oracle was asked to run on an instance above its size bound.
    #[error("oracle refused: {what} needs n <= {bound}, got n = {n}")]
    OracleRefusal {
        what: &'static str,
        n: usize,
        bound: usize,
    },

    /// A reduction source instance does not have the shape the reduction requires.
    #[error("shape violation: {0}")]
    Shape(String),

    #[error("configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Usage(msg.into()))
}
