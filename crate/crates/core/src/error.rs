use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed argument or violated precondition on an argument.
    #[error("invalid input: {0}")]
    Input(String),

    /// Edge-list text that does not follow the format.
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph is not connected")]
    NotConnected,

    /// The brute-force oracles refuse inputs beyond their admissible size.
    #[error("input too large: {size} exceeds limit {limit}")]
    Size { size: usize, limit: usize },
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
}
