use std::io;

use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// A graph or family parameter violates its constraint.
    #[error("invalid parameter: {0}")]
    Parameter(String),
    /// A closed form was evaluated outside the range it covers.
    #[error("outside formula domain: {0}")]
    Domain(String),
    /// A caller-supplied precondition does not hold.
    #[error("contract violated: {0}")]
    Contract(String),
    #[error("graph of order {order} exceeds the exhaustive solver cap of {cap}; use branch-and-bound")]
    Capacity { order: usize, cap: usize },
    #[error("node budget of {budget} exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn param<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Parameter(msg.into()))
}
