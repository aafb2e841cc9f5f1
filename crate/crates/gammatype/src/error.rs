//! Error type shared by all modules.

use std::fmt;

/// Errors raised by construction, evaluation and scanning routines.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Input outside the mathematical domain of the operation.
    Domain(String),
    /// Numerical evaluation could not meet its contract.
    Eval(String),
    /// A bracketing precondition failed (predicate constant on the interval).
    Bracket(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Eval(msg) => write!(f, "evaluation error: {msg}"),
            Error::Bracket(msg) => write!(f, "bracket error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn eval(msg: impl Into<String>) -> Error {
    Error::Eval(msg.into())
}
