use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),

    #[error("enumeration limit exceeded: {requested} items requested, limit is {limit}")]
    EnumerationLimit { requested: u128, limit: u128 },

    #[error("unknown ray label {0}")]
    UnknownLabel(u32),

    #[error("search budget of {budget} nodes exhausted before enumeration completed")]
    BudgetExhausted { budget: u64 },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A self-check failed. This always indicates a bug.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input(msg: impl Into<String>) -> Error {
    Error::Input(msg.into())
}
