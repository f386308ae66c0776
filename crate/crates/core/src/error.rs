use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or out-of-contract input (bad vertex id, missing edge, ...).
    #[error("input error: {0}")]
    Input(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// An exhaustive search would exceed its configured budget. `lower_bound`
    /// carries whatever was already proven before giving up.
    #[error("budget exceeded: {what} (needed {needed}, budget {budget})")]
    Budget {
        what: String,
        needed: u64,
        budget: u64,
        lower_bound: Option<usize>,
    },

    /// An internal consistency check failed. Never expected on valid input.
    #[error("invariant violation: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
