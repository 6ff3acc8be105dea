use thiserror::Error;

/// Errors produced by constructors and operations in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid state: {0}")]
    InvalidState(String),

    /// Arguments outside an operation's documented domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A sweep or exhaustive oracle exceeded its configured budget.
    /// Budgets never degrade silently; callers must opt in to larger runs.
    #[error("capacity exceeded: {0}")]
    Capacity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
