use num_bigint::BigUint;
use thiserror::Error;

/// Everything that can go wrong in the library.
///
/// The variants map one-to-one onto the CLI exit codes, so keep them coarse.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Argument outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Malformed input or mismatched sizes.
    #[error("usage error: {0}")]
    Usage(String),
    /// Exhaustive search refused because the search space exceeds the budget.
    #[error("search space of {space} objects exceeds the budget of {budget}")]
    BudgetExceeded { space: BigUint, budget: BigUint },
    /// A formula produced something that cannot be a count. Signals a bug.
    #[error("internal consistency failure: {0}")]
    Consistency(String),
    #[error("not an Eulerian digraph: {0}")]
    NotEulerian(String),
    #[error("not an Eulerian fan: {0}")]
    NotAFan(String),
}

pub type Result<T> = std::result::Result<T, Error>;
