use thiserror::Error;

/// Errors shared by all solver modules.
///
/// Infeasible / impossible / disconnected outcomes are *not* errors; they are
/// typed results on the operations that can produce them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The input violates a documented precondition or invariant.
    #[error("invalid input: {0}")]
    Validation(String),
    /// The instance is too large for the requested (usually exhaustive) method.
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    /// A pluggable additive optimizer reported a non-monotone feasibility sign
    /// during the ratio binary search.
    #[error("additive optimizer is not monotone in the candidate ratio: {0}")]
    OptimizerNotMonotone(String),
    /// No subset satisfies the optimizer's property, so no ratio exists.
    #[error("no feasible subset under the requested property")]
    NoFeasibleSubset,
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub fn capacity(msg: impl Into<String>) -> Self {
        Error::Capacity(msg.into())
    }
}
