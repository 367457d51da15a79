//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A caller-supplied argument violates a precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Input points are degenerate: the named tuple lies on a common
    /// hyperplane, or a point is duplicated / antipodal to another.
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// Input points do not span the full space.
    #[error("rank-deficient input: {0}")]
    RankDeficient(String),

    /// An operation was called on an object in an unsupported state.
    #[error("invalid state: {0}")]
    InvalidState(String),

    /// An exact enumeration would exceed the tuple-count guard.
    #[error("enumeration guard: {tuples} tuples exceeds the limit of {limit}; pass an explicit override or use sampled mode")]
    EnumerationGuard { tuples: u128, limit: u128 },

    /// A feasible starting configuration could not be found.
    #[error("infeasible start: {0}")]
    InfeasibleStart(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
