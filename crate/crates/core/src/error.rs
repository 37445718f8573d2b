//! Error type shared by all modules.

use thiserror::Error;

/// Errors produced by basis construction, operator assembly and solvers.
#[derive(Debug, Error)]
pub enum ScarError {
    /// Constraint or geometry parameters are invalid.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// A state or operator was used with a basis it does not belong to.
    #[error("basis mismatch: {0}")]
    BasisMismatch(String),

    /// Dimension mismatch between operator and vector.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// An iterative solver failed to converge.
    #[error("solver did not converge: {0}")]
    NonConvergence(String),

    /// A constructed state has (numerically) zero norm.
    #[error("zero norm: {0}")]
    ZeroNorm(String),

    /// Requested value exceeds a representable or configured limit.
    #[error("limit exceeded: {0}")]
    LimitExceeded(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, ScarError>;
