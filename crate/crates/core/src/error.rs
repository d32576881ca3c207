//! Error type shared by all modules.

/// Errors raised by filter construction and execution.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Input contains NaN or infinite entries.
    #[error("non-finite entries in {0}")]
    NonFinite(&'static str),

    /// Matrix is not symmetric within tolerance.
    #[error("matrix is not symmetric within tolerance")]
    NotSymmetric,

    /// Matrix has an eigenvalue below the PSD tolerance.
    #[error("matrix is not positive semidefinite within tolerance")]
    NotPositiveSemidefinite,

    /// A matrix that must be strictly positive definite is not.
    #[error("{0} is not positive definite")]
    NotPositiveDefinite(&'static str),

    /// Effective dimension of the zero matrix is undefined.
    #[error("zero matrix: trace/operator-norm ratio is undefined")]
    ZeroMatrix,

    /// Operation requires at least one particle.
    #[error("empty ensemble")]
    EmptyEnsemble,

    /// Operation requires more particles than provided.
    #[error("ensemble of size {n} is too small (need at least {required})")]
    EnsembleTooSmall { n: usize, required: usize },

    /// Incompatible dimensions between inputs.
    #[error("dimension mismatch in {what}: expected {expected}, got {got}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },

    /// State blew up during dynamics integration or filtering.
    #[error("dynamics diverged at step {step}")]
    Divergence { step: usize },

    /// A configuration value violates its documented constraint.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
