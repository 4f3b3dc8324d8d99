use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("model mismatch: {left} vs {right}")]
    ModelMismatch { left: String, right: String },

    #[error("invalid corepresentation label for {model}: {reason}")]
    InvalidLabel { model: String, reason: String },

    #[error("block dimension mismatch at label {label}: expected n_s = {expected}, got {got}")]
    DimensionMismatch {
        label: String,
        expected: String,
        got: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("negative time t = {0} is not allowed for a Markov semigroup")]
    NegativeTime(f64),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("non-finite entry in block {label}")]
    NonFinite { label: String },

    #[error("all-zero spectrum: {0}")]
    EmptySpectrum(String),

    #[error(
        "truncation insufficient: tail bound {bound:.3e} exceeds tolerance {tol:.3e}; \
         a truncation of at least M = {required} is needed"
    )]
    TruncationInsufficient {
        bound: f64,
        tol: f64,
        required: usize,
    },

    #[error("block too large to materialize: dimension {dim} exceeds the dense cap {cap}")]
    BlockTooLarge { dim: String, cap: usize },

    #[error("eigenvalue iteration failed to converge for a {dim}x{dim} block")]
    EigenFailure { dim: usize },

    #[error("{predicate} does not hold (violation {violation:.3e} > tolerance {tol:.3e}): {hint}")]
    PredicateFailed {
        predicate: &'static str,
        violation: f64,
        tol: f64,
        hint: &'static str,
    },

    #[error("not a generator spectrum: {0}")]
    NotAGenerator(String),
}
