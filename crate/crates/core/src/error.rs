use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    /// Index or dimension violates the structure of a matrix or iterate.
    #[error("structural error: {0}")]
    Structural(String),

    /// A weight vector with no positive mass cannot define a distribution.
    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    /// Operation requested beyond its supported problem size.
    #[error("unsupported size: {0}")]
    UnsupportedSize(String),

    /// Operation not defined for this problem form.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Invalid solver or generator argument.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The optimality system of a bilinear problem is inconsistent (empty
    /// optimal set), detected through the least-squares residual.
    #[error("infeasible: least-squares residual {residual} exceeds threshold")]
    Infeasible { residual: f64 },

    /// A non-finite coordinate appeared during a solver run.
    #[error("divergence at iteration {step}: non-finite iterate")]
    Divergence { step: u64 },

    /// Instance generation failed after bounded retries.
    #[error("generation failed: {0}")]
    Generation(String),

    /// Too few usable data points for a fit.
    #[error("insufficient data: {0}")]
    InsufficientData(String),

    /// An iterative routine ran out of its iteration budget before
    /// reaching the requested tolerance.
    #[error("tolerance not met: {0}")]
    ToleranceNotMet(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
