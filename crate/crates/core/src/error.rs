use thiserror::Error;

/// Errors raised by the geometric kernels.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("point coordinates must be finite and non-empty")]
    InvalidPoint,
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
    #[error("skeleton metric is singular (|det| = {det:e})")]
    SingularSkeleton { det: f64 },
    #[error("cannot eliminate the collinearity constant: all covariant components of P0Q vanish")]
    EliminationFailure,
    #[error("vector is not timelike (squared length {squared_length:e})")]
    SpacelikeVector { squared_length: f64 },
    #[error("length is imaginary (sigma = {sigma:e})")]
    ImaginaryLength { sigma: f64 },
    #[error("world function is not a metric candidate (sigma = {sigma:e} < 0)")]
    NotMetricCandidate { sigma: f64 },
    #[error("solver failure: {0}")]
    SolverFailure(&'static str),
    #[error("no envelope points found in the sampling box")]
    EmptyEnvelope,
    #[error("insufficient samples: need {needed}, got {found}")]
    InsufficientSamples { needed: usize, found: usize },
    #[error("mu_M^2 = {mu_m_squared:e} is not above 2 sigma0 = {threshold:e}")]
    BelowThreshold { mu_m_squared: f64, threshold: f64 },
    #[error("segment too short for the three-branch radius profile (mu_d^2 = {mu_d_squared:e}, need > {required:e})")]
    BranchDomainError { mu_d_squared: f64, required: f64 },
    #[error("chart coordinates overflowed at link {link}")]
    ChartOverflow { link: usize },
}

pub type Result<T> = core::result::Result<T, Error>;
