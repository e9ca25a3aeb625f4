use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum HwError {
    #[error("grid mismatch: {0} vs {1} modes")]
    GridMismatch(usize, usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("jacobian degeneracy: min |1+W_alpha| = {min_abs:.3e} < {limit:.3e}")]
    DegenerateJacobian { min_abs: f64, limit: f64 },
    #[error("numeric error: {0}")]
    Numeric(String),
    #[error("CFL violation: dt = {dt:.3e} exceeds limit {limit:.3e}")]
    CflViolation { dt: f64, limit: f64 },
    #[error("solution blew up at t = {t:.6}: {what}")]
    BlowUp { t: f64, what: String },
    #[error("state validation failed: {0}")]
    InvalidState(String),
}

pub type Result<T> = std::result::Result<T, HwError>;
