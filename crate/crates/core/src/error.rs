use thiserror::Error;

/// Unified error type for the crate.
///
/// The variants map onto the failure classes surfaced by the CLI: bad input
/// (parse/validation), resource guards (matrix sizes), and numerical trouble
/// (eigensolver residuals, integrator drift).
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid code: {0}")]
    InvalidCode(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("numerical error: {0}")]
    Numerical(String),
}
