//! Crate-wide error type.

use crate::Complex64;
use thiserror::Error;

/// Errors produced by matrix kernels, state validation, fidelity methods,
/// the benchmark harness, and the matrix file format.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix dimension must be at least 1")]
    ZeroDimension,

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("matrix is not Hermitian: defect {defect:.3e} exceeds tolerance {tolerance:.3e}")]
    NotHermitian { defect: f64, tolerance: f64 },

    #[error("trace is not 1: got {trace:.17}")]
    TraceNotOne { trace: f64 },

    #[error("matrix is not PSD: min eigenvalue {min_eigenvalue:.3e} below -{tolerance:.3e}")]
    NotPsd { min_eigenvalue: f64, tolerance: f64 },

    #[error(
        "spectrum value {value} is materially outside the non-negative reals \
         (tolerance {tolerance:.3e}); input was not a PSD product or the solver failed"
    )]
    SpectrumNotPsdProduct { value: Complex64, tolerance: f64 },

    #[error("rank {rank} out of range for dimension {dim}")]
    RankOutOfRange { rank: usize, dim: usize },

    #[error("eigenvalue solver failed to converge")]
    EigenConvergence,

    #[error("singular value solver failed to converge")]
    SvdConvergence,

    #[error("fidelity value {value:.17} outside [-eps, 1+eps]")]
    FidelityOutOfRange { value: f64 },

    #[error("invalid argument: {0}")]
    InvalidConfig(String),

    #[error("benchmark report is empty")]
    EmptyReport,

    #[error("matrix file parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<faer::linalg::evd::EvdError> for Error {
    fn from(_: faer::linalg::evd::EvdError) -> Self {
        Error::EigenConvergence
    }
}

impl From<faer::linalg::svd::SvdError> for Error {
    fn from(_: faer::linalg::svd::SvdError) -> Self {
        Error::SvdConvergence
    }
}
