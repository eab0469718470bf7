//! Singular value decomposition and the trace norm.

use super::matrix::ComplexMatrix;
use crate::Result;

/// Singular value decomposition `A = U diag(s) V†`.
#[derive(Clone, Debug)]
pub struct SvdResult {
    /// Unitary left factor.
    pub u: ComplexMatrix,
    /// Singular values, sorted nonincreasing, all `≥ 0`.
    pub singular_values: Vec<f64>,
    /// Unitary right factor (not its adjoint).
    pub v: ComplexMatrix,
}

/// Full SVD of a square complex matrix.
pub fn svd(a: &ComplexMatrix) -> Result<SvdResult> {
    let n = a.dim();
    let svd = a.as_faer().svd()?;
    let singular_values: Vec<f64> = (0..n).map(|j| svd.S().column_vector()[j].re).collect();
    debug_assert!(singular_values.windows(2).all(|w| w[0] >= w[1]));
    Ok(SvdResult {
        u: ComplexMatrix::from_faer(svd.U()),
        singular_values,
        v: ComplexMatrix::from_faer(svd.V()),
    })
}

/// Singular values only, sorted nonincreasing. Identical values to
/// [`svd`], skipping the factor computation.
pub fn svd_values(a: &ComplexMatrix) -> Result<Vec<f64>> {
    Ok(a.as_faer().singular_values()?)
}

/// Trace norm `‖A‖₁`: the sum of the singular values of `A`.
pub fn trace_norm(a: &ComplexMatrix) -> Result<f64> {
    Ok(svd_values(a)?.iter().sum())
}
