//! Hermitian and general eigenvalue kernels.

use super::matrix::ComplexMatrix;
use super::spectrum::{Spectrum, SpectrumKind};
use crate::{tol, Complex64, Error, Result};

/// Eigendecomposition of a Hermitian matrix: `A = V diag(λ) V†`.
#[derive(Clone, Debug)]
pub struct EighResult {
    /// Real eigenvalues, sorted nondecreasing.
    pub eigenvalues: Vec<f64>,
    /// Unitary matrix whose `i`-th column is the eigenvector of
    /// `eigenvalues[i]`.
    pub eigenvectors: ComplexMatrix,
}

fn require_hermitian(a: &ComplexMatrix) -> Result<()> {
    let defect = a.hermiticity_defect();
    let tolerance = tol::hermiticity_tol(a);
    if defect > tolerance {
        return Err(Error::NotHermitian { defect, tolerance });
    }
    Ok(())
}

/// Eigendecomposition of a Hermitian matrix.
///
/// The input must be Hermitian within `1e-10 · ‖A‖_F`; callers holding a
/// product that is Hermitian only in exact arithmetic should symmetrize with
/// [`ComplexMatrix::symmetrized`] first.
pub fn eigh(a: &ComplexMatrix) -> Result<EighResult> {
    require_hermitian(a)?;
    let n = a.dim();
    let evd = a.as_faer().self_adjoint_eigen(faer::Side::Lower)?;
    let u = evd.U();
    let s = evd.S();

    let mut order: Vec<usize> = (0..n).collect();
    let raw: Vec<f64> = (0..n).map(|j| s.column_vector()[j].re).collect();
    order.sort_by(|&x, &y| raw[x].total_cmp(&raw[y]));

    let eigenvalues: Vec<f64> = order.iter().map(|&j| raw[j]).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, |i, j| u[(i, order[j])]);
    Ok(EighResult {
        eigenvalues,
        eigenvectors,
    })
}

/// Eigenvalues of a Hermitian matrix, without eigenvectors. Sorted
/// nondecreasing.
pub fn eigh_values(a: &ComplexMatrix) -> Result<Vec<f64>> {
    require_hermitian(a)?;
    let mut values: Vec<f64> = a.as_faer().self_adjoint_eigenvalues(faer::Side::Lower)?;
    values.sort_by(f64::total_cmp);
    Ok(values)
}

/// All `n` eigenvalues of an arbitrary square complex matrix, with algebraic
/// multiplicity. No eigenvectors are computed.
pub fn eigvals_general(a: &ComplexMatrix) -> Result<Spectrum> {
    let values: Vec<Complex64> = a.as_faer().eigenvalues()?;
    Ok(Spectrum::new(values, SpectrumKind::GeneralComplex))
}
