//! Numerical tolerances used across the crate.
//!
//! All thresholds sit roughly one order of magnitude above observed
//! double-precision solver noise for dimensions up to a few thousand, so
//! they separate rounding dust from genuine violations.

use crate::linalg::ComplexMatrix;

/// Hermiticity gate, relative to the Frobenius norm of the input.
pub const HERMITICITY_REL: f64 = 1e-10;

/// PSD gate on the minimum eigenvalue, relative to `max(1, Tr A)`.
pub const PSD_REL: f64 = 1e-10;

/// Spectrum cleanup threshold for products of PSD matrices, relative to the
/// largest eigenvalue magnitude. Values inside the band are rounding dust and
/// get zeroed; values outside it signal a solver failure or a bad input.
pub const CLAMP_REL: f64 = 1e-8;

/// Relative floor below which eigenvalues / singular values feeding a matrix
/// square root (or a `Σ√λ` accumulation) are treated as exact zeros.
///
/// Spectra of rank-deficient inputs carry zero eigenvalues that solvers
/// return as dust of order `1e-16` relative; `√dust ≈ 1e-8` terms would
/// otherwise contaminate fidelity sums. Genuine eigenvalues of products of
/// full-rank states stay above `1e-10` relative for the dimensions this crate
/// targets, so `1e-12` cleanly separates the two populations.
pub const SPECTRAL_FLOOR_REL: f64 = 1e-12;

/// Absolute tolerance on the trace of a density matrix.
pub const TRACE_ABS: f64 = 1e-12;

/// Hermiticity tolerance for a concrete matrix: `1e-10 · ‖A‖_F`.
pub fn hermiticity_tol(a: &ComplexMatrix) -> f64 {
    HERMITICITY_REL * a.frobenius_norm()
}

/// PSD tolerance for a concrete matrix: `1e-10 · max(1, Tr A)`.
pub fn psd_tol(a: &ComplexMatrix) -> f64 {
    PSD_REL * a.trace().re.max(1.0)
}
