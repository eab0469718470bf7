//! # qfid
//!
//! Uhlmann fidelity between mixed quantum states, computed by five
//! interchangeable algorithms that differ only in which matrix
//! decompositions they invoke:
//!
//! - `two_sqrtm` — the textbook route: two full matrix square roots of
//!   Hermitian PSD matrices, then a trace. Serves as the reference oracle.
//! - `three_svd` — the trace-norm route `‖√ρ·√σ‖₁²`, all three stages via SVD.
//! - `sqrtmh_eigvalsh` — one square root of ρ, then Hermitian eigenvalues of
//!   the symmetrized product `√ρ σ √ρ` (no eigenvectors for the second stage).
//! - `sqrtm_svd_svd` — same shape, with SVD in place of the Hermitian solver.
//! - `eigvals` — a single general eigenvalue computation on the plain product
//!   `ρσ`: no eigenvectors, no square roots. Valid because the spectrum of a
//!   product of PSD matrices is invariant under cyclic permutation, even
//!   though `ρσ` itself is generally not Hermitian.
//!
//! The crate also ships executable forms of the underlying spectrum
//! identities ([`fidelity::check_cyclicity`], [`fidelity::check_mapped_cyclicity`]),
//! seeded random state generators ([`states`]), a deterministic benchmark
//! harness with CSV and SVG emission ([`mod@bench`]), and a plain-text matrix
//! file format ([`matfile`]).
//!
//! All numerical kernels run single-threaded; every public operation is a
//! pure function of its inputs and is safe to call concurrently.

pub mod bench;
pub mod error;
pub mod fidelity;
pub mod linalg;
pub mod matfile;
pub mod states;
pub mod tol;

pub use error::{Error, Result};
pub use fidelity::{fidelity, FidelityMethod, FidelityValue};
pub use linalg::{ComplexMatrix, EighResult, Spectrum, SpectrumKind, SqrtRoute, SvdResult};
pub use states::{DensityMatrix, StateFamily};

/// Complex scalar used throughout the crate.
pub type Complex64 = num_complex::Complex<f64>;
