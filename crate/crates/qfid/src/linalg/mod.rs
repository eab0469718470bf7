//! Dense complex linear-algebra kernels.
//!
//! [`ComplexMatrix`] is the universal carrier: a square, dense, column-major
//! complex matrix. The kernels on top of it — [`matmul`], [`eigh`],
//! [`eigvals_general`], [`svd`], [`sqrtm_psd`], [`trace_norm`],
//! [`clamp_spectrum`] — are thin contracts over `faer`'s single-threaded
//! decompositions: each one validates its preconditions, normalizes output
//! ordering, and reports failures through [`crate::Error`].

mod eig;
mod matrix;
mod spectrum;
mod sqrtm;
mod svd;

pub use eig::{eigh, eigh_values, eigvals_general, EighResult};
pub use matrix::{matmul, ComplexMatrix};
pub use spectrum::{clamp_spectrum, sqrt_spectrum_floored, Spectrum, SpectrumKind};
pub use sqrtm::{sqrtm_psd, SqrtRoute};
pub use svd::{svd, svd_values, trace_norm, SvdResult};
