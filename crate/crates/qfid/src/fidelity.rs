//! The five fidelity algorithms and executable spectrum identities.
//!
//! Every method computes the same quantity, `F(ρ,σ) = Tr(√(√ρ σ √ρ))²`,
//! in the squared-trace convention. They differ only in which decompositions
//! they spend:
//!
//! | tag               | decompositions                                      |
//! |-------------------|-----------------------------------------------------|
//! | `two_sqrtm`       | two full Hermitian eigendecompositions (two `√`)    |
//! | `three_svd`       | three SVDs (`√ρ`, `√σ`, trace norm)                 |
//! | `sqrtmh_eigvalsh` | one full Hermitian eig + one eigenvalues-only call  |
//! | `sqrtm_svd_svd`   | one full SVD + one singular-values-only call        |
//! | `eigvals`         | one general eigenvalues-only call on `ρσ`           |
//!
//! `eigvals` needs neither eigenvectors nor square roots: the spectrum of
//! `ρσ` equals the spectrum of `√ρ σ √ρ` because spectra are invariant under
//! cyclic reordering of factors, and stays non-negative real even though
//! `ρσ` is generally not Hermitian. [`check_cyclicity`] and
//! [`check_mapped_cyclicity`] are the executable forms of those two facts.
//!
//! `two_sqrtm` follows the textbook definition most directly and is the
//! crate's reference oracle.

use crate::linalg::{
    clamp_spectrum, eigh_values, eigvals_general, matmul, sqrt_spectrum_floored, sqrtm_psd,
    svd_values, trace_norm, ComplexMatrix, SqrtRoute,
};
use crate::states::DensityMatrix;
use crate::{tol, Error, Result};

/// Tolerated numerical overshoot of a fidelity outside `[0, 1]`.
pub const RANGE_EPS: f64 = 1e-9;

/// One of the five fidelity algorithms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FidelityMethod {
    TwoSqrtm,
    ThreeSvd,
    SqrtmhEigvalsh,
    SqrtmSvdSvd,
    Eigvals,
}

impl FidelityMethod {
    pub const ALL: [FidelityMethod; 5] = [
        FidelityMethod::TwoSqrtm,
        FidelityMethod::ThreeSvd,
        FidelityMethod::SqrtmhEigvalsh,
        FidelityMethod::SqrtmSvdSvd,
        FidelityMethod::Eigvals,
    ];

    /// Machine-friendly identifier, used on the CLI and in CSV output.
    pub fn tag(self) -> &'static str {
        match self {
            FidelityMethod::TwoSqrtm => "two_sqrtm",
            FidelityMethod::ThreeSvd => "three_svd",
            FidelityMethod::SqrtmhEigvalsh => "sqrtmh_eigvalsh",
            FidelityMethod::SqrtmSvdSvd => "sqrtm_svd_svd",
            FidelityMethod::Eigvals => "eigvals",
        }
    }

    /// Plot label for the method.
    pub fn figure_label(self) -> &'static str {
        match self {
            FidelityMethod::TwoSqrtm => "2x sqrtm",
            FidelityMethod::ThreeSvd => "3x svd",
            FidelityMethod::SqrtmhEigvalsh => "sqrtmh + eigvalsh",
            FidelityMethod::SqrtmSvdSvd => "sqrtm_svd + svd",
            FidelityMethod::Eigvals => "eigvals",
        }
    }
}

impl std::fmt::Display for FidelityMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

impl std::str::FromStr for FidelityMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        FidelityMethod::ALL
            .into_iter()
            .find(|m| m.tag() == s)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown fidelity method `{s}`")))
    }
}

/// A computed fidelity. The raw value is guaranteed to sit in
/// `[-RANGE_EPS, 1 + RANGE_EPS]`; [`FidelityValue::value`] clamps it to
/// `[0, 1]` for consumption.
#[derive(Clone, Copy, Debug)]
pub struct FidelityValue {
    raw: f64,
    method: FidelityMethod,
}

impl FidelityValue {
    fn new(raw: f64, method: FidelityMethod) -> Result<Self> {
        if !(-RANGE_EPS..=1.0 + RANGE_EPS).contains(&raw) {
            return Err(Error::FidelityOutOfRange { value: raw });
        }
        Ok(Self { raw, method })
    }

    /// The value as computed, possibly overshooting `[0, 1]` by rounding.
    pub fn raw(self) -> f64 {
        self.raw
    }

    /// The reported fidelity, clamped to `[0, 1]`.
    pub fn value(self) -> f64 {
        self.raw.clamp(0.0, 1.0)
    }

    pub fn method(self) -> FidelityMethod {
        self.method
    }
}

fn require_same_dim(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<()> {
    if rho.dim() != sigma.dim() {
        return Err(Error::DimensionMismatch {
            left: rho.dim(),
            right: sigma.dim(),
        });
    }
    Ok(())
}

/// `√ρ σ √ρ`, symmetrized to scrub rounding skew.
fn sandwich(sqrt_rho: &ComplexMatrix, sigma: &DensityMatrix) -> ComplexMatrix {
    (&(sqrt_rho * sigma.matrix()) * sqrt_rho).symmetrized()
}

/// Textbook route: `Tr(√(√ρ σ √ρ))²` with both square roots via Hermitian
/// eigendecomposition. The reference oracle for the other four methods.
pub fn fidelity_two_sqrtm(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<FidelityValue> {
    require_same_dim(rho, sigma)?;
    let sqrt_rho = sqrtm_psd(rho.matrix(), SqrtRoute::HermitianEig)?;
    let inner = sandwich(&sqrt_rho, sigma);
    let root = sqrtm_psd(&inner, SqrtRoute::HermitianEig)?;
    FidelityValue::new(root.trace().re.powi(2), FidelityMethod::TwoSqrtm)
}

/// Trace-norm route: `‖√ρ √σ‖₁²` with both square roots and the trace norm
/// via SVD.
pub fn fidelity_three_svd(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<FidelityValue> {
    require_same_dim(rho, sigma)?;
    let sqrt_rho = sqrtm_psd(rho.matrix(), SqrtRoute::Svd)?;
    let sqrt_sigma = sqrtm_psd(sigma.matrix(), SqrtRoute::Svd)?;
    let tn = trace_norm(&(&sqrt_rho * &sqrt_sigma))?;
    FidelityValue::new(tn * tn, FidelityMethod::ThreeSvd)
}

/// `(Σᵢ √λᵢ(√ρ σ √ρ))²` with `√ρ` from a full Hermitian eigendecomposition
/// and the λᵢ from an eigenvalues-only Hermitian call.
pub fn fidelity_sqrtmh_eigvalsh(
    rho: &DensityMatrix,
    sigma: &DensityMatrix,
) -> Result<FidelityValue> {
    require_same_dim(rho, sigma)?;
    let sqrt_rho = sqrtm_psd(rho.matrix(), SqrtRoute::HermitianEig)?;
    let inner = sandwich(&sqrt_rho, sigma);
    let clipped: Vec<f64> = eigh_values(&inner)?.iter().map(|&l| l.max(0.0)).collect();
    let sum: f64 = sqrt_spectrum_floored(&clipped).iter().sum();
    FidelityValue::new(sum * sum, FidelityMethod::SqrtmhEigvalsh)
}

/// Same shape as [`fidelity_sqrtmh_eigvalsh`] with the SVD in both stages:
/// `√ρ` via the SVD route and singular values in place of eigenvalues.
pub fn fidelity_sqrtm_svd_svd(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<FidelityValue> {
    require_same_dim(rho, sigma)?;
    let sqrt_rho = sqrtm_psd(rho.matrix(), SqrtRoute::Svd)?;
    let inner = sandwich(&sqrt_rho, sigma);
    let sum: f64 = sqrt_spectrum_floored(&svd_values(&inner)?).iter().sum();
    FidelityValue::new(sum * sum, FidelityMethod::SqrtmSvdSvd)
}

/// `(Σᵢ √λᵢ(ρσ))²`: exactly one general eigenvalues-only call, no
/// eigenvectors and no matrix square roots.
///
/// The spectrum of `ρσ` is cleaned by [`clamp_spectrum`] first; a clamp
/// rejection means the eigensolver failed on a PSD-product spectrum and is
/// surfaced as the error.
pub fn fidelity_eigvals(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<FidelityValue> {
    require_same_dim(rho, sigma)?;
    let product = matmul(rho.matrix(), sigma.matrix())?;
    let spectrum = eigvals_general(&product)?;
    let cleaned = clamp_spectrum(&spectrum, spectrum.scale())?;
    let sum: f64 = sqrt_spectrum_floored(&cleaned.real_parts()).iter().sum();
    FidelityValue::new(sum * sum, FidelityMethod::Eigvals)
}

/// Dispatch to one of the five methods.
pub fn fidelity(
    rho: &DensityMatrix,
    sigma: &DensityMatrix,
    method: FidelityMethod,
) -> Result<FidelityValue> {
    match method {
        FidelityMethod::TwoSqrtm => fidelity_two_sqrtm(rho, sigma),
        FidelityMethod::ThreeSvd => fidelity_three_svd(rho, sigma),
        FidelityMethod::SqrtmhEigvalsh => fidelity_sqrtmh_eigvalsh(rho, sigma),
        FidelityMethod::SqrtmSvdSvd => fidelity_sqrtm_svd_svd(rho, sigma),
        FidelityMethod::Eigvals => fidelity_eigvals(rho, sigma),
    }
}

/// Square-root convention `F' = √F`, provided as a helper for consumers that
/// use the non-squared definition. Everything else in this crate reports the
/// squared-trace convention.
pub fn fidelity_root(
    rho: &DensityMatrix,
    sigma: &DensityMatrix,
    method: FidelityMethod,
) -> Result<f64> {
    Ok(fidelity(rho, sigma, method)?.value().sqrt())
}

/// Result of a spectrum-equality check.
#[derive(Clone, Copy, Debug)]
pub struct CyclicityReport {
    /// Whether the sorted spectra matched pairwise within the tolerance.
    pub ok: bool,
    /// Largest pairwise deviation encountered.
    pub max_deviation: f64,
}

/// Check that `AB` and `BA` have the same spectrum: sorts both eigenvalue
/// multisets by `(Re, Im)` and compares them pairwise against `tol`.
pub fn check_cyclicity(a: &ComplexMatrix, b: &ComplexMatrix, tol: f64) -> Result<CyclicityReport> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    let ab = eigvals_general(&matmul(a, b)?)?.sorted_by_re_im();
    let ba = eigvals_general(&matmul(b, a)?)?.sorted_by_re_im();
    let max_deviation = ab
        .iter()
        .zip(ba.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max);
    Ok(CyclicityReport {
        ok: max_deviation <= tol,
        max_deviation,
    })
}

/// Check that the √-mapped spectra of `AB` and `BA` coincide for PSD `A`,
/// `B`: the step that moves the square root inside a cyclic reordering.
///
/// Both inputs must be Hermitian PSD within the usual gates. Each product
/// spectrum is cleaned by [`clamp_spectrum`], mapped through the floored √,
/// sorted, and compared pairwise against `tol`.
pub fn check_mapped_cyclicity(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    tol: f64,
) -> Result<CyclicityReport> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    for m in [a, b] {
        let values = eigh_values(m)?;
        let gate = tol::psd_tol(m);
        if values[0] < -gate {
            return Err(Error::NotPsd {
                min_eigenvalue: values[0],
                tolerance: gate,
            });
        }
    }
    let mapped = |x: &ComplexMatrix, y: &ComplexMatrix| -> Result<Vec<f64>> {
        let spectrum = eigvals_general(&matmul(x, y)?)?;
        let cleaned = clamp_spectrum(&spectrum, spectrum.scale())?;
        Ok(sqrt_spectrum_floored(&cleaned.real_parts()))
    };
    let ab = mapped(a, b)?;
    let ba = mapped(b, a)?;
    let max_deviation = ab
        .iter()
        .zip(ba.iter())
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max);
    Ok(CyclicityReport {
        ok: max_deviation <= tol,
        max_deviation,
    })
}
