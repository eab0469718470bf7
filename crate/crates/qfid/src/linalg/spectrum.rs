//! Eigenvalue multisets and the PSD-product cleanup policy.

use crate::{tol, Complex64, Error, Result};

/// How much structure a [`Spectrum`]'s values are known to carry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpectrumKind {
    /// Arbitrary complex eigenvalues.
    GeneralComplex,
    /// Imaginary parts are exactly zero.
    Real,
    /// Real and non-negative.
    NonnegativeReal,
}

/// Multiset of eigenvalues of a square matrix, with algebraic multiplicity.
#[derive(Clone, Debug)]
pub struct Spectrum {
    values: Vec<Complex64>,
    kind: SpectrumKind,
}

impl Spectrum {
    pub(crate) fn new(values: Vec<Complex64>, kind: SpectrumKind) -> Self {
        Self { values, kind }
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn kind(&self) -> SpectrumKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Reference magnitude for relative cleanup: the largest `|λ|`, or 1 for
    /// the zero spectrum.
    pub fn scale(&self) -> f64 {
        let m = self.values.iter().map(|z| z.norm()).fold(0.0, f64::max);
        if m == 0.0 {
            1.0
        } else {
            m
        }
    }

    /// Values sorted by `(Re, Im)`; the canonical order for multiset
    /// comparison.
    pub fn sorted_by_re_im(&self) -> Vec<Complex64> {
        let mut v = self.values.clone();
        v.sort_by(|a, b| a.re.total_cmp(&b.re).then_with(|| a.im.total_cmp(&b.im)));
        v
    }

    /// Real parts of the values. Meaningful for `Real` / `NonnegativeReal`
    /// spectra, where imaginary parts are exactly zero.
    pub fn real_parts(&self) -> Vec<f64> {
        self.values.iter().map(|z| z.re).collect()
    }
}

/// Clean up the spectrum of a product of PSD matrices.
///
/// The spectrum of `AB` with `A, B` PSD is non-negative real in exact
/// arithmetic; a general eigensolver returns it with imaginary and negative
/// dust. Dust within `CLAMP_REL · scale` is zeroed and the kind upgraded to
/// [`SpectrumKind::NonnegativeReal`]. Anything outside that band means the
/// input was not a PSD product, or the solver failed, and is rejected.
///
/// `scale` must be the caller-computed reference magnitude, normally
/// [`Spectrum::scale`].
pub fn clamp_spectrum(s: &Spectrum, scale: f64) -> Result<Spectrum> {
    let band = tol::CLAMP_REL * scale;
    let mut cleaned = Vec::with_capacity(s.len());
    for &z in s.values() {
        if z.im.abs() > band || z.re < -band {
            return Err(Error::SpectrumNotPsdProduct {
                value: z,
                tolerance: band,
            });
        }
        let re = if z.re < 0.0 { 0.0 } else { z.re };
        cleaned.push(Complex64::new(re, 0.0));
    }
    Ok(Spectrum::new(cleaned, SpectrumKind::NonnegativeReal))
}

/// `√` applied to a non-negative real spectrum with the sub-noise floor:
/// values at or below `SPECTRAL_FLOOR_REL · max` map to exactly 0. Returns
/// the mapped values sorted ascending.
pub fn sqrt_spectrum_floored(values: &[f64]) -> Vec<f64> {
    let max = values.iter().cloned().fold(0.0, f64::max);
    let floor = tol::SPECTRAL_FLOOR_REL * max;
    let mut mapped: Vec<f64> = values
        .iter()
        .map(|&l| if l > floor { l.sqrt() } else { 0.0 })
        .collect();
    mapped.sort_by(f64::total_cmp);
    mapped
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn below_threshold_imaginary_dust_zeroed() {
        let s = Spectrum::new(
            vec![c(0.0, 1e-17), c(0.5, 0.0)],
            SpectrumKind::GeneralComplex,
        );
        let cleaned = clamp_spectrum(&s, 0.5).unwrap();
        assert_eq!(cleaned.kind(), SpectrumKind::NonnegativeReal);
        assert_eq!(cleaned.values()[0], c(0.0, 0.0));
        assert_eq!(cleaned.values()[1], c(0.5, 0.0));
    }

    #[test]
    fn negative_dust_zeroed() {
        let s = Spectrum::new(
            vec![c(-1e-20, 0.0), c(0.3, 0.0)],
            SpectrumKind::GeneralComplex,
        );
        let cleaned = clamp_spectrum(&s, 0.3).unwrap();
        assert_eq!(cleaned.values()[0], c(0.0, 0.0));
        assert_eq!(cleaned.values()[1], c(0.3, 0.0));
    }

    #[test]
    fn materially_negative_value_rejected() {
        let s = Spectrum::new(
            vec![c(-0.01, 0.0), c(0.3, 0.0)],
            SpectrumKind::GeneralComplex,
        );
        assert!(matches!(
            clamp_spectrum(&s, 0.3),
            Err(Error::SpectrumNotPsdProduct { .. })
        ));
    }

    #[test]
    fn materially_imaginary_value_rejected() {
        let s = Spectrum::new(
            vec![c(0.1, 0.01), c(0.3, 0.0)],
            SpectrumKind::GeneralComplex,
        );
        assert!(clamp_spectrum(&s, 0.3).is_err());
    }

    #[test]
    fn zero_spectrum_scale_is_one() {
        let s = Spectrum::new(vec![c(0.0, 0.0); 3], SpectrumKind::GeneralComplex);
        assert_eq!(s.scale(), 1.0);
        assert!(clamp_spectrum(&s, s.scale()).is_ok());
    }

    #[test]
    fn sqrt_floor_kills_dust_and_keeps_legit_values() {
        let mapped = sqrt_spectrum_floored(&[1e-18, 0.25, 1.0, 0.0]);
        assert_eq!(mapped, vec![0.0, 0.0, 0.5, 1.0]);
    }

    #[test]
    fn sorted_by_re_im_orders_ties_by_imaginary_part() {
        let s = Spectrum::new(
            vec![c(1.0, 2.0), c(1.0, -2.0), c(0.0, 0.0)],
            SpectrumKind::GeneralComplex,
        );
        let sorted = s.sorted_by_re_im();
        assert_eq!(sorted, vec![c(0.0, 0.0), c(1.0, -2.0), c(1.0, 2.0)]);
    }
}
