//! Positive square root of a Hermitian PSD matrix.

use super::eig::eigh;
use super::matrix::ComplexMatrix;
use super::svd::svd;
use crate::{tol, Complex64, Error, Result};

/// Which decomposition backs the square root.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SqrtRoute {
    /// Hermitian eigendecomposition: `√A = V diag(√λ) V†`.
    HermitianEig,
    /// Singular value decomposition: `√A = U diag(√σ) U†`, valid because the
    /// singular triplets of a PSD matrix coincide with its eigenpairs.
    Svd,
}

/// Positive square root of a Hermitian PSD matrix.
///
/// The input must be Hermitian within `1e-10 · ‖A‖_F` and PSD within the
/// eigenvalue gate `-1e-10 · max(1, Tr A)`. Along either route, spectral
/// values at or below the relative sub-noise floor are treated as exact
/// zeros, so rank-deficient inputs produce clean rank-deficient roots.
///
/// The result `S` is Hermitian PSD with `S·S ≈ A` within `1e-9 · ‖A‖_F`.
pub fn sqrtm_psd(a: &ComplexMatrix, route: SqrtRoute) -> Result<ComplexMatrix> {
    let defect = a.hermiticity_defect();
    let h_tol = tol::hermiticity_tol(a);
    if defect > h_tol {
        return Err(Error::NotHermitian {
            defect,
            tolerance: h_tol,
        });
    }
    let psd_tol = tol::psd_tol(a);
    let n = a.dim();

    let (basis, values) = match route {
        SqrtRoute::HermitianEig => {
            let r = eigh(a)?;
            (r.eigenvectors, r.eigenvalues)
        }
        SqrtRoute::Svd => {
            let r = svd(a)?;
            // Recover eigenvalue signs: for Hermitian A = UΣV†, the i-th
            // eigenvalue is σ_i · Re⟨v_i, u_i⟩ with the inner product ±1.
            let signed: Vec<f64> = (0..n)
                .map(|j| {
                    let dot: Complex64 = (0..n).map(|i| r.v.get(i, j).conj() * r.u.get(i, j)).sum();
                    r.singular_values[j] * dot.re
                })
                .collect();
            (r.u, signed)
        }
    };

    let min = values.iter().cloned().fold(f64::INFINITY, f64::min);
    if min < -psd_tol {
        return Err(Error::NotPsd {
            min_eigenvalue: min,
            tolerance: psd_tol,
        });
    }

    let max = values.iter().cloned().fold(0.0, f64::max);
    let floor = tol::SPECTRAL_FLOOR_REL * max;
    let roots: Vec<f64> = values
        .iter()
        .map(|&l| if l > floor { l.sqrt() } else { 0.0 })
        .collect();

    // S = B diag(roots) B†, accumulated without forming the diagonal matrix.
    let mut scaled = ComplexMatrix::zeros(n);
    for (j, &root) in roots.iter().enumerate() {
        for i in 0..n {
            scaled.set(i, j, basis.get(i, j) * root);
        }
    }
    Ok(&scaled * &basis.adjoint())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{random_general, random_psd, random_pure};

    #[test]
    fn diagonal_root() {
        let a = ComplexMatrix::from_diag_real(&[4.0, 9.0]);
        for route in [SqrtRoute::HermitianEig, SqrtRoute::Svd] {
            let s = sqrtm_psd(&a, route).unwrap();
            let expect = ComplexMatrix::from_diag_real(&[2.0, 3.0]);
            assert!(s.max_abs_diff(&expect) < 1e-14);
        }
    }

    #[test]
    fn analytic_2x2() {
        let a = ComplexMatrix::from_rows(vec![
            vec![Complex64::new(2.0, 0.0), Complex64::new(1.0, 0.0)],
            vec![Complex64::new(1.0, 0.0), Complex64::new(2.0, 0.0)],
        ])
        .unwrap();
        let r3 = 3.0f64.sqrt();
        let expect = ComplexMatrix::from_rows(vec![
            vec![
                Complex64::new((r3 + 1.0) / 2.0, 0.0),
                Complex64::new((r3 - 1.0) / 2.0, 0.0),
            ],
            vec![
                Complex64::new((r3 - 1.0) / 2.0, 0.0),
                Complex64::new((r3 + 1.0) / 2.0, 0.0),
            ],
        ])
        .unwrap();
        for route in [SqrtRoute::HermitianEig, SqrtRoute::Svd] {
            let s = sqrtm_psd(&a, route).unwrap();
            assert!(s.max_abs_diff(&expect) < 1e-14);
        }
    }

    #[test]
    fn routes_agree_elementwise() {
        let a = random_psd(16, 77);
        let h = sqrtm_psd(&a, SqrtRoute::HermitianEig).unwrap();
        let s = sqrtm_psd(&a, SqrtRoute::Svd).unwrap();
        assert!(h.max_abs_diff(&s) < 1e-9);
    }

    #[test]
    fn square_back_residual() {
        for seed in [1u64, 2, 3] {
            let a = random_psd(12, seed);
            for route in [SqrtRoute::HermitianEig, SqrtRoute::Svd] {
                let s = sqrtm_psd(&a, route).unwrap();
                let back = &s * &s;
                assert!((&back - &a).frobenius_norm() <= 1e-9 * a.frobenius_norm());
                // result itself is Hermitian
                assert!(s.hermiticity_defect() <= 1e-12 * s.frobenius_norm().max(1.0));
            }
        }
    }

    #[test]
    fn projector_is_its_own_root() {
        let p = random_pure(8, 9).unwrap().into_matrix();
        for route in [SqrtRoute::HermitianEig, SqrtRoute::Svd] {
            let s = sqrtm_psd(&p, route).unwrap();
            assert!(s.max_abs_diff(&p) < 1e-12);
        }
    }

    #[test]
    fn materially_non_psd_rejected() {
        let a = ComplexMatrix::from_diag_real(&[1.2, -0.2]);
        for route in [SqrtRoute::HermitianEig, SqrtRoute::Svd] {
            assert!(matches!(sqrtm_psd(&a, route), Err(Error::NotPsd { .. })));
        }
    }

    #[test]
    fn non_hermitian_rejected() {
        let a = random_general(4, 5);
        assert!(matches!(
            sqrtm_psd(&a, SqrtRoute::HermitianEig),
            Err(Error::NotHermitian { .. })
        ));
    }
}
