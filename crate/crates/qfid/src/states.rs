//! Density matrices: validation, random generation, and test families.
//!
//! All generators are pure functions of `(dim, rank, seed)` driven by a
//! ChaCha8 stream cipher RNG (`rand_chacha::ChaCha8Rng`), which is seedable,
//! platform-independent, and documented here as the crate's reproducibility
//! contract: the same seed always yields bit-identical matrices.
//!
//! Complex Gaussian entries draw two independent standard normals
//! (variance 1 each) for the real and imaginary parts.

use crate::linalg::{eigh_values, ComplexMatrix};
use crate::{tol, Complex64, Error, Result};
use faer::{c64, Mat};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

/// A validated density matrix: Hermitian, PSD, unit trace.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    mat: ComplexMatrix,
}

impl DensityMatrix {
    /// Validate a candidate matrix.
    ///
    /// The three invariants are checked in order and report distinct causes:
    /// Hermiticity within `1e-10 · ‖A‖_F`, trace 1 within `1e-12`, and PSD
    /// within the eigenvalue gate `-1e-10 · max(1, Tr A)`.
    pub fn validate(mat: ComplexMatrix) -> Result<Self> {
        if mat.dim() == 0 {
            return Err(Error::ZeroDimension);
        }
        if !mat.is_finite() {
            for j in 0..mat.dim() {
                for i in 0..mat.dim() {
                    let z = mat.get(i, j);
                    if !z.re.is_finite() || !z.im.is_finite() {
                        return Err(Error::NonFinite { row: i, col: j });
                    }
                }
            }
        }
        let defect = mat.hermiticity_defect();
        let h_tol = tol::hermiticity_tol(&mat);
        if defect > h_tol {
            return Err(Error::NotHermitian {
                defect,
                tolerance: h_tol,
            });
        }
        let trace = mat.trace().re;
        if (trace - 1.0).abs() > tol::TRACE_ABS {
            return Err(Error::TraceNotOne { trace });
        }
        let eigenvalues = eigh_values(&mat)?;
        let min = eigenvalues[0];
        let p_tol = tol::psd_tol(&mat);
        if min < -p_tol {
            return Err(Error::NotPsd {
                min_eigenvalue: min,
                tolerance: p_tol,
            });
        }
        Ok(Self { mat })
    }

    /// Wrap a matrix that is valid by construction (generator output).
    pub(crate) fn trusted(mat: ComplexMatrix) -> Self {
        Self { mat }
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.mat
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.mat
    }

    pub fn dim(&self) -> usize {
        self.mat.dim()
    }

    /// Number of qubits `k` when the dimension is a power of two.
    pub fn qubits(&self) -> Option<u32> {
        let d = self.mat.dim();
        if d.is_power_of_two() {
            Some(d.trailing_zeros())
        } else {
            None
        }
    }
}

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn sample_complex(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(StandardNormal.sample(rng), StandardNormal.sample(rng))
}

/// Rectangular matrix of i.i.d. standard complex Gaussians, sampled row by
/// row.
fn gaussian_mat(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Mat<c64> {
    let mut m = Mat::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m[(i, j)] = sample_complex(rng);
        }
    }
    m
}

/// Square matrix of i.i.d. standard complex Gaussian entries (a Ginibre
/// matrix). The base ingredient of every generator here, and the random
/// general test matrix for the spectrum-identity suites.
pub fn random_general(dim: usize, seed: u64) -> ComplexMatrix {
    let mut rng = rng_for(seed);
    ComplexMatrix::from_fn(dim, |_, _| sample_complex(&mut rng))
}

/// Random Hermitian matrix: `(G + G†)/2` with `G` Ginibre.
pub fn random_hermitian(dim: usize, seed: u64) -> ComplexMatrix {
    random_general(dim, seed).symmetrized()
}

/// Random full-rank PSD matrix `G·G†` (not trace-normalized).
pub fn random_psd(dim: usize, seed: u64) -> ComplexMatrix {
    let mut rng = rng_for(seed);
    let g = gaussian_mat(&mut rng, dim, dim);
    // the fused-multiply-add matmul leaves eps-level imaginary dust on the
    // diagonal; symmetrizing restores exact Hermitian symmetry
    ComplexMatrix::from_faer_owned(&g * g.adjoint()).symmetrized()
}

/// Random density matrix of the given rank: `ρ = G·G† / Tr(G·G†)` with `G`
/// a `dim × rank` complex Gaussian matrix.
///
/// Deterministic for fixed `(dim, rank, seed)`; the output always passes
/// [`DensityMatrix::validate`].
pub fn random_density(dim: usize, rank: usize, seed: u64) -> Result<DensityMatrix> {
    if dim == 0 {
        return Err(Error::ZeroDimension);
    }
    if rank == 0 || rank > dim {
        return Err(Error::RankOutOfRange { rank, dim });
    }
    let mut rng = rng_for(seed);
    let g = gaussian_mat(&mut rng, dim, rank);
    let w = &g * g.adjoint();
    let trace: f64 = (0..dim).map(|i| w[(i, i)].re).sum();
    let mat = ComplexMatrix::from_fn(dim, |i, j| w[(i, j)] / trace).symmetrized();
    Ok(DensityMatrix::trusted(mat))
}

/// Random pure state `|ψ⟩⟨ψ|` with `|ψ⟩` a normalized complex Gaussian
/// vector.
pub fn random_pure(dim: usize, seed: u64) -> Result<DensityMatrix> {
    if dim == 0 {
        return Err(Error::ZeroDimension);
    }
    let mut rng = rng_for(seed);
    let psi: Vec<Complex64> = (0..dim).map(|_| sample_complex(&mut rng)).collect();
    let norm = psi.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let mat = ComplexMatrix::from_fn(dim, |i, j| psi[i] * psi[j].conj() / (norm * norm));
    Ok(DensityMatrix::trusted(mat))
}

fn haar_unitary(rng: &mut ChaCha8Rng, dim: usize) -> ComplexMatrix {
    let g = gaussian_mat(rng, dim, dim);
    let qr = g.qr();
    let q = qr.compute_Q();
    let r = qr.R();
    let mut u = ComplexMatrix::zeros(dim);
    for j in 0..dim {
        let d: c64 = r[(j, j)];
        let phase = if d.norm() == 0.0 {
            c64::new(1.0, 0.0)
        } else {
            d / d.norm()
        };
        for i in 0..dim {
            u.set(i, j, q[(i, j)] * phase);
        }
    }
    u
}

/// Haar-random unitary: QR decomposition of a Ginibre matrix with the
/// R-diagonal phases absorbed into Q.
pub fn random_unitary(dim: usize, seed: u64) -> Result<ComplexMatrix> {
    if dim == 0 {
        return Err(Error::ZeroDimension);
    }
    Ok(haar_unitary(&mut rng_for(seed), dim))
}

/// Random probability vector: normalized unit exponentials (uniform on the
/// simplex).
fn random_probability_vector(rng: &mut ChaCha8Rng, dim: usize) -> Vec<f64> {
    let draws: Vec<f64> = (0..dim)
        .map(|_| {
            let u: f64 = rng.random();
            -(1.0 - u).ln()
        })
        .collect();
    let total: f64 = draws.iter().sum();
    draws.iter().map(|e| e / total).collect()
}

/// A commuting pair together with the eigenvalue distributions it was built
/// from, paired index-by-index in the shared eigenbasis.
#[derive(Clone, Debug)]
pub struct CommutingPair {
    pub rho: DensityMatrix,
    pub sigma: DensityMatrix,
    pub weights_rho: Vec<f64>,
    pub weights_sigma: Vec<f64>,
}

/// Commuting pair `(U diag(p) U†, U diag(q) U†)` with a shared Haar-random
/// eigenbasis, exposing `p` and `q` for closed-form cross-checks.
pub fn random_commuting_pair_weighted(dim: usize, seed: u64) -> Result<CommutingPair> {
    if dim == 0 {
        return Err(Error::ZeroDimension);
    }
    let mut rng = rng_for(seed);
    let basis = haar_unitary(&mut rng, dim);
    let p = random_probability_vector(&mut rng, dim);
    let q = random_probability_vector(&mut rng, dim);

    let conjugate = |weights: &[f64]| -> ComplexMatrix {
        let mut scaled = ComplexMatrix::zeros(dim);
        for (j, &w) in weights.iter().enumerate() {
            for i in 0..dim {
                scaled.set(i, j, basis.get(i, j) * w);
            }
        }
        (&scaled * &basis.adjoint()).symmetrized()
    };

    Ok(CommutingPair {
        rho: DensityMatrix::trusted(conjugate(&p)),
        sigma: DensityMatrix::trusted(conjugate(&q)),
        weights_rho: p,
        weights_sigma: q,
    })
}

/// Commuting pair of density matrices; `‖ρσ − σρ‖_F` is at rounding level.
pub fn random_commuting_pair(dim: usize, seed: u64) -> Result<(DensityMatrix, DensityMatrix)> {
    let pair = random_commuting_pair_weighted(dim, seed)?;
    Ok((pair.rho, pair.sigma))
}

/// The test families the corpus and the generator command draw from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StateFamily {
    MixedFullRank,
    Pure,
    CommutingPair,
    RankDeficient,
    IdenticalPair,
}

impl StateFamily {
    pub const ALL: [StateFamily; 5] = [
        StateFamily::MixedFullRank,
        StateFamily::Pure,
        StateFamily::CommutingPair,
        StateFamily::RankDeficient,
        StateFamily::IdenticalPair,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            StateFamily::MixedFullRank => "mixed-full-rank",
            StateFamily::Pure => "pure",
            StateFamily::CommutingPair => "commuting-pair",
            StateFamily::RankDeficient => "rank-deficient",
            StateFamily::IdenticalPair => "identical-pair",
        }
    }

    /// Families whose generator output is a pair of states.
    pub fn is_pair(self) -> bool {
        matches!(
            self,
            StateFamily::CommutingPair | StateFamily::IdenticalPair
        )
    }
}

impl std::str::FromStr for StateFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        StateFamily::ALL
            .into_iter()
            .find(|f| f.tag() == s)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown state family `{s}`")))
    }
}

/// Output of [`generate_family`].
#[derive(Clone, Debug)]
pub enum FamilyStates {
    Single(DensityMatrix),
    Pair(DensityMatrix, DensityMatrix),
}

/// Generate a member of a test family.
///
/// `rank` is accepted only for [`StateFamily::RankDeficient`], where it is
/// required and must satisfy `1 ≤ rank < dim`.
pub fn generate_family(
    family: StateFamily,
    dim: usize,
    rank: Option<usize>,
    seed: u64,
) -> Result<FamilyStates> {
    if rank.is_some() && family != StateFamily::RankDeficient {
        return Err(Error::InvalidConfig(format!(
            "rank applies only to the rank-deficient family, not `{}`",
            family.tag()
        )));
    }
    match family {
        StateFamily::MixedFullRank => Ok(FamilyStates::Single(random_density(dim, dim, seed)?)),
        StateFamily::Pure => Ok(FamilyStates::Single(random_pure(dim, seed)?)),
        StateFamily::CommutingPair => {
            let (rho, sigma) = random_commuting_pair(dim, seed)?;
            Ok(FamilyStates::Pair(rho, sigma))
        }
        StateFamily::RankDeficient => {
            let rank = rank.ok_or_else(|| {
                Error::InvalidConfig("the rank-deficient family requires a rank".into())
            })?;
            if rank >= dim {
                return Err(Error::RankOutOfRange { rank, dim });
            }
            Ok(FamilyStates::Single(random_density(dim, rank, seed)?))
        }
        StateFamily::IdenticalPair => {
            let rho = random_density(dim, dim, seed)?;
            Ok(FamilyStates::Pair(rho.clone(), rho))
        }
    }
}
