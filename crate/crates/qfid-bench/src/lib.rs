//! Shared fixtures for the criterion benches.

use qfid::states::{random_density, DensityMatrix};

/// Deterministic full-rank density pair for benchmarking.
pub fn bench_pair(dim: usize, seed: u64) -> (DensityMatrix, DensityMatrix) {
    (
        random_density(dim, dim, seed).expect("valid bench dims"),
        random_density(dim, dim, seed + 1).expect("valid bench dims"),
    )
}
