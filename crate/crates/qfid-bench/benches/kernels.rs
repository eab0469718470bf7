use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qfid::linalg::{
    eigh, eigh_values, eigvals_general, matmul, sqrtm_psd, svd, svd_values, SqrtRoute,
};
use qfid::states::{random_general, random_hermitian, random_psd};
use std::hint::black_box;

fn kernels(c: &mut Criterion) {
    let mut group = c.benchmark_group("kernels");
    group.sample_size(20);
    for dim in [16usize, 64] {
        let general = random_general(dim, 1);
        let general2 = random_general(dim, 2);
        let hermitian = random_hermitian(dim, 3);
        let psd = random_psd(dim, 4);

        group.bench_function(BenchmarkId::new("matmul", dim), |b| {
            b.iter(|| matmul(black_box(&general), black_box(&general2)).unwrap())
        });
        group.bench_function(BenchmarkId::new("eigh", dim), |b| {
            b.iter(|| eigh(black_box(&hermitian)).unwrap())
        });
        group.bench_function(BenchmarkId::new("eigh_values", dim), |b| {
            b.iter(|| eigh_values(black_box(&hermitian)).unwrap())
        });
        group.bench_function(BenchmarkId::new("eigvals_general", dim), |b| {
            b.iter(|| eigvals_general(black_box(&general)).unwrap())
        });
        group.bench_function(BenchmarkId::new("svd", dim), |b| {
            b.iter(|| svd(black_box(&general)).unwrap())
        });
        group.bench_function(BenchmarkId::new("svd_values", dim), |b| {
            b.iter(|| svd_values(black_box(&general)).unwrap())
        });
        group.bench_function(BenchmarkId::new("sqrtm_psd_eig", dim), |b| {
            b.iter(|| sqrtm_psd(black_box(&psd), SqrtRoute::HermitianEig).unwrap())
        });
        group.bench_function(BenchmarkId::new("sqrtm_psd_svd", dim), |b| {
            b.iter(|| sqrtm_psd(black_box(&psd), SqrtRoute::Svd).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, kernels);
criterion_main!(benches);
