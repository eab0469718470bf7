//! `qfid verify`: run the spectrum-identity and fidelity property suites.

use qfid::fidelity::{
    check_cyclicity, check_mapped_cyclicity, fidelity, fidelity_eigvals, fidelity_two_sqrtm,
    FidelityMethod, RANGE_EPS,
};
use qfid::linalg::{eigvals_general, matmul};
use qfid::states::{random_commuting_pair_weighted, random_density, random_general, random_pure};
use qfid::{Error, Result};

struct Suite {
    name: &'static str,
    threshold: f64,
    max_dev: f64,
    passed: bool,
}

impl Suite {
    fn new(name: &'static str, threshold: f64) -> Self {
        Self {
            name,
            threshold,
            max_dev: 0.0,
            passed: true,
        }
    }

    fn record(&mut self, dev: f64) {
        self.max_dev = self.max_dev.max(dev);
        self.passed &= dev <= self.threshold;
    }
}

fn derive(seed: u64, dim: usize, trial: u64, salt: u64) -> u64 {
    seed.wrapping_mul(0x9e37_79b9_7f4a_7c15)
        .wrapping_add((dim as u64) << 32)
        .wrapping_add(trial << 8)
        .wrapping_add(salt)
}

pub fn run(dims: &str, trials: u64, seed: u64) -> Result<i32> {
    if trials == 0 {
        return Err(Error::InvalidConfig("trials must be >= 1".into()));
    }
    let dims: Vec<usize> = dims
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .ok()
                .filter(|&d| d >= 1)
                .ok_or_else(|| Error::InvalidConfig(format!("bad dimension `{tok}`")))
        })
        .collect::<Result<_>>()?;

    let mut trace_sum = Suite::new("trace_eigenvalue_sum", 1e-10);
    let mut cyclicity = Suite::new("spectrum_cyclicity", 1e-8);
    let mut mapped = Suite::new("mapped_cyclicity", 1e-8);
    let mut equivalence = Suite::new("route_equivalence", 1e-9);
    let mut symmetry = Suite::new("symmetry", 1e-10);
    let mut range = Suite::new("range", 1e-10);
    let mut commuting = Suite::new("commuting_reduction", 1e-10);
    let mut pure = Suite::new("pure_reduction", 1e-10);

    for &dim in &dims {
        for trial in 0..trials {
            // trace / eigenvalue-sum consistency on a general matrix
            let a = random_general(dim, derive(seed, dim, trial, 1));
            let sum: qfid::Complex64 = eigvals_general(&a)?.values().iter().sum();
            let tr = a.trace();
            trace_sum.record((sum - tr).norm() / (1.0 + tr.norm()));

            // spectrum cyclicity on a general pair, tolerance relative to the
            // product norm
            let b = random_general(dim, derive(seed, dim, trial, 2));
            let product_norm = matmul(&a, &b)?.frobenius_norm();
            let report = check_cyclicity(&a, &b, 1e-8 * product_norm.max(1.0))?;
            cyclicity.record(report.max_deviation / product_norm.max(1.0));

            // mapped cyclicity on a PSD (density) pair
            let rho = random_density(dim, dim, derive(seed, dim, trial, 3))?;
            let sigma = random_density(dim, dim, derive(seed, dim, trial, 4))?;
            let report = check_mapped_cyclicity(rho.matrix(), sigma.matrix(), 1e-8)?;
            mapped.record(report.max_deviation);

            // product-route equivalence and symmetry on the same pair
            let oracle = fidelity_two_sqrtm(&rho, &sigma)?.raw();
            let fast = fidelity_eigvals(&rho, &sigma)?.raw();
            equivalence.record((oracle - fast).abs());
            symmetry.record((fast - fidelity_eigvals(&sigma, &rho)?.raw()).abs());

            // range: every method lands in [-eps, 1+eps], and F(rho, rho)
            // stays within 1e-10 of 1
            for m in FidelityMethod::ALL {
                let f = fidelity(&rho, &sigma, m)?;
                let overshoot = (f.raw() - 1.0).max(-f.raw()).max(0.0);
                if overshoot > RANGE_EPS {
                    range.record(f64::INFINITY);
                }
            }
            let self_f = fidelity_eigvals(&rho, &rho)?.raw();
            range.record((1.0 - self_f).max(0.0));

            // commuting reduction against the classical closed form
            let pair = random_commuting_pair_weighted(dim, derive(seed, dim, trial, 5))?;
            let expected: f64 = pair
                .weights_rho
                .iter()
                .zip(pair.weights_sigma.iter())
                .map(|(p, q)| (p * q).sqrt())
                .sum::<f64>()
                .powi(2);
            for m in FidelityMethod::ALL {
                commuting.record((fidelity(&pair.rho, &pair.sigma, m)?.raw() - expected).abs());
            }

            // pure reduction against the overlap Tr(rho sigma)
            let psi = random_pure(dim, derive(seed, dim, trial, 6))?;
            let phi = random_pure(dim, derive(seed, dim, trial, 7))?;
            let overlap = matmul(psi.matrix(), phi.matrix())?.trace().re;
            for m in FidelityMethod::ALL {
                pure.record((fidelity(&psi, &phi, m)?.raw() - overlap).abs());
            }
        }
    }

    let suites = [
        trace_sum,
        cyclicity,
        mapped,
        equivalence,
        symmetry,
        range,
        commuting,
        pure,
    ];
    let mut first_failure: Option<&'static str> = None;
    for suite in &suites {
        let verdict = if suite.passed { "pass" } else { "FAIL" };
        println!(
            "{:<24} {verdict}  max_dev {:e}  (tol {:e})",
            suite.name, suite.max_dev, suite.threshold
        );
        if !suite.passed && first_failure.is_none() {
            first_failure = Some(suite.name);
        }
    }
    match first_failure {
        Some(name) => {
            eprintln!("verification failed: {name}");
            Ok(1)
        }
        None => {
            println!("all suites passed");
            Ok(0)
        }
    }
}
