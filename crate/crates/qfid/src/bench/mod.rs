//! Timed sweeps over qubit sizes and fidelity methods.
//!
//! A sweep generates, for each system size `k`, a schedule of fresh random
//! full-rank density pairs of dimension `2^k`, and times nothing but the
//! fidelity call itself on a monotonic clock — generation, validation, and
//! aggregation all happen outside the timed window. Every method times the
//! same deterministic pair sequence, so per-method numbers are directly
//! comparable, and two sweeps with the same config consume bit-identical
//! inputs.
//!
//! Kernels are single-threaded by construction; the report records the
//! worker count (always 1) alongside the seed and a timestamp.

mod csv;
mod plot;

pub use csv::emit_csv;
pub use plot::{emit_plot, DECADE_PX};

use crate::fidelity::{fidelity, FidelityMethod};
use crate::states::{random_density, DensityMatrix};
use crate::{Error, Result};
use std::time::Instant;

/// Cache the generated pair sequence for a size only while it stays under
/// this budget; above it, pairs are regenerated per method from the same
/// seeds (bit-identical by the generator contract).
const PAIR_CACHE_LIMIT_BYTES: u128 = 512 * 1024 * 1024;

/// Sweep configuration.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchConfig {
    pub k_min: u32,
    pub k_max: u32,
    pub runs_base: u64,
    pub methods: Vec<FidelityMethod>,
    pub seed: u64,
    pub warmup_runs: u32,
}

impl BenchConfig {
    /// Desk-scale defaults: minutes on a laptop rather than hours.
    pub fn desk_scale() -> Self {
        Self {
            k_min: 1,
            k_max: 10,
            runs_base: 1_000,
            methods: FidelityMethod::ALL.to_vec(),
            seed: 1,
            warmup_runs: 3,
        }
    }

    /// The original experiment scale: `k = 1..13`, `runs_base = 10⁴`.
    pub fn paper_scale() -> Self {
        Self {
            k_min: 1,
            k_max: 13,
            runs_base: 10_000,
            ..Self::desk_scale()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.k_min < 1 || self.k_min > self.k_max {
            return Err(Error::InvalidConfig(format!(
                "need 1 <= k_min <= k_max, got {}..{}",
                self.k_min, self.k_max
            )));
        }
        if self.runs_base < 1 {
            return Err(Error::InvalidConfig("runs_base must be >= 1".into()));
        }
        if self.runs_base > 1_000_000_000_000 {
            return Err(Error::InvalidConfig(
                "runs_base above 1e12 is not supported".into(),
            ));
        }
        if self.methods.is_empty() {
            return Err(Error::InvalidConfig("methods must be non-empty".into()));
        }
        Ok(())
    }

    /// Parse the key-value config file format. Unknown keys are rejected;
    /// missing keys keep the desk-scale defaults.
    ///
    /// ```text
    /// k_min = 1
    /// k_max = 6
    /// runs_base = 100
    /// methods = eigvals,two_sqrtm
    /// seed = 42
    /// warmup_runs = 3
    /// ```
    pub fn parse_config(text: &str) -> Result<Self> {
        let mut cfg = Self::desk_scale();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::InvalidConfig(format!("line {}: expected `key = value`", idx + 1))
            })?;
            let (key, value) = (key.trim(), value.trim());
            let bad_num = |what: &str| {
                Error::InvalidConfig(format!("line {}: bad {what} `{value}`", idx + 1))
            };
            match key {
                "k_min" => cfg.k_min = value.parse().map_err(|_| bad_num("k_min"))?,
                "k_max" => cfg.k_max = value.parse().map_err(|_| bad_num("k_max"))?,
                "runs_base" => cfg.runs_base = value.parse().map_err(|_| bad_num("runs_base"))?,
                "seed" => cfg.seed = value.parse().map_err(|_| bad_num("seed"))?,
                "warmup_runs" => {
                    cfg.warmup_runs = value.parse().map_err(|_| bad_num("warmup_runs"))?
                }
                "methods" => cfg.methods = parse_methods(value)?,
                other => {
                    return Err(Error::InvalidConfig(format!(
                        "line {}: unknown key `{other}`",
                        idx + 1
                    )))
                }
            }
        }
        Ok(cfg)
    }
}

/// Parse a comma-separated method list; `all` selects all five.
pub fn parse_methods(list: &str) -> Result<Vec<FidelityMethod>> {
    if list.trim() == "all" {
        return Ok(FidelityMethod::ALL.to_vec());
    }
    list.split(',').map(|tok| tok.trim().parse()).collect()
}

/// Number of timed runs at system size `k`: `⌈runs_base / 2^(k-3)⌉` in exact
/// integer arithmetic. For `k < 3` the divisor is the rational `1/2^(3-k)`,
/// so the count becomes an exact multiple of `runs_base`.
pub fn run_schedule(k: u32, runs_base: u64) -> u64 {
    assert!(k >= 1, "system size starts at one qubit");
    if k < 3 {
        runs_base << (3 - k)
    } else {
        let divisor = 1u64 << (k - 3);
        runs_base.div_ceil(divisor)
    }
}

/// Timing aggregate of one `(k, method)` cell.
#[derive(Clone, Debug, PartialEq)]
pub enum CellOutcome {
    Stats {
        mean_s: f64,
        median_s: f64,
        std_s: f64,
    },
    /// The kernel failed on this cell; the sweep carried on.
    Failed { error: String },
}

/// One `(k, method)` cell of a report.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchCell {
    pub k: u32,
    pub dim: usize,
    pub method: FidelityMethod,
    pub runs: u64,
    pub outcome: CellOutcome,
}

/// Result of a sweep, plus the environment record.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchReport {
    pub cells: Vec<BenchCell>,
    pub seed: u64,
    /// Unix timestamp (seconds) of report assembly.
    pub timestamp: u64,
    /// Kernel worker count; always 1.
    pub workers: u32,
}

impl BenchReport {
    /// Mean seconds for a `(k, method)` cell, when it succeeded.
    pub fn mean_s(&self, k: u32, method: FidelityMethod) -> Option<f64> {
        self.cells.iter().find_map(|c| match c.outcome {
            CellOutcome::Stats { mean_s, .. } if c.k == k && c.method == method => Some(mean_s),
            _ => None,
        })
    }

    pub fn has_failures(&self) -> bool {
        self.cells
            .iter()
            .any(|c| matches!(c.outcome, CellOutcome::Failed { .. }))
    }
}

/// splitmix64 finalizer; the documented seed-derivation step.
fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of the `slot`-th state (0 = ρ, 1 = σ) of run `run` at size `k`.
/// Stable across releases: part of the reproducibility contract.
pub fn pair_seed(seed: u64, k: u32, run: u64, slot: u8) -> u64 {
    mix64(seed ^ mix64(((k as u64) << 48) ^ (run << 1) ^ slot as u64))
}

fn generate_pair(seed: u64, k: u32, run: u64, dim: usize) -> (DensityMatrix, DensityMatrix) {
    let rho =
        random_density(dim, dim, pair_seed(seed, k, run, 0)).expect("bench dims are always valid");
    let sigma =
        random_density(dim, dim, pair_seed(seed, k, run, 1)).expect("bench dims are always valid");
    (rho, sigma)
}

/// Monotonic-clock duration of one call, in seconds.
pub(crate) fn time_seconds<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_secs_f64())
}

/// Mean, median, and sample standard deviation.
pub(crate) fn summarize(times: &[f64]) -> (f64, f64, f64) {
    let n = times.len();
    assert!(n > 0);
    let mean = times.iter().sum::<f64>() / n as f64;
    let mut sorted = times.to_vec();
    sorted.sort_by(f64::total_cmp);
    let median = if n.is_multiple_of(2) {
        (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0
    } else {
        sorted[n / 2]
    };
    let std = if n > 1 {
        (times.iter().map(|t| (t - mean).powi(2)).sum::<f64>() / (n - 1) as f64).sqrt()
    } else {
        0.0
    };
    (mean, median, std)
}

/// Run the timed sweep described by `cfg`.
///
/// A kernel failure marks its `(k, method)` cell as [`CellOutcome::Failed`]
/// and the sweep continues with the next cell.
pub fn bench_sweep(cfg: &BenchConfig) -> Result<BenchReport> {
    cfg.validate()?;
    let mut cells = Vec::new();
    for k in cfg.k_min..=cfg.k_max {
        let dim = 1usize
            .checked_shl(k)
            .ok_or_else(|| Error::InvalidConfig(format!("k = {k} overflows the dimension")))?;
        let runs = run_schedule(k, cfg.runs_base);

        let pair_bytes = 2 * (dim as u128) * (dim as u128) * 16 * (runs as u128);
        let cache: Option<Vec<(DensityMatrix, DensityMatrix)>> =
            if pair_bytes <= PAIR_CACHE_LIMIT_BYTES {
                Some(
                    (0..runs)
                        .map(|i| generate_pair(cfg.seed, k, i, dim))
                        .collect(),
                )
            } else {
                None
            };

        for &method in &cfg.methods {
            let call = |run: u64| -> Result<f64> {
                let (value, dt) = match &cache {
                    Some(pairs) => {
                        let (rho, sigma) = &pairs[run as usize];
                        time_seconds(|| fidelity(rho, sigma, method))
                    }
                    None => {
                        let (rho, sigma) = generate_pair(cfg.seed, k, run, dim);
                        time_seconds(|| fidelity(&rho, &sigma, method))
                    }
                };
                value.map(|_| dt)
            };

            let mut failure = None;
            for w in 0..cfg.warmup_runs {
                if let Err(e) = call(w as u64 % runs) {
                    failure = Some(e.to_string());
                    break;
                }
            }
            let mut times = Vec::with_capacity(runs as usize);
            if failure.is_none() {
                for run in 0..runs {
                    match call(run) {
                        Ok(dt) => times.push(dt),
                        Err(e) => {
                            failure = Some(e.to_string());
                            break;
                        }
                    }
                }
            }

            let outcome = match failure {
                Some(error) => CellOutcome::Failed { error },
                None => {
                    let (mean_s, median_s, std_s) = summarize(&times);
                    CellOutcome::Stats {
                        mean_s,
                        median_s,
                        std_s,
                    }
                }
            };
            cells.push(BenchCell {
                k,
                dim,
                method,
                runs,
                outcome,
            });
        }
    }
    Ok(BenchReport {
        cells,
        seed: cfg.seed,
        timestamp: std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0),
        workers: 1,
    })
}
