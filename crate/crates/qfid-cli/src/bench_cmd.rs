//! `qfid bench`: the timing sweep with CSV and SVG reports.

use qfid::bench::{bench_sweep, emit_csv, emit_plot, parse_methods, BenchConfig, CellOutcome};
use qfid::Result;
use std::path::PathBuf;

pub struct Flags {
    pub k_min: Option<u32>,
    pub k_max: Option<u32>,
    pub runs_base: Option<u64>,
    pub seed: Option<u64>,
    pub warmup: Option<u32>,
    pub method: Option<String>,
    pub csv: Option<PathBuf>,
    pub svg: Option<PathBuf>,
    pub config: Option<PathBuf>,
    pub full_paper_scale: bool,
}

/// Precedence: desk-scale defaults < config file < `--full-paper-scale` <
/// explicit flags.
fn build_config(flags: &Flags) -> Result<BenchConfig> {
    let mut cfg = match &flags.config {
        Some(path) => BenchConfig::parse_config(&std::fs::read_to_string(path)?)?,
        None => BenchConfig::desk_scale(),
    };
    if flags.full_paper_scale {
        cfg.k_min = 1;
        cfg.k_max = 13;
        cfg.runs_base = 10_000;
    }
    if let Some(k) = flags.k_min {
        cfg.k_min = k;
    }
    if let Some(k) = flags.k_max {
        cfg.k_max = k;
    }
    if let Some(r) = flags.runs_base {
        cfg.runs_base = r;
    }
    if let Some(s) = flags.seed {
        cfg.seed = s;
    }
    if let Some(w) = flags.warmup {
        cfg.warmup_runs = w;
    }
    if let Some(list) = &flags.method {
        cfg.methods = parse_methods(list)?;
    }
    cfg.validate()?;
    Ok(cfg)
}

pub fn run(flags: Flags) -> Result<i32> {
    let cfg = build_config(&flags)?;
    eprintln!(
        "sweep: k = {}..{}, runs_base = {}, seed = {}, warmup = {}, methods = {}",
        cfg.k_min,
        cfg.k_max,
        cfg.runs_base,
        cfg.seed,
        cfg.warmup_runs,
        cfg.methods
            .iter()
            .map(|m| m.tag())
            .collect::<Vec<_>>()
            .join(",")
    );
    let report = bench_sweep(&cfg)?;

    if let Some(path) = &flags.csv {
        std::fs::write(path, emit_csv(&report))?;
        eprintln!("wrote {}", path.display());
    }
    if let Some(path) = &flags.svg {
        std::fs::write(path, emit_plot(&report)?)?;
        eprintln!("wrote {}", path.display());
    }

    // fastest method per size
    println!("k,dim,fastest,mean_s");
    for k in cfg.k_min..=cfg.k_max {
        let best = report
            .cells
            .iter()
            .filter(|c| c.k == k)
            .filter_map(|c| match c.outcome {
                CellOutcome::Stats { mean_s, .. } => Some((c, mean_s)),
                CellOutcome::Failed { .. } => None,
            })
            .min_by(|a, b| a.1.total_cmp(&b.1));
        match best {
            Some((cell, mean)) => println!("{k},{},{},{}", cell.dim, cell.method.tag(), mean),
            None => println!("{k},{},none,error", 1u64 << k),
        }
    }
    for cell in &report.cells {
        if let CellOutcome::Failed { error } = &cell.outcome {
            eprintln!("cell k={} {} failed: {error}", cell.k, cell.method.tag());
        }
    }

    Ok(if report.has_failures() { 1 } else { 0 })
}
