//! `qfid` — compute, verify, generate, and benchmark quantum fidelity.
//!
//! Exit codes: 0 success, 1 property or benchmark failure, 2 parse or
//! validation failure, 3 dimension mismatch, 64 usage, 74 I/O.

mod bench_cmd;
mod compute;
mod gen;
mod verify;

use clap::{Parser, Subcommand};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "qfid",
    version,
    about = "Uhlmann fidelity between mixed quantum states: compute, verify, generate, benchmark"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute fidelity between two density-matrix files
    Compute {
        /// Path to the first state (rho)
        rho: PathBuf,
        /// Path to the second state (sigma)
        sigma: PathBuf,
        /// Method tag (two_sqrtm | three_svd | sqrtmh_eigvalsh | sqrtm_svd_svd | eigvals) or `all`
        #[arg(long, default_value = "all")]
        method: String,
    },
    /// Run the spectrum-identity and fidelity property suites
    Verify {
        /// Comma-separated list of dimensions
        #[arg(long, default_value = "2,4,8,16")]
        dims: String,
        /// Trials per suite and dimension
        #[arg(long, default_value_t = 25)]
        trials: u64,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Generate random density-matrix files
    Gen {
        /// State family: mixed-full-rank | pure | commuting-pair | rank-deficient | identical-pair
        #[arg(long)]
        family: String,
        /// Matrix dimension
        #[arg(long)]
        dim: usize,
        /// Rank (rank-deficient family only)
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Output path; pair families write `_a` / `_b` suffixed files
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the timing sweep and emit CSV / SVG reports
    Bench {
        /// Smallest system size in qubits (dim = 2^k)
        #[arg(long)]
        k_min: Option<u32>,
        /// Largest system size in qubits
        #[arg(long)]
        k_max: Option<u32>,
        /// Baseline run count; size k times ceil(runs_base / 2^(k-3)) calls
        #[arg(long)]
        runs_base: Option<u64>,
        /// Seed for the deterministic pair sequence
        #[arg(long)]
        seed: Option<u64>,
        /// Discarded calls per (k, method) before timing
        #[arg(long)]
        warmup: Option<u32>,
        /// Comma-separated method tags, or `all`
        #[arg(long)]
        method: Option<String>,
        /// Write the report as CSV to this path
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Write the report as an SVG chart to this path
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Key-value config file; explicit flags override its entries
        #[arg(long)]
        config: Option<PathBuf>,
        /// Original experiment scale: k = 1..13, runs_base = 10^4
        #[arg(long)]
        full_paper_scale: bool,
    },
}

/// Stable mapping from library errors to exit codes.
fn exit_code_for(err: &qfid::Error) -> i32 {
    use qfid::Error::*;
    match err {
        DimensionMismatch { .. } => 3,
        Io(_) => 74,
        InvalidConfig(_) | RankOutOfRange { .. } | ZeroDimension => 64,
        NotHermitian { .. }
        | TraceNotOne { .. }
        | NotPsd { .. }
        | NonFinite { .. }
        | NotSquare { .. }
        | Parse { .. } => 2,
        _ => 1,
    }
}

fn real_main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
            let _ = e.print();
            return code;
        }
    };

    let result = match cli.command {
        Command::Compute { rho, sigma, method } => compute::run(&rho, &sigma, &method),
        Command::Verify { dims, trials, seed } => verify::run(&dims, trials, seed),
        Command::Gen {
            family,
            dim,
            rank,
            seed,
            out,
        } => gen::run(&family, dim, rank, seed, &out),
        Command::Bench {
            k_min,
            k_max,
            runs_base,
            seed,
            warmup,
            method,
            csv,
            svg,
            config,
            full_paper_scale,
        } => bench_cmd::run(bench_cmd::Flags {
            k_min,
            k_max,
            runs_base,
            seed,
            warmup,
            method,
            csv,
            svg,
            config,
            full_paper_scale,
        }),
    };

    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

fn main() {
    std::process::exit(real_main());
}
