//! CSV emission for benchmark reports.

use super::{BenchReport, CellOutcome};
use crate::fidelity::FidelityMethod;

/// Column header; fixed byte-for-byte.
pub const CSV_HEADER: &str = "k,dim,method,runs,mean_s,median_s,std_s";

fn method_order(m: FidelityMethod) -> usize {
    FidelityMethod::ALL.iter().position(|&x| x == m).unwrap()
}

/// Emit a report as CSV: the fixed header, then one row per cell, sorted by
/// `(k, method tag order)`. Timings are written as shortest round-trip
/// decimals, so parsing the output reconstructs the report exactly. Failed
/// cells carry the literal `error` in the three statistics columns.
pub fn emit_csv(report: &BenchReport) -> String {
    let mut cells: Vec<_> = report.cells.iter().collect();
    cells.sort_by_key(|c| (c.k, method_order(c.method)));

    let mut out = String::with_capacity(64 * (cells.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for cell in cells {
        match &cell.outcome {
            CellOutcome::Stats {
                mean_s,
                median_s,
                std_s,
            } => {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    cell.k,
                    cell.dim,
                    cell.method.tag(),
                    cell.runs,
                    mean_s,
                    median_s,
                    std_s
                ));
            }
            CellOutcome::Failed { .. } => {
                out.push_str(&format!(
                    "{},{},{},{},error,error,error\n",
                    cell.k,
                    cell.dim,
                    cell.method.tag(),
                    cell.runs
                ));
            }
        }
    }
    out
}
