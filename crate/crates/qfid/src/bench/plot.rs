//! SVG chart emission: mean call time per method over system size, log-scale
//! y axis.

use super::{BenchReport, CellOutcome};
use crate::fidelity::FidelityMethod;
use crate::{Error, Result};
use std::fmt::Write;

/// Vertical pixels per factor-of-ten on the y axis; one decade exactly.
pub const DECADE_PX: f64 = 70.0;

const X_STEP_PX: f64 = 56.0;
const MARGIN_LEFT: f64 = 64.0;
const MARGIN_TOP: f64 = 32.0;
const MARGIN_BOTTOM: f64 = 48.0;
const LEGEND_WIDTH: f64 = 170.0;

const COLORS: [&str; 5] = ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd"];

struct Point {
    k: u32,
    mean_s: f64,
}

/// Render the report as an SVG line chart: one polyline per method, `k` on
/// the x axis, mean seconds on a log₁₀ y axis, with the method labels in the
/// legend. Fails on an empty report and on non-positive timings (which the
/// sweep cannot produce).
pub fn emit_plot(report: &BenchReport) -> Result<String> {
    let mut series: Vec<(FidelityMethod, Vec<Point>)> = Vec::new();
    for method in FidelityMethod::ALL {
        let mut points: Vec<Point> = report
            .cells
            .iter()
            .filter(|c| c.method == method)
            .filter_map(|c| match c.outcome {
                CellOutcome::Stats { mean_s, .. } => Some(Point { k: c.k, mean_s }),
                CellOutcome::Failed { .. } => None,
            })
            .collect();
        points.sort_by_key(|p| p.k);
        if !points.is_empty() {
            series.push((method, points));
        }
    }
    if series.is_empty() {
        return Err(Error::EmptyReport);
    }
    for (_, points) in &series {
        if let Some(p) = points.iter().find(|p| p.mean_s <= 0.0) {
            return Err(Error::InvalidConfig(format!(
                "non-positive timing {} at k = {}",
                p.mean_s, p.k
            )));
        }
    }

    let k_min = series
        .iter()
        .flat_map(|(_, p)| p.iter().map(|x| x.k))
        .min()
        .unwrap();
    let k_max = series
        .iter()
        .flat_map(|(_, p)| p.iter().map(|x| x.k))
        .max()
        .unwrap();
    let log_min = series
        .iter()
        .flat_map(|(_, p)| p.iter().map(|x| x.mean_s.log10()))
        .fold(f64::INFINITY, f64::min);
    let log_max = series
        .iter()
        .flat_map(|(_, p)| p.iter().map(|x| x.mean_s.log10()))
        .fold(f64::NEG_INFINITY, f64::max);
    let decade_lo = log_min.floor() as i64;
    let mut decade_hi = log_max.ceil() as i64;
    if decade_hi == decade_lo || (log_max - decade_hi as f64).abs() < 1e-12 {
        decade_hi += 1; // headroom when the max sits exactly on a decade
    }

    let plot_w = (k_max - k_min).max(1) as f64 * X_STEP_PX;
    let plot_h = (decade_hi - decade_lo) as f64 * DECADE_PX;
    let width = MARGIN_LEFT + plot_w + 24.0 + LEGEND_WIDTH;
    let height = MARGIN_TOP + plot_h + MARGIN_BOTTOM;

    let x = |k: u32| MARGIN_LEFT + (k - k_min) as f64 * X_STEP_PX;
    let y = |mean: f64| MARGIN_TOP + (decade_hi as f64 - mean.log10()) * DECADE_PX;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r##"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"##
    );
    let _ = writeln!(
        svg,
        r##"<rect width="{width}" height="{height}" fill="white"/>"##
    );

    // decade gridlines and labels
    for d in decade_lo..=decade_hi {
        let gy = MARGIN_TOP + (decade_hi - d) as f64 * DECADE_PX;
        let _ = writeln!(
            svg,
            r##"<line x1="{MARGIN_LEFT}" y1="{gy}" x2="{}" y2="{gy}" stroke="#dddddd" stroke-width="1"/>"##,
            MARGIN_LEFT + plot_w
        );
        let _ = writeln!(
            svg,
            r##"<text x="{}" y="{}" font-size="11" text-anchor="end" fill="#333333">1e{d}</text>"##,
            MARGIN_LEFT - 6.0,
            gy + 4.0
        );
    }
    // x ticks
    for k in k_min..=k_max {
        let tx = x(k);
        let base = MARGIN_TOP + plot_h;
        let _ = writeln!(
            svg,
            r##"<line x1="{tx}" y1="{base}" x2="{tx}" y2="{}" stroke="#333333" stroke-width="1"/>"##,
            base + 4.0
        );
        let _ = writeln!(
            svg,
            r##"<text x="{tx}" y="{}" font-size="11" text-anchor="middle" fill="#333333">{k}</text>"##,
            base + 18.0
        );
    }
    // axis labels
    let _ = writeln!(
        svg,
        r##"<text x="{}" y="{}" font-size="12" text-anchor="middle" fill="#111111">system size k [qubits]</text>"##,
        MARGIN_LEFT + plot_w / 2.0,
        height - 10.0
    );
    let _ = writeln!(
        svg,
        r##"<text x="14" y="{}" font-size="12" text-anchor="middle" fill="#111111" transform="rotate(-90 14 {})">mean time per call [s]</text>"##,
        MARGIN_TOP + plot_h / 2.0,
        MARGIN_TOP + plot_h / 2.0
    );

    // polylines
    for (idx, (method, points)) in series.iter().enumerate() {
        let color = COLORS[FidelityMethod::ALL
            .iter()
            .position(|&m| m == *method)
            .unwrap()];
        let coords: Vec<String> = points
            .iter()
            .map(|p| format!("{},{}", x(p.k), y(p.mean_s)))
            .collect();
        let _ = writeln!(
            svg,
            r##"<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{}"/>"##,
            coords.join(" ")
        );
        // legend entry
        let ly = MARGIN_TOP + 10.0 + idx as f64 * 18.0;
        let lx = MARGIN_LEFT + plot_w + 24.0;
        let _ = writeln!(
            svg,
            r##"<line x1="{lx}" y1="{ly}" x2="{}" y2="{ly}" stroke="{color}" stroke-width="1.5"/>"##,
            lx + 22.0
        );
        let _ = writeln!(
            svg,
            r##"<text x="{}" y="{}" font-size="11" fill="#111111">{}</text>"##,
            lx + 28.0,
            ly + 4.0,
            method.figure_label()
        );
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bench::BenchCell;

    fn stats_cell(k: u32, method: FidelityMethod, mean: f64) -> BenchCell {
        BenchCell {
            k,
            dim: 1 << k,
            method,
            runs: 4,
            outcome: CellOutcome::Stats {
                mean_s: mean,
                median_s: mean,
                std_s: 0.0,
            },
        }
    }

    fn report_with(cells: Vec<BenchCell>) -> BenchReport {
        BenchReport {
            cells,
            seed: 0,
            timestamp: 0,
            workers: 1,
        }
    }

    fn polyline_points(svg: &str) -> Vec<Vec<(f64, f64)>> {
        svg.lines()
            .filter(|l| l.contains("<polyline"))
            .map(|l| {
                let start = l.find("points=\"").unwrap() + 8;
                let end = l[start..].find('"').unwrap() + start;
                l[start..end]
                    .split(' ')
                    .map(|pair| {
                        let (px, py) = pair.split_once(',').unwrap();
                        (px.parse().unwrap(), py.parse().unwrap())
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn single_method_three_sizes_is_one_polyline() {
        let report = report_with(vec![
            stats_cell(1, FidelityMethod::Eigvals, 1e-5),
            stats_cell(2, FidelityMethod::Eigvals, 2e-5),
            stats_cell(3, FidelityMethod::Eigvals, 8e-5),
        ]);
        let svg = emit_plot(&report).unwrap();
        let lines = polyline_points(&svg);
        assert_eq!(lines.len(), 1);
        assert_eq!(lines[0].len(), 3);
    }

    #[test]
    fn one_decade_apart_means_one_decade_unit_apart() {
        let report = report_with(vec![
            stats_cell(1, FidelityMethod::Eigvals, 1e-3),
            stats_cell(2, FidelityMethod::Eigvals, 1e-2),
        ]);
        let svg = emit_plot(&report).unwrap();
        let points = &polyline_points(&svg)[0];
        let dy = points[0].1 - points[1].1;
        assert!(
            (dy - DECADE_PX).abs() < 1e-9,
            "decade step {dy} px vs {DECADE_PX}"
        );
    }

    #[test]
    fn legend_carries_all_five_labels_verbatim() {
        let cells = FidelityMethod::ALL
            .into_iter()
            .enumerate()
            .flat_map(|(i, m)| {
                (1..=3).map(move |k| stats_cell(k, m, 1e-5 * (i + 1) as f64 * k as f64))
            })
            .collect();
        let svg = emit_plot(&report_with(cells)).unwrap();
        for label in [
            "2x sqrtm",
            "3x svd",
            "sqrtmh + eigvalsh",
            "sqrtm_svd + svd",
            "eigvals",
        ] {
            assert!(svg.contains(&format!(">{label}</text>")), "missing {label}");
        }
        assert_eq!(polyline_points(&svg).len(), 5);
    }

    #[test]
    fn empty_report_rejected() {
        assert!(matches!(
            emit_plot(&report_with(vec![])),
            Err(Error::EmptyReport)
        ));
    }

    #[test]
    fn failed_cells_are_skipped() {
        let mut cells = vec![
            stats_cell(1, FidelityMethod::Eigvals, 1e-5),
            stats_cell(2, FidelityMethod::Eigvals, 2e-5),
        ];
        cells.push(BenchCell {
            k: 3,
            dim: 8,
            method: FidelityMethod::Eigvals,
            runs: 4,
            outcome: CellOutcome::Failed { error: "x".into() },
        });
        let svg = emit_plot(&report_with(cells)).unwrap();
        assert_eq!(polyline_points(&svg)[0].len(), 2);
    }
}
