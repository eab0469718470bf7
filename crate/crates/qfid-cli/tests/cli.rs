//! End-to-end tests of the `qfid` binary: exit codes, output formats, and
//! the gen -> compute pipeline.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn qfid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qfid"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn tmp_dir(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn write_file(path: &Path, contents: &str) {
    std::fs::write(path, contents).unwrap();
}

/// Parse `tag value` lines into (tag, value) pairs.
fn parse_value_lines(text: &str) -> Vec<(String, f64)> {
    text.lines()
        .map(|l| {
            let (tag, value) = l.split_once(' ').expect("tag value");
            (tag.to_string(), value.parse().expect("f64 value"))
        })
        .collect()
}

#[test]
fn compute_identical_files_is_one() {
    let dir = tmp_dir("identical");
    let path = dir.join("rho.mat");
    write_file(&path, "dim 2\n0.75+0i 0+0i\n0+0i 0.25+0i\n");
    let out = qfid(&[
        "compute",
        path.to_str().unwrap(),
        path.to_str().unwrap(),
        "--method",
        "eigvals",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let lines = parse_value_lines(&stdout(&out));
    assert_eq!(lines.len(), 1);
    assert_eq!(lines[0].0, "eigvals");
    assert!((lines[0].1 - 1.0).abs() <= 1e-10);
}

#[test]
fn compute_commuting_diagonal_closed_form() {
    let dir = tmp_dir("diag");
    let rho = dir.join("rho.mat");
    let sigma = dir.join("sigma.mat");
    write_file(&rho, "dim 2\n0.75+0i 0+0i\n0+0i 0.25+0i\n");
    write_file(&sigma, "dim 2\n0.5+0i 0+0i\n0+0i 0.5+0i\n");
    let out = qfid(&[
        "compute",
        rho.to_str().unwrap(),
        sigma.to_str().unwrap(),
        "--method",
        "two_sqrtm",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let lines = parse_value_lines(&stdout(&out));
    let expected = (2.0 + 3.0f64.sqrt()) / 4.0;
    assert!((lines[0].1 - expected).abs() < 1e-12);
}

#[test]
fn compute_all_prints_five_lines_and_spread() {
    let dir = tmp_dir("all");
    let out_gen = qfid(&[
        "gen",
        "--family",
        "mixed-full-rank",
        "--dim",
        "4",
        "--seed",
        "3",
        "--out",
        dir.join("a.mat").to_str().unwrap(),
    ]);
    assert_eq!(out_gen.status.code(), Some(0));
    let out_gen = qfid(&[
        "gen",
        "--family",
        "mixed-full-rank",
        "--dim",
        "4",
        "--seed",
        "4",
        "--out",
        dir.join("b.mat").to_str().unwrap(),
    ]);
    assert_eq!(out_gen.status.code(), Some(0));

    let out = qfid(&[
        "compute",
        dir.join("a.mat").to_str().unwrap(),
        dir.join("b.mat").to_str().unwrap(),
        "--method",
        "all",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 6);
    let tags: Vec<&str> = lines[..5]
        .iter()
        .map(|l| l.split_once(' ').unwrap().0)
        .collect();
    assert_eq!(
        tags,
        vec![
            "two_sqrtm",
            "three_svd",
            "sqrtmh_eigvalsh",
            "sqrtm_svd_svd",
            "eigvals"
        ]
    );
    let spread: f64 = lines[5].strip_prefix("spread ").unwrap().parse().unwrap();
    assert!(spread <= 1e-9);
    for (_, v) in parse_value_lines(&lines[..5].join("\n")) {
        assert!((0.0..=1.0).contains(&v));
    }
}

#[test]
fn compute_validation_failure_exits_2() {
    let dir = tmp_dir("invalid");
    let bad = dir.join("bad.mat");
    write_file(&bad, "dim 2\n0.6+0i 0+0i\n0+0i 0.6+0i\n"); // trace 1.2
    let out = qfid(&["compute", bad.to_str().unwrap(), bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let garbled = dir.join("garbled.mat");
    write_file(&garbled, "dim 2\n0.6+0i\n");
    let out = qfid(&[
        "compute",
        garbled.to_str().unwrap(),
        garbled.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn compute_dimension_mismatch_exits_3() {
    let dir = tmp_dir("mismatch");
    let a = dir.join("a.mat");
    let b = dir.join("b.mat");
    write_file(&a, "dim 1\n1+0i\n");
    write_file(&b, "dim 2\n0.5+0i 0+0i\n0+0i 0.5+0i\n");
    let out = qfid(&["compute", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn compute_missing_file_exits_74() {
    let out = qfid(&["compute", "/nonexistent/rho.mat", "/nonexistent/sigma.mat"]);
    assert_eq!(out.status.code(), Some(74));
}

#[test]
fn unknown_flag_exits_64() {
    let out = qfid(&["compute", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn verify_small_grid_passes_and_is_deterministic() {
    let out1 = qfid(&["verify", "--dims", "2", "--trials", "1", "--seed", "11"]);
    assert_eq!(out1.status.code(), Some(0));
    let text1 = stdout(&out1);
    assert!(text1.contains("all suites passed"));
    for suite in [
        "trace_eigenvalue_sum",
        "spectrum_cyclicity",
        "mapped_cyclicity",
        "route_equivalence",
        "symmetry",
        "range",
        "commuting_reduction",
        "pure_reduction",
    ] {
        assert!(text1.contains(suite), "missing suite {suite}");
    }

    let out2 = qfid(&["verify", "--dims", "2", "--trials", "1", "--seed", "11"]);
    assert_eq!(
        stdout(&out2),
        text1,
        "seeded runs must print identical deviations"
    );
}

#[test]
fn verify_zero_trials_exits_64() {
    let out = qfid(&["verify", "--dims", "2", "--trials", "0"]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn gen_dim_one_writes_unit_state() {
    let dir = tmp_dir("gen1");
    let path = dir.join("one.mat");
    let out = qfid(&[
        "gen",
        "--family",
        "mixed-full-rank",
        "--dim",
        "1",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "dim 1\n1+0i\n");
}

#[test]
fn gen_same_seed_is_byte_identical() {
    let dir = tmp_dir("gen_det");
    let p1 = dir.join("x1.mat");
    let p2 = dir.join("x2.mat");
    for (p, _) in [(&p1, 0), (&p2, 1)] {
        let out = qfid(&[
            "gen",
            "--family",
            "pure",
            "--dim",
            "6",
            "--seed",
            "42",
            "--out",
            p.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    assert_eq!(std::fs::read(&p1).unwrap(), std::fs::read(&p2).unwrap());
}

#[test]
fn gen_pair_families_write_suffixed_files() {
    let dir = tmp_dir("gen_pair");
    let out = qfid(&[
        "gen",
        "--family",
        "commuting-pair",
        "--dim",
        "4",
        "--seed",
        "5",
        "--out",
        dir.join("pair.mat").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(dir.join("pair_a.mat").exists());
    assert!(dir.join("pair_b.mat").exists());

    // pipeline: gen -> compute(all) stays in range with tight spread
    let out = qfid(&[
        "compute",
        dir.join("pair_a.mat").to_str().unwrap(),
        dir.join("pair_b.mat").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let spread: f64 = text
        .lines()
        .last()
        .unwrap()
        .strip_prefix("spread ")
        .unwrap()
        .parse()
        .unwrap();
    assert!(spread <= 1e-9);
}

#[test]
fn gen_invalid_rank_exits_64() {
    let dir = tmp_dir("gen_bad");
    let out = qfid(&[
        "gen",
        "--family",
        "rank-deficient",
        "--dim",
        "4",
        "--rank",
        "9",
        "--out",
        dir.join("x.mat").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(64));

    let out = qfid(&[
        "gen",
        "--family",
        "pure",
        "--dim",
        "4",
        "--rank",
        "2",
        "--out",
        dir.join("y.mat").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn gen_unwritable_path_exits_74() {
    let out = qfid(&[
        "gen",
        "--family",
        "pure",
        "--dim",
        "2",
        "--out",
        "/nonexistent_dir/x.mat",
    ]);
    assert_eq!(out.status.code(), Some(74));
}

#[test]
fn bench_tiny_sweep_csv_and_svg() {
    let dir = tmp_dir("bench");
    let csv = dir.join("report.csv");
    let svg = dir.join("report.svg");
    let out = qfid(&[
        "bench",
        "--k-min",
        "2",
        "--k-max",
        "2",
        "--runs-base",
        "4",
        "--method",
        "eigvals",
        "--warmup",
        "1",
        "--csv",
        csv.to_str().unwrap(),
        "--svg",
        svg.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));

    let text = std::fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "k,dim,method,runs,mean_s,median_s,std_s");
    assert_eq!(lines.len(), 2, "one data row");
    let cols: Vec<&str> = lines[1].split(',').collect();
    assert_eq!(cols[0], "2");
    assert_eq!(cols[1], "4");
    assert_eq!(cols[2], "eigvals");
    assert_eq!(cols[3], "8"); // ceil(4 / 2^-1)

    let svg_text = std::fs::read_to_string(&svg).unwrap();
    assert!(svg_text.starts_with("<svg"));
    assert!(svg_text.contains("eigvals"));

    // fastest-method table on stdout
    let table = stdout(&out);
    assert!(table.lines().next().unwrap().starts_with("k,dim,fastest"));
    assert!(table.contains("2,4,eigvals"));
}

#[test]
fn bench_desk_scale_row_count() {
    let dir = tmp_dir("bench_rows");
    let csv = dir.join("rows.csv");
    let out = qfid(&[
        "bench",
        "--k-min",
        "1",
        "--k-max",
        "3",
        "--runs-base",
        "2",
        "--warmup",
        "0",
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&csv).unwrap();
    // (k_max - k_min + 1) x 5 methods + header
    assert_eq!(text.lines().count(), 3 * 5 + 1);
}

#[test]
fn bench_full_paper_scale_schedule_at_k1() {
    let dir = tmp_dir("bench_fullscale");
    let csv = dir.join("fullscale_k1.csv");
    // restrict the sweep to k = 1 but keep the paper-scale runs_base = 10^4
    let out = qfid(&[
        "bench",
        "--full-paper-scale",
        "--k-max",
        "1",
        "--method",
        "eigvals",
        "--warmup",
        "0",
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&csv).unwrap();
    let cols: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(cols[3], "40000"); // ceil(10^4 / 2^-2)
}

#[test]
fn bench_config_file_with_flag_override() {
    let dir = tmp_dir("bench_cfg");
    let cfg = dir.join("bench.cfg");
    write_file(
        &cfg,
        "k_min = 1\nk_max = 1\nruns_base = 4\nmethods = eigvals\nseed = 9\nwarmup_runs = 0\n",
    );
    let csv = dir.join("cfg.csv");
    let out = qfid(&[
        "bench",
        "--config",
        cfg.to_str().unwrap(),
        "--runs-base",
        "2",
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&csv).unwrap();
    let cols: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(cols[0], "1");
    assert_eq!(cols[3], "8"); // runs_base 2 overrides the file's 4
}
