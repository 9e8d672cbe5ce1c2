use std::process::{Command, Output};

use svm_asymptotics::hard_margin::predict_hard_margin;
use svm_asymptotics::soft_margin::solve_soft_margin_saddle;
use svm_asymptotics::ModelParams;

fn svm_asym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_svm-asym"))
        .args(args)
        .env("SVM_ASYM_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = svm_asym(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

/// Data rows split into fields, header comments and column names removed.
fn data_rows(csv: &str) -> Vec<Vec<String>> {
    csv.lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

fn field(row: &[String], i: usize) -> f64 {
    row[i].parse().unwrap()
}

#[test]
fn figure_one_contains_the_boundary() {
    let csv = stdout(&["reproduce-figure", "1"]);
    assert!(csv.lines().any(|l| l == "mu_over_sigma,delta_critical,paper_delta_critical,pass"));
    let rows = data_rows(&csv);
    assert_eq!(rows.len(), 30);
    let at_one = rows.iter().find(|r| r[0] == "1").unwrap();
    assert!((field(at_one, 1) - 3.700023).abs() <= 1e-2);
    assert!(rows.iter().all(|r| r[3] == "pass"));
}

#[test]
fn theory_soft_row_matches_the_library() {
    let csv = stdout(&["theory-soft", "--tau", "2", "--delta", "2", "--mu", "1.1", "--sigma", "1", "--pi1", "0.5"]);
    let rows = data_rows(&csv);
    assert_eq!(rows.len(), 1);
    let s = solve_soft_margin_saddle(2.0, &ModelParams::balanced(1.1, 1.0, 2.0).unwrap()).unwrap();
    assert_eq!(field(&rows[0], 2), s.rho_star);
    assert_eq!(field(&rows[0], 3), s.q0_star);
    assert_eq!(field(&rows[0], 5), s.err_total);
    assert!(rows[0][6..].iter().all(|f| f.is_empty()));

    // The published coordinates for this point are reproduced at tau = 1.
    let csv = stdout(&["theory-soft", "--tau", "1", "--delta", "2", "--mu", "1.1"]);
    let row = &data_rows(&csv)[0];
    for (i, want) in [(2, 0.797941), (3, 0.606809), (5, 0.190044)] {
        assert!((field(row, i) - want).abs() <= 1e-2, "column {i}");
    }
}

#[test]
fn theory_hard_sweep_leaves_unseparable_rows_empty() {
    let csv = stdout(&["theory-hard", "--mu", "1", "--sweep", "delta", "--grid", "1,4"]);
    assert!(csv.contains("# seed: unused\n"));
    let rows = data_rows(&csv);
    let lim = predict_hard_margin(&ModelParams::balanced(1.0, 1.0, 1.0).unwrap()).unwrap().limits.unwrap();
    assert_eq!(field(&rows[0], 3), lim.q0_star);
    assert_eq!(rows[1][0..2], ["delta", "4"]);
    assert!(rows[1][2..].iter().all(|f| f.is_empty()));
}

#[test]
fn simulate_is_byte_identical_across_runs() {
    let args = ["simulate", "--hard", "--mu", "1", "--delta", "1", "--p", "50", "--reps", "10", "--seed", "7"];
    let first = svm_asym(&args);
    let second = svm_asym(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    let csv = String::from_utf8(first.stdout).unwrap();
    assert!(csv.contains("# seed: 7\n"));
    let row = &data_rows(&csv)[0];
    assert!(row[2..6].iter().all(|f| f.is_empty()));
    let cos = field(row, 6);
    assert!(cos > 0.0 && cos < 1.0);
}

#[test]
fn header_arguments_reproduce_the_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sim.csv");
    let path_str = path.to_str().unwrap();
    let out = svm_asym(&[
        "--out", path_str, "simulate", "--tau", "2", "--sweep", "mu", "--grid", "0.5,1.5", "--p", "20", "--reps", "3",
    ]);
    assert!(out.status.success());
    let original = std::fs::read_to_string(&path).unwrap();
    let header = original.lines().find_map(|l| l.strip_prefix("# args: ")).unwrap();
    let again = stdout(&header.split(' ').collect::<Vec<_>>());
    assert_eq!(original, again);
    assert_eq!(data_rows(&original).len(), 2);
}

#[test]
fn figure_theory_matches_stored_coordinates() {
    let csv = stdout(&["reproduce-figure", "3", "--theory-only"]);
    assert!(csv.contains("# seed: unused\n"));
    let rows = data_rows(&csv);
    assert_eq!(rows.len(), 30);
    assert!(rows.iter().all(|r| r.len() == 23 && r.last().unwrap() == "pass"));
    assert!(rows.iter().all(|r| r[6].is_empty()));
}

#[test]
fn reduced_figure_run_fills_simulation_columns() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("fig5.csv");
    let plot_path = dir.path().join("fig5.gp");
    let out = svm_asym(&[
        "--out",
        csv_path.to_str().unwrap(),
        "--plot",
        plot_path.to_str().unwrap(),
        "reproduce-figure",
        "5",
        "--p",
        "20",
        "--reps",
        "4",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let csv = std::fs::read_to_string(&csv_path).unwrap();
    let rows = data_rows(&csv);
    assert_eq!(rows.len(), 10);
    for r in &rows {
        assert!(!r[6].is_empty() && !r[12].is_empty());
        assert!(r.last().unwrap() == "pass" || r.last().unwrap() == "fail");
    }
    let script = std::fs::read_to_string(&plot_path).unwrap();
    assert!(script.contains(csv_path.to_str().unwrap()));
}

#[test]
fn exit_codes() {
    assert_eq!(svm_asym(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(svm_asym(&["theory-hard", "--sweep", "mu", "--grid", "2,1"]).status.code(), Some(2));
    assert_eq!(svm_asym(&["simulate", "--hard", "--p", "1", "--reps", "3"]).status.code(), Some(2));
    assert_eq!(svm_asym(&["theory-hard", "--pi1", "1.5"]).status.code(), Some(2));
    assert_eq!(svm_asym(&["theory-hard", "--sweep", "tau", "--grid", "1,2"]).status.code(), Some(2));
    let out = svm_asym(&["--out", "/nonexistent-dir/x.csv", "theory-hard"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(!out.stderr.is_empty());
}
