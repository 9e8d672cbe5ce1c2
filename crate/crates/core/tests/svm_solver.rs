mod common;

use common::{certify, dot, dual_oracle, dual_value, signed_sum};
use proptest::prelude::*;
use svm_asymptotics::empirical::smo::solve_soft_margin_svm_ipm;
use svm_asymptotics::empirical::*;
use svm_asymptotics::ModelParams;

fn dataset(mu: f64, n: usize, p: usize, seed: u64) -> Dataset {
    let params = ModelParams::balanced(mu, 1.0, n as f64 / p as f64).unwrap();
    generate_dataset(&params, p, seed).unwrap()
}

#[test]
fn small_instance_matches_dense_oracle() {
    let data = dataset(1.0, 12, 4, 3);
    let tau = 2.0;
    let c = tau / 4.0;
    let fit = solve_soft_margin_svm(&data, tau).unwrap();
    certify(&fit, &data, c).unwrap();
    let oracle = dual_value(&data, &dual_oracle(&data, c, 50_000));
    let smo = dual_value(&data, &fit.dual_vars);
    assert!((smo - oracle).abs() <= 1e-8 * (1.0 + oracle.abs()), "smo {smo} vs oracle {oracle}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn solvers_agree_with_dense_oracle(
        n in 4usize..=50, p in 2usize..=20, mu in 0.0f64..3.0, log_c in -2.0f64..1.0, seed in 0u64..1000,
    ) {
        let data = dataset(mu, n, p, seed);
        let c = 10f64.powf(log_c);
        let tau = c * p as f64;
        let oracle = dual_value(&data, &dual_oracle(&data, c, 40_000));
        let tol = 1e-6 * (1.0 + oracle.abs());

        let smo = solve_soft_margin_svm(&data, tau).unwrap();
        certify(&smo, &data, c).map_err(|e| TestCaseError::fail(format!("smo: {e}")))?;
        prop_assert!((dual_value(&data, &smo.dual_vars) - oracle).abs() <= tol);
        prop_assert!((smo.objective - oracle).abs() <= tol);

        let ipm = solve_soft_margin_svm_ipm(&data, tau).unwrap();
        certify(&ipm, &data, c).map_err(|e| TestCaseError::fail(format!("ipm: {e}")))?;
        prop_assert!((ipm.objective - oracle).abs() <= tol);
    }

    #[test]
    fn duplicated_points_with_half_penalty_give_the_same_hyperplane(
        n in 6usize..=30, p in 2usize..=10, mu in 0.5f64..2.0, seed in 0u64..1000,
    ) {
        let data = dataset(mu, n, p, seed);
        let mut rows = Vec::new();
        let mut labels = Vec::new();
        for i in 0..data.n {
            for _ in 0..2 {
                rows.push(data.row(i).to_vec());
                labels.push(data.labels[i]);
            }
        }
        let doubled = Dataset::from_rows(&rows, &labels, data.params).unwrap();
        let tau = 0.5 * p as f64;
        let a = solve_soft_margin_svm(&data, tau).unwrap();
        let b = solve_soft_margin_svm(&doubled, 0.5 * tau).unwrap();
        for (x, y) in a.w.iter().zip(&b.w) {
            prop_assert!((x - y).abs() <= 1e-6);
        }
        prop_assert!((a.b - b.b).abs() <= 1e-6);
    }
}

#[test]
fn hard_margin_fits_are_certified() {
    for seed in 0..5 {
        let data = dataset(1.5, 30, 20, seed);
        let fit = solve_hard_margin_svm(&data).unwrap();
        assert_eq!(fit.status, FitStatus::Optimal);
        assert!(fit.min_margin(&data) >= 1.0 - 1e-6);
        let top = fit.dual_vars.iter().cloned().fold(0.0, f64::max);
        for i in 0..data.n {
            if fit.dual_vars[i] > 1e-8 * top {
                let margin = data.label(i) * (dot(&fit.w, data.row(i)) + fit.b);
                assert!(margin <= 1.0 + 1e-6, "non-tight constraint {i} carries weight");
            }
        }
        let v = signed_sum(&data, &fit.dual_vars);
        for (w, s) in fit.w.iter().zip(&v) {
            assert!((2.0 * w - s).abs() <= 1e-9);
        }
    }
}

#[test]
fn hard_margin_scale_covariance() {
    let data = dataset(1.5, 30, 20, 11);
    let base = solve_hard_margin_svm(&data).unwrap();
    let base_err = exact_error(&base, &data).unwrap();
    for c in [0.3, 4.0] {
        let scaled = data.scaled(c);
        let fit = solve_hard_margin_svm(&scaled).unwrap();
        assert_eq!(fit.status, FitStatus::Optimal);
        assert!((fit.cos_to_mean().unwrap() - base.cos_to_mean().unwrap()).abs() <= 1e-8);
        let err = exact_error(&fit, &scaled).unwrap();
        assert!((err.err_total - base_err.err_total).abs() <= 1e-8);
        assert!((err.err0 - base_err.err0).abs() <= 1e-8);
        assert!((fit.norm() * c - base.norm()).abs() <= 1e-8 * base.norm());
    }
}

#[test]
fn nonseparable_data_are_infeasible() {
    let data = dataset(0.2, 60, 10, 2);
    let fit = solve_hard_margin_svm(&data).unwrap();
    assert_eq!(fit.status, FitStatus::Infeasible);
}

#[test]
fn symmetric_pair_in_both_solvers() {
    let params = ModelParams::balanced(1.0, 1.0, 1.0).unwrap();
    let data = Dataset::from_rows(&[vec![1.0, 0.0], vec![-1.0, 0.0]], &[1, -1], params).unwrap();
    for fit in [
        solve_soft_margin_svm(&data, 1e4).unwrap(),
        solve_soft_margin_svm_ipm(&data, 1e4).unwrap(),
        solve_hard_margin_svm(&data).unwrap(),
    ] {
        assert_eq!(fit.status, FitStatus::Optimal);
        assert!((fit.w[0] - 1.0).abs() < 1e-9 && fit.w[1].abs() < 1e-9 && fit.b.abs() < 1e-9);
        assert!((fit.min_margin(&data) - 1.0).abs() < 1e-9);
    }
}

#[test]
fn many_support_vectors_are_refined_to_exact_margins() {
    // About 150 support vectors, one of them only weakly active.
    let params = ModelParams::balanced(1.0, 1.0, 1.7).unwrap();
    let seed = svm_asymptotics::empirical::experiment::replicate_seed(2024, 9);
    let data = generate_dataset(&params, 200, seed).unwrap();
    let fit = solve_hard_margin_svm(&data).unwrap();
    assert_eq!(fit.status, FitStatus::Optimal);
    assert!(fit.hinge_total <= 1e-10, "hinge {:e}", fit.hinge_total);
    assert!(fit.dual_vars.iter().all(|&l| l >= 0.0));
    let balance: f64 = fit.dual_vars.iter().enumerate().map(|(i, l)| l * data.label(i)).sum();
    assert!(balance.abs() <= 1e-10);
    let v = signed_sum(&data, &fit.dual_vars);
    for (w, s) in fit.w.iter().zip(&v) {
        assert!((2.0 * w - s).abs() <= 1e-12);
    }
    for i in (0..data.n).filter(|&i| fit.dual_vars[i] > 0.0) {
        let margin = data.label(i) * (dot(&fit.w, data.row(i)) + fit.b);
        assert!((margin - 1.0).abs() <= 1e-9);
    }
}
