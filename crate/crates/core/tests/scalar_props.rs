use std::cell::RefCell;

use proptest::prelude::*;
use svm_asymptotics::gauss::{hinge_moment, hinge_sq_moment};
use svm_asymptotics::scalar::*;

#[test]
fn golden_min_matches_dense_grid() {
    let f = |x: f64| hinge_sq_moment(x) + x;
    let (x, v) = golden_min(f, Bracket::new(-3.0, 3.0).unwrap(), &SolverConfig::default()).unwrap();
    let grid = (0..=100_000)
        .map(|k| -3.0 + 6.0 * k as f64 / 100_000.0)
        .min_by(|a, b| f(*a).total_cmp(&f(*b)))
        .unwrap();
    assert!((x - grid).abs() < 1e-4, "golden {x} vs grid {grid}");
    assert!(v <= f(grid) + 1e-12);
    // The stationary point solves 2·E(G − x)₊ = 1.
    assert!((2.0 * hinge_moment(x) - 1.0).abs() < 1e-6);
}

#[test]
fn bisect_matches_dense_grid() {
    let f = |x: f64| hinge_moment(x) - 0.1;
    let x = bisect_root(f, Bracket::new(-5.0, 5.0).unwrap(), &SolverConfig::default()).unwrap();
    let grid = (0..=100_000)
        .map(|k| -5.0 + 10.0 * k as f64 / 100_000.0)
        .min_by(|a, b| f(*a).abs().total_cmp(&f(*b).abs()))
        .unwrap();
    assert!((x - grid).abs() < 1e-4);
    assert!((x - 0.902_346).abs() < 1e-6);
}

#[test]
fn log_minus_linear_bracket_holds_one() {
    let out = expand_bracket_for_max(|x: f64| x.ln() - x, Bracket::new(0.1, 0.5).unwrap(), 2.0, 1e6).unwrap();
    assert!(out.bracket.contains(1.0) && !out.at_cap);
}

proptest! {
    #[test]
    fn golden_recovers_quadratic_vertex(a in 0.1f64..100.0, v in -50.0f64..50.0, left in 0.1f64..30.0, right in 0.1f64..30.0) {
        let cfg = SolverConfig::default();
        let (x, _) = golden_min(|x| a * (x - v).powi(2), Bracket::new(v - left, v + right).unwrap(), &cfg).unwrap();
        prop_assert!((x - v).abs() <= 2.0 * cfg.tol_x, "x = {x}, v = {v}");
    }

    #[test]
    fn golden_with_offset_reaches_sqrt_eps(a in 0.1f64..100.0, v in -5.0f64..5.0, c in -10.0f64..10.0) {
        let (x, _) = golden_min(|x| a * (x - v).powi(2) + c, Bracket::new(-10.0, 10.0).unwrap(), &SolverConfig::default()).unwrap();
        prop_assert!((x - v).abs() <= 1e-7 * (1.0 + (c.abs() / a).sqrt()));
    }

    #[test]
    fn bisect_stays_inside_bracket(r in -10.0f64..10.0, s in prop::bool::ANY, lo in 0.1f64..20.0, hi in 0.1f64..20.0) {
        let sign = if s { 1.0 } else { -1.0 };
        let seen = RefCell::new(Vec::new());
        let bracket = Bracket::new(r - lo, r + hi).unwrap();
        let root = bisect_root(
            |x| {
                seen.borrow_mut().push(x);
                sign * ((x - r).powi(3) + (x - r))
            },
            bracket,
            &SolverConfig::default(),
        )
        .unwrap();
        prop_assert!(seen.borrow().iter().all(|&x| bracket.contains(x)));
        prop_assert!((root - r).abs() <= 1e-10);
    }

    #[test]
    fn solvers_are_deterministic(c in -3.0f64..3.0) {
        let cfg = SolverConfig::default();
        let b = Bracket::new(-4.0, 4.0).unwrap();
        let f = |x: f64| hinge_sq_moment(x - c) + x;
        let g = |x: f64| hinge_moment(x) - hinge_moment(c);
        let first = (golden_min(f, b, &cfg).unwrap(), bisect_root(g, b, &cfg).unwrap());
        let second = (golden_min(f, b, &cfg).unwrap(), bisect_root(g, b, &cfg).unwrap());
        prop_assert_eq!(first.0 .0.to_bits(), second.0 .0.to_bits());
        prop_assert_eq!(first.1.to_bits(), second.1.to_bits());
    }

    #[test]
    fn expansion_brackets_concave_peak(c in 0.01f64..1e5) {
        let out = expand_bracket_for_max(|x| -(x - c).powi(2), Bracket::new(0.1, 1.0).unwrap(), 2.0, 1e6).unwrap();
        prop_assert!(!out.at_cap);
        prop_assert!(out.bracket.contains(c));
    }
}

#[test]
fn increasing_function_hits_cap() {
    let out = expand_bracket_for_max(|x: f64| x, Bracket::new(0.1, 1.0).unwrap(), 2.0, 1e6).unwrap();
    assert!(out.at_cap);
    assert_eq!(out.bracket.hi(), 1e6);
}
