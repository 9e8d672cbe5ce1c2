mod common;

use common::gauss_integral;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use svm_asymptotics::gauss::*;

const TOL: f64 = 1e-10;

fn check(name: &str, a: f64, closed: f64, oracle: f64) {
    assert!(
        (closed - oracle).abs() <= TOL,
        "{name}({a}): closed form {closed:e} vs quadrature {oracle:e}"
    );
}

#[test]
fn closed_forms_match_quadrature_on_random_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..10_000 {
        let a: f64 = rng.random_range(-8.0..8.0);
        let b = a + rng.random_range(0.0..8.0);
        check("Q", a, q_function(a), gauss_integral(|_| 1.0, a, f64::INFINITY));
        for k in 0..3 {
            let m = partial_moment(k, a).unwrap();
            check("M", a, m, gauss_integral(|t| t.powi(k as i32), a, f64::INFINITY));
        }
        check("hinge", a, hinge_moment(a), gauss_integral(|t| t - a, a, f64::INFINITY));
        check("hinge_sq", a, hinge_sq_moment(a), gauss_integral(|t| (t - a).powi(2), a, f64::INFINITY));
        check(
            "interval",
            a,
            interval_shifted_sq(a, b).unwrap(),
            gauss_integral(|t| (t - a).powi(2), a, b),
        );
    }
}

#[test]
fn frozen_reference_values() {
    assert!((hinge_moment(0.0) - 0.398_942_280_401_432_7).abs() < 1e-15);
    assert!((hinge_moment(5.0) - 5.3458e-8).abs() < 1e-11);
    assert!((hinge_moment(-10.0) - 10.0).abs() < 1e-8);
    assert!((hinge_sq_moment(0.0) - 0.5).abs() < 1e-15);
    assert!((hinge_sq_moment(1.0) - 0.075_339_783).abs() < 1e-9);
    assert!((hinge_sq_moment(-20.0) - 401.0).abs() < 1e-9);
    assert!((interval_shifted_sq(0.0, 1.0).unwrap() - 0.099_374_022).abs() < 1e-9);
    assert_eq!(interval_shifted_sq(0.3, 0.3).unwrap(), 0.0);
    assert_eq!(interval_shifted_sq(0.0, f64::INFINITY).unwrap(), 0.5);
    assert!((partial_moment(2, 1.0).unwrap() - 0.400_625_978).abs() < 1e-9);
}

#[test]
fn tails_saturate_at_the_cutoff() {
    assert_eq!(q_function(41.0), 0.0);
    assert_eq!(q_function(-41.0), 1.0);
    assert_eq!(hinge_moment(50.0), 0.0);
    assert_eq!(hinge_moment(-50.0), 50.0);
    assert_eq!(hinge_sq_moment(-50.0), 2501.0);
}

proptest! {
    #[test]
    fn q_symmetry(x in -40.0f64..40.0) {
        prop_assert!((q_function(x) + q_function(-x) - 1.0).abs() <= 1e-14);
    }

    #[test]
    fn hinge_moments_strictly_decrease(mut xs in prop::collection::vec(-8.0f64..8.0, 2..50)) {
        xs.sort_by(f64::total_cmp);
        xs.dedup_by(|a, b| (*a - *b).abs() < 1e-9);
        for w in xs.windows(2) {
            prop_assert!(hinge_moment(w[0]) > hinge_moment(w[1]));
            prop_assert!(hinge_sq_moment(w[0]) > hinge_sq_moment(w[1]));
        }
    }

    #[test]
    fn hinge_sq_expands_into_moments(a in -8.0f64..8.0) {
        let m0 = partial_moment(0, a).unwrap();
        let m1 = partial_moment(1, a).unwrap();
        let m2 = partial_moment(2, a).unwrap();
        let scale = 1.0 + m2.abs() + (a * m1).abs() + (a * a * m0).abs();
        prop_assert!((hinge_sq_moment(a) - (m2 - 2.0 * a * m1 + a * a * m0)).abs() <= 1e-12 * scale);
    }

    #[test]
    fn interval_is_nonnegative_and_bounded(a in -8.0f64..8.0, w in 0.0f64..20.0) {
        let v = interval_shifted_sq(a, a + w).unwrap();
        prop_assert!(v >= 0.0);
        prop_assert!(v <= hinge_sq_moment(a) + 1e-15);
    }
}

#[test]
fn interval_rejects_reversed_bounds() {
    assert!(interval_shifted_sq(1.0, 0.0).is_err());
    assert!(interval_shifted_sq(f64::NAN, 1.0).is_err());
}
