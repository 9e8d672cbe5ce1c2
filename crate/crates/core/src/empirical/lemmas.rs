//! Finite-dimensional optimization identities used to scalarize the
//! auxiliary problems.

use crate::error::{Error, Result};
use crate::scalar::{bisect_root, Bracket, SolverConfig};

fn check_positive(name: &str, v: f64) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("{name} must be positive and finite, got {v}")))
    }
}

/// `max { aᵀu : u ≥ 0, ‖u‖₂ = θ }`.
///
/// Equals `θ·‖a₊‖₂` when some `aᵢ > 0`. When no entry is positive the
/// maximizer puts all its mass on a largest entry and the value is `θ·max aᵢ`.
pub fn opt_norm(a: &[f64], theta: f64) -> Result<f64> {
    check_positive("theta", theta)?;
    if a.is_empty() {
        return Err(Error::InvalidArgument("a must be nonempty".into()));
    }
    let pos: f64 = a.iter().map(|&v| v.max(0.0).powi(2)).sum();
    if pos > 0.0 {
        Ok(theta * pos.sqrt())
    } else {
        Ok(theta * a.iter().copied().fold(f64::NEG_INFINITY, f64::max))
    }
}

/// A maximizer for [`opt_norm`].
pub fn opt_norm_argmax(a: &[f64], theta: f64) -> Result<Vec<f64>> {
    check_positive("theta", theta)?;
    let pos: f64 = a.iter().map(|&v| v.max(0.0).powi(2)).sum::<f64>().sqrt();
    if pos > 0.0 {
        return Ok(a.iter().map(|&v| theta * v.max(0.0) / pos).collect());
    }
    let k = a
        .iter()
        .enumerate()
        .max_by(|x, y| x.1.total_cmp(y.1))
        .map(|(k, _)| k)
        .ok_or_else(|| Error::InvalidArgument("a must be nonempty".into()))?;
    let mut u = vec![0.0; a.len()];
    u[k] = theta;
    Ok(u)
}

/// The concave function of `ξ` whose supremum is [`opt_box_norm`]:
/// `Σ (aᵢτ − τ²/2ξ)·1{aᵢξ ≥ τ} + Σ (aᵢ²ξ/2)·1{0 ≤ aᵢξ < τ} − β²ξ/2`.
pub fn opt_box_norm_dual(a: &[f64], tau: f64, beta: f64, xi: f64) -> f64 {
    let mut s = -0.5 * beta * beta * xi;
    for &ai in a {
        let t = ai * xi;
        if t >= tau {
            s += ai * tau - tau * tau / (2.0 * xi);
        } else if t >= 0.0 {
            s += 0.5 * ai * ai * xi;
        }
    }
    s
}

fn opt_box_norm_slope(a: &[f64], tau: f64, beta: f64, xi: f64) -> f64 {
    let mut s = -0.5 * beta * beta;
    for &ai in a {
        let t = ai * xi;
        if t >= tau {
            s += tau * tau / (2.0 * xi * xi);
        } else if t >= 0.0 {
            s += 0.5 * ai * ai;
        }
    }
    s
}

/// `max { uᵀa − β‖u‖₂ : 0 ≤ u ≤ τ }`, through its one-dimensional dual
/// `sup_{ξ ≥ 0} opt_box_norm_dual(a, τ, β, ξ)`.
pub fn opt_box_norm(a: &[f64], tau: f64, beta: f64) -> Result<f64> {
    check_positive("tau", tau)?;
    if !(beta >= 0.0 && beta.is_finite()) {
        return Err(Error::InvalidArgument(format!("beta must be nonnegative, got {beta}")));
    }
    if beta == 0.0 {
        return Ok(a.iter().map(|&v| tau * v.max(0.0)).sum());
    }
    let slope = |xi: f64| opt_box_norm_slope(a, tau, beta, xi);
    let pos_sq: f64 = a.iter().map(|&v| v.max(0.0).powi(2)).sum();
    if pos_sq <= beta * beta {
        return Ok(0.0);
    }
    let mut hi = 1.0;
    while slope(hi) > 0.0 {
        hi *= 2.0;
        if hi > 1e300 {
            return Err(Error::Divergence(hi));
        }
    }
    let mut lo = hi / 2.0;
    while slope(lo) <= 0.0 {
        lo /= 2.0;
        if lo < 1e-300 {
            return Ok(0.0);
        }
    }
    let cfg = SolverConfig {
        tol_x: 1e-15 * hi,
        tol_f: 0.0,
        max_iter: 400,
    };
    let xi = bisect_root(slope, Bracket::new(lo, hi)?, &cfg)?;
    Ok(opt_box_norm_dual(a, tau, beta, xi))
}
