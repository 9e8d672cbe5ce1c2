//! Hard-margin SVM: separability threshold and asymptotic limits.
//!
//! The threshold `δ*` is `1 / min_ρ G(ρ)` with
//! `G(ρ) = [π₁·J(ρμ/σ + η*(ρ)) + π₀·J(ρμ/σ − η*(ρ))] / (1 − ρ²)`.
//! Below it, the weight norm converges to the unique zero `q₀*` of
//! `β(q₀) = min_{ρ,η} D_H(q₀, ρ, η)`.

use crate::error::{Error, Result};
use crate::gauss::{hinge_moment, hinge_sq_moment, q_function};
use crate::params::ModelParams;
use crate::scalar::{bisect_root, golden_min, Bracket, SolverConfig};

/// Limits reported when the data are asymptotically separable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HardMarginLimits {
    /// Limit of `‖ŵ_H‖`.
    pub q0_star: f64,
    /// Limit of `cos∠(ŵ_H, μ)`.
    pub rho_star: f64,
    /// Limit of `b̂_H / (σ q₀*)`.
    pub eta_star: f64,
    /// Limit of `b̂_H`, i.e. `η*·q₀*·σ`.
    pub bias_limit: f64,
    pub err0: f64,
    pub err1: f64,
    pub err_total: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HardMarginPrediction {
    pub delta_critical: f64,
    /// `delta < delta_critical`. Equality is reported as not separable.
    pub separable: bool,
    /// Present only when `separable`.
    pub limits: Option<HardMarginLimits>,
}

impl HardMarginPrediction {
    /// The limits, or `NotSeparable` carrying the threshold.
    pub fn limits(&self, delta: f64) -> Result<&HardMarginLimits> {
        self.limits.as_ref().ok_or(Error::NotSeparable {
            delta,
            delta_critical: self.delta_critical,
        })
    }
}

fn eta_config() -> SolverConfig {
    SolverConfig {
        tol_x: 1e-14,
        tol_f: 1e-15,
        max_iter: 300,
    }
}

fn outer_config() -> SolverConfig {
    SolverConfig {
        tol_x: 1e-10,
        tol_f: 1e-14,
        max_iter: 200,
    }
}

/// Residual of the bias first-order condition, `π₁·E(G − a − η)₊ − π₀·E(G − a + η)₊`
/// with `a = ρμ/σ − shift`. Strictly decreasing in `η`.
pub fn eta_foc_residual(eta: f64, rho: f64, shift: f64, params: &ModelParams) -> f64 {
    let a = rho * params.snr() - shift;
    params.pi1 * hinge_moment(a + eta) - params.pi0 * hinge_moment(a - eta)
}

/// The unique `η` balancing `π₁·E(G − a − η)₊ = π₀·E(G − a + η)₊`, `a = ρμ/σ − shift`.
///
/// `shift = 0` gives the bias entering the separability condition; `shift =
/// 1/(q₀σ)` gives the minimizer of `D_H(q₀, ρ, ·)`.
pub fn eta_star_margin(rho: f64, shift: f64, params: &ModelParams) -> Result<f64> {
    let g = |eta: f64| eta_foc_residual(eta, rho, shift, params);
    let (mut lo, mut hi) = (-1.0_f64, 1.0_f64);
    let mut doublings = 0;
    while g(lo) < 0.0 {
        lo *= 2.0;
        doublings += 1;
        if doublings > 200 {
            return Err(Error::MaxIter(200));
        }
    }
    while g(hi) > 0.0 {
        hi *= 2.0;
        doublings += 1;
        if doublings > 200 {
            return Err(Error::MaxIter(200));
        }
    }
    bisect_root(g, Bracket::new(lo, hi)?, &eta_config())
}

/// `G(ρ)`: the quantity whose minimum over `ρ ∈ [0, 1)` is `1/δ*`.
pub fn separability_ratio(rho: f64, params: &ModelParams) -> Result<f64> {
    if !(0.0..1.0).contains(&rho) {
        return Err(Error::InvalidArgument(format!("rho must lie in [0, 1), got {rho}")));
    }
    let eta = eta_star_margin(rho, 0.0, params)?;
    let a = rho * params.snr();
    let num = params.pi1 * hinge_sq_moment(a + eta) + params.pi0 * hinge_sq_moment(a - eta);
    Ok(num / (1.0 - rho * rho))
}

/// Critical sample ratio `δ*`; hard-margin SVM separates iff `δ < δ*`.
/// `params.delta` is ignored.
pub fn separability_threshold(params: &ModelParams) -> Result<f64> {
    let bracket = Bracket::new(0.0, 1.0 - 1e-9)?;
    let mut failure = None;
    let (_, g_min) = golden_min(
        |rho| match separability_ratio(rho, params) {
            Ok(v) => v,
            Err(e) => {
                failure.get_or_insert(e);
                f64::INFINITY
            }
        },
        bracket,
        &outer_config(),
    )?;
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(1.0 / g_min)
}

fn check_q0(q0: f64) -> Result<()> {
    if q0 > 0.0 && q0.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("q0 must be positive and finite, got {q0}")))
    }
}

/// `D_H(q₀, ρ, η) = √(δπ₁·J(c₁) + δπ₀·J(c₀)) − √(1 − ρ²)`,
/// `c₁,₀ = (ρμ − 1/q₀)/σ ± η`.
pub fn d_hard(q0: f64, rho: f64, eta: f64, params: &ModelParams) -> Result<f64> {
    check_q0(q0)?;
    Ok(d_hard_unchecked(q0, rho, eta, params))
}

fn d_hard_unchecked(q0: f64, rho: f64, eta: f64, params: &ModelParams) -> f64 {
    let c = (rho * params.mu - 1.0 / q0) / params.sigma;
    let radicand = params.delta
        * (params.pi1 * hinge_sq_moment(c + eta) + params.pi0 * hinge_sq_moment(c - eta));
    radicand.sqrt() - (1.0 - rho * rho).max(0.0).sqrt()
}

/// Value and argmins of `min_{ρ ∈ [0,1], η} D_H(q₀, ρ, η)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BetaPoint {
    pub value: f64,
    pub rho: f64,
    pub eta: f64,
}

/// `β(q₀)` together with its minimizing `(ρ, η)`.
pub fn beta_point(q0: f64, params: &ModelParams) -> Result<BetaPoint> {
    check_q0(q0)?;
    let shift = 1.0 / (q0 * params.sigma);
    let mut failure = None;
    let profile = |rho: f64| match eta_star_margin(rho, shift, params) {
        Ok(eta) => d_hard_unchecked(q0, rho, eta, params),
        Err(e) => {
            failure.get_or_insert(e);
            f64::INFINITY
        }
    };
    let (rho, _) = golden_min(profile, Bracket::new(0.0, 1.0)?, &outer_config())?;
    if let Some(e) = failure {
        return Err(e);
    }
    let eta = eta_star_margin(rho, shift, params)?;
    Ok(BetaPoint {
        value: d_hard_unchecked(q0, rho, eta, params),
        rho,
        eta,
    })
}

/// `β(q₀) = min_{ρ ∈ [0,1], η ∈ ℝ} D_H(q₀, ρ, η)`.
pub fn beta(q0: f64, params: &ModelParams) -> Result<f64> {
    beta_point(q0, params).map(|b| b.value)
}

/// Separability verdict and, below the threshold, the asymptotic limits.
///
/// Class-conditional errors are `err1 = Q(ρ*μ/σ + η*)` for the class centred
/// at `+μ` and `err0 = Q(ρ*μ/σ − η*)` for the class centred at `−μ`.
pub fn predict_hard_margin(params: &ModelParams) -> Result<HardMarginPrediction> {
    params.validate()?;
    let delta_critical = separability_threshold(params)?;
    if params.delta >= delta_critical {
        return Ok(HardMarginPrediction {
            delta_critical,
            separable: false,
            limits: None,
        });
    }

    let b = |q0: f64| beta(q0, params);
    let mut lo = 1e-3;
    let mut shrinks = 0;
    while b(lo)? <= 0.0 {
        lo /= 4.0;
        shrinks += 1;
        if shrinks > 40 {
            return Err(Error::MaxIter(40));
        }
    }
    let mut hi = 1.0_f64.max(2.0 * lo);
    while b(hi)? >= 0.0 {
        hi *= 4.0;
        if hi > 1e9 {
            return Err(Error::Divergence(hi));
        }
    }

    let mut failure = None;
    let root_cfg = SolverConfig {
        tol_x: 1e-12 * hi.max(1.0),
        tol_f: 1e-14,
        max_iter: 300,
    };
    let q0_star = bisect_root(
        |q0| match b(q0) {
            Ok(v) => v,
            Err(e) => {
                failure.get_or_insert(e);
                f64::NAN
            }
        },
        Bracket::new(lo, hi)?,
        &root_cfg,
    )?;
    if let Some(e) = failure {
        return Err(e);
    }

    let at = beta_point(q0_star, params)?;
    let (rho_star, eta_star) = (at.rho, at.eta);
    let s = rho_star * params.snr();
    let err0 = q_function(s - eta_star);
    let err1 = q_function(s + eta_star);
    Ok(HardMarginPrediction {
        delta_critical,
        separable: true,
        limits: Some(HardMarginLimits {
            q0_star,
            rho_star,
            eta_star,
            bias_limit: eta_star * q0_star * params.sigma,
            err0,
            err1,
            err_total: params.pi0 * err0 + params.pi1 * err1,
        }),
    })
}
