//! Soft-margin SVM: the map `R_τ` and the saddle problem
//! `inf_{q₀>0} inf_η min_{0≤ρ≤1} sup_{ξ>0} q₀² + q₀·R_τ(1/q₀, ρ, η, ξ)`.
//!
//! Every partial derivative used below is available in closed form. With
//! `aₖ = (ρμ − x)/σ ± η`, `bₖ = aₖ + τ/ξ` and `Δₖ = H(aₖ) − H(bₖ)`:
//!
//! ```text
//! ∂R/∂aₖ = −δπₖ ξ Δₖ
//! ∂R/∂ξ  = (δ/2) Σ πₖ [I(aₖ, bₖ) + (τ/ξ)² Q(bₖ)] − (1 − ρ²)/2
//! ```
//!
//! `∂R/∂ξ` is decreasing in `ξ`, so the inner supremum is a root of it, and
//! by the envelope theorem the outer gradient needs no derivative of `ξ*`.

use crate::error::{Error, Result};
use crate::gauss::{hinge_moment, hinge_sq_moment, q_function, shifted_sq_unchecked};
use crate::params::ModelParams;
use crate::scalar::{bisect_root, Bracket, SolverConfig};

/// Upper end of the search range for `ξ`.
pub const XI_CAP: f64 = 1e6;

/// Where the supremum over `ξ` was attained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum XiLocation {
    /// Stationary point in `(0, XI_CAP)`.
    Interior,
    /// `ξ → 0⁺`; the supremum equals `q₀²`.
    Vanishing,
    /// Still increasing at `XI_CAP`.
    Cap,
    /// `ρ = 1`, where the supremum is the `ξ → ∞` limit.
    Unbounded,
}

impl XiLocation {
    pub fn is_boundary(self) -> bool {
        self != XiLocation::Interior
    }
}

/// `sup_ξ d_soft` at a fixed `(q₀, ρ, η)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XiSup {
    pub value: f64,
    /// Maximizer; `0` for `Vanishing`, `XI_CAP` for `Cap`, `∞` for `Unbounded`.
    pub xi: f64,
    pub location: XiLocation,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SoftMarginPrediction {
    pub tau: f64,
    /// Limit of `‖ŵ_S‖`.
    pub q0_star: f64,
    /// Limit of `cos∠(ŵ_S, μ)`.
    pub rho_star: f64,
    /// Limit of `b̂_S / (σ q₀*)`.
    pub eta_star: f64,
    pub xi_star: f64,
    pub xi_location: XiLocation,
    /// Class centred at `−μ`: `Q(ρ*μ/σ − η*)`.
    pub err0: f64,
    /// Class centred at `+μ`: `Q(ρ*μ/σ + η*)`.
    pub err1: f64,
    pub err_total: f64,
    pub saddle_value: f64,
    /// Largest coordinate disagreement between the restarts.
    pub restart_spread: f64,
}

impl SoftMarginPrediction {
    /// Limit of the bias `b̂_S`.
    pub fn bias_limit(&self, sigma: f64) -> f64 {
        self.eta_star * self.q0_star * sigma
    }
}

fn positive(name: &str, v: f64) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("{name} must be positive and finite, got {v}")))
    }
}

fn unit_interval(rho: f64) -> Result<()> {
    if (0.0..=1.0).contains(&rho) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("rho must lie in [0, 1], got {rho}")))
    }
}

/// `R_τ(x, ρ, η, ξ)` in closed form.
pub fn r_tau(x: f64, rho: f64, eta: f64, xi: f64, tau: f64, params: &ModelParams) -> Result<f64> {
    positive("x", x)?;
    positive("xi", xi)?;
    positive("tau", tau)?;
    unit_interval(rho)?;
    Ok(Problem::new(tau, params).r(x, rho, eta, xi))
}

/// The `ρ = 1`, `ξ → ∞` limit `τδ[π₁H(a₁) + π₀H(a₀)]`.
pub fn r_tau_rho_one(x: f64, eta: f64, tau: f64, params: &ModelParams) -> Result<f64> {
    positive("x", x)?;
    positive("tau", tau)?;
    Ok(Problem::new(tau, params).r_bar(x, eta))
}

/// `q₀² + q₀·R_τ(1/q₀, ρ, η, ξ)`.
pub fn d_soft(q0: f64, rho: f64, eta: f64, xi: f64, tau: f64, params: &ModelParams) -> Result<f64> {
    positive("q0", q0)?;
    Ok(q0 * q0 + q0 * r_tau(1.0 / q0, rho, eta, xi, tau, params)?)
}

/// `sup_{ξ>0} d_soft(q₀, ρ, η, ξ)`.
pub fn sup_xi_d_soft(q0: f64, rho: f64, eta: f64, tau: f64, params: &ModelParams) -> Result<XiSup> {
    positive("q0", q0)?;
    positive("tau", tau)?;
    unit_interval(rho)?;
    if !eta.is_finite() {
        return Err(Error::InvalidArgument(format!("eta must be finite, got {eta}")));
    }
    Problem::new(tau, params).sup_xi(q0, rho, eta)
}

/// Gradient of `(q₀, ρ, η) ↦ sup_ξ d_soft` at an interior point.
pub fn saddle_gradient(q0: f64, rho: f64, eta: f64, tau: f64, params: &ModelParams) -> Result<[f64; 3]> {
    let prob = Problem::new(tau, params);
    let s = sup_xi_d_soft(q0, rho, eta, tau, params)?;
    Ok(prob.gradient(q0, rho, eta, &s))
}

#[derive(Clone, Copy)]
struct Problem<'a> {
    tau: f64,
    p: &'a ModelParams,
}

const RHO_TOP: f64 = 1.0 - 1e-12;

impl<'a> Problem<'a> {
    fn new(tau: f64, p: &'a ModelParams) -> Self {
        Problem { tau, p }
    }

    fn args(&self, x: f64, rho: f64, eta: f64) -> (f64, f64) {
        let c = (rho * self.p.mu - x) / self.p.sigma;
        (c + eta, c - eta)
    }

    fn class_value(&self, a: f64, xi: f64) -> f64 {
        let u = self.tau / xi;
        let b = a + u;
        self.tau * (hinge_moment(b) + 0.5 * u * q_function(b)) + 0.5 * xi * shifted_sq_unchecked(a, b)
    }

    fn r(&self, x: f64, rho: f64, eta: f64, xi: f64) -> f64 {
        let (a1, a0) = self.args(x, rho, eta);
        let p = self.p;
        p.delta * (p.pi1 * self.class_value(a1, xi) + p.pi0 * self.class_value(a0, xi))
            - 0.5 * xi * (1.0 - rho * rho)
    }

    fn r_bar(&self, x: f64, eta: f64) -> f64 {
        let (a1, a0) = self.args(x, 1.0, eta);
        let p = self.p;
        self.tau * p.delta * (p.pi1 * hinge_moment(a1) + p.pi0 * hinge_moment(a0))
    }

    fn class_dxi(&self, a: f64, xi: f64) -> f64 {
        let u = self.tau / xi;
        let b = a + u;
        shifted_sq_unchecked(a, b) + u * u * q_function(b)
    }

    fn dr_dxi(&self, x: f64, rho: f64, eta: f64, xi: f64) -> f64 {
        let (a1, a0) = self.args(x, rho, eta);
        let p = self.p;
        0.5 * p.delta * (p.pi1 * self.class_dxi(a1, xi) + p.pi0 * self.class_dxi(a0, xi))
            - 0.5 * (1.0 - rho * rho)
    }

    /// `∂R/∂ξ` as `ξ → 0⁺`.
    fn dr_dxi_at_zero(&self, x: f64, rho: f64, eta: f64) -> f64 {
        let (a1, a0) = self.args(x, rho, eta);
        let p = self.p;
        0.5 * p.delta * (p.pi1 * hinge_sq_moment(a1) + p.pi0 * hinge_sq_moment(a0)) - 0.5 * (1.0 - rho * rho)
    }

    fn sup_xi(&self, q0: f64, rho: f64, eta: f64) -> Result<XiSup> {
        let x = 1.0 / q0;
        if rho >= 1.0 {
            return Ok(XiSup {
                value: q0 * q0 + q0 * self.r_bar(x, eta),
                xi: f64::INFINITY,
                location: XiLocation::Unbounded,
            });
        }
        if self.dr_dxi_at_zero(x, rho, eta) <= 0.0 {
            return Ok(XiSup {
                value: q0 * q0,
                xi: 0.0,
                location: XiLocation::Vanishing,
            });
        }
        let g = |xi: f64| self.dr_dxi(x, rho, eta, xi);
        let mut hi = 1.0;
        while g(hi) > 0.0 {
            if hi >= XI_CAP {
                return Ok(XiSup {
                    value: q0 * q0 + q0 * self.r(x, rho, eta, XI_CAP),
                    xi: XI_CAP,
                    location: XiLocation::Cap,
                });
            }
            hi = (hi * 2.0).min(XI_CAP);
        }
        let mut lo = hi / 2.0;
        let mut halvings = 0;
        while g(lo) <= 0.0 {
            lo /= 2.0;
            halvings += 1;
            if halvings > 1000 {
                return Ok(XiSup {
                    value: q0 * q0,
                    xi: 0.0,
                    location: XiLocation::Vanishing,
                });
            }
        }
        let cfg = SolverConfig {
            tol_x: 1e-15 * hi,
            tol_f: 0.0,
            max_iter: 200,
        };
        let xi = bisect_root(g, Bracket::new(lo, hi)?, &cfg)?;
        let value = q0 * q0 + q0 * self.r(x, rho, eta, xi).max(0.0);
        Ok(XiSup {
            value,
            xi,
            location: XiLocation::Interior,
        })
    }

    /// `−∂R/∂aₖ / (δπₖ)` for both classes, i.e. `ξ·Δₖ` or its limits.
    fn slopes(&self, x: f64, rho: f64, eta: f64, s: &XiSup) -> (f64, f64) {
        let (a1, a0) = self.args(x, rho, eta);
        let slope = |a: f64| match s.location {
            XiLocation::Vanishing => 0.0,
            XiLocation::Unbounded => self.tau * q_function(a),
            _ => s.xi * (hinge_moment(a) - hinge_moment(a + self.tau / s.xi)),
        };
        (slope(a1), slope(a0))
    }

    /// `[∂F/∂q₀, ∂F/∂ρ, ∂F/∂η]` for `F = sup_ξ D`, given its inner solution.
    fn gradient(&self, q0: f64, rho: f64, eta: f64, s: &XiSup) -> [f64; 3] {
        let p = self.p;
        let x = 1.0 / q0;
        let (s1, s0) = self.slopes(x, rho, eta, s);
        let (w1, w0) = (p.delta * p.pi1 * s1, p.delta * p.pi0 * s0);
        let r = (s.value - q0 * q0) / q0;
        let dr_dx = (w1 + w0) / p.sigma;
        let dr_deta = -w1 + w0;
        let xi_rho = match s.location {
            XiLocation::Interior | XiLocation::Cap => s.xi * rho,
            _ => 0.0,
        };
        let dr_drho = -p.snr() * (w1 + w0) + xi_rho;
        [2.0 * q0 + r - x * dr_dx, q0 * dr_drho, q0 * dr_deta]
    }

    fn value(&self, q0: f64, rho: f64, eta: f64) -> Result<XiSup> {
        self.sup_xi(q0, rho, eta)
    }

    fn grad_component(&self, z: [f64; 3], k: usize) -> Result<f64> {
        let s = self.value(z[0], z[1], z[2])?;
        Ok(self.gradient(z[0], z[1], z[2], &s)[k])
    }

    /// Root of an increasing derivative along coordinate `k`, searched outward
    /// from the current value.
    fn solve_unbounded(&self, z: [f64; 3], k: usize) -> Result<f64> {
        let mut failure = None;
        let mut h = |v: f64| {
            let mut zz = z;
            zz[k] = v;
            match self.grad_component(zz, k) {
                Ok(g) => g,
                Err(e) => {
                    failure.get_or_insert(e);
                    f64::NAN
                }
            }
        };
        let here = h(z[k]);
        if here == 0.0 {
            return Ok(z[k]);
        }
        let (lo, hi) = if k == 0 {
            let (mut lo, mut hi) = (z[0], z[0]);
            if here > 0.0 {
                while h(lo) > 0.0 {
                    hi = lo;
                    lo /= 2.0;
                    if lo < 1e-300 {
                        return Err(Error::MaxIter(1000));
                    }
                }
            } else {
                while h(hi) < 0.0 {
                    lo = hi;
                    hi *= 2.0;
                    if hi > 1e300 {
                        return Err(Error::Divergence(hi));
                    }
                }
            }
            (lo, hi)
        } else {
            let mut step = 1e-3_f64.max(z[k].abs() * 1e-3);
            let (mut lo, mut hi) = (z[k], z[k]);
            if here > 0.0 {
                loop {
                    lo = z[k] - step;
                    if h(lo) <= 0.0 {
                        break;
                    }
                    hi = lo;
                    step *= 2.0;
                    if step > 1e6 {
                        return Err(Error::Divergence(step));
                    }
                }
            } else {
                loop {
                    hi = z[k] + step;
                    if h(hi) >= 0.0 {
                        break;
                    }
                    lo = hi;
                    step *= 2.0;
                    if step > 1e6 {
                        return Err(Error::Divergence(step));
                    }
                }
            }
            (lo, hi)
        };
        let cfg = SolverConfig {
            tol_x: 1e-15 * hi.abs().max(lo.abs()).max(1.0),
            tol_f: 0.0,
            max_iter: 200,
        };
        let root = bisect_root(&mut h, Bracket::new(lo, hi)?, &cfg)?;
        if let Some(e) = failure {
            return Err(e);
        }
        Ok(root)
    }

    fn solve_rho(&self, z: [f64; 3]) -> Result<f64> {
        let at_zero = self.grad_component([z[0], 0.0, z[2]], 1)?;
        let at_top = self.grad_component([z[0], RHO_TOP, z[2]], 1)?;
        if at_zero >= 0.0 {
            return Ok(0.0);
        }
        if at_top <= 0.0 {
            let inner = self.value(z[0], RHO_TOP, z[2])?.value;
            let edge = self.value(z[0], 1.0, z[2])?.value;
            return Ok(if edge <= inner { 1.0 } else { RHO_TOP });
        }
        let mut failure = None;
        let mut h = |rho: f64| match self.grad_component([z[0], rho, z[2]], 1) {
            Ok(g) => g,
            Err(e) => {
                failure.get_or_insert(e);
                f64::NAN
            }
        };
        let cfg = SolverConfig {
            tol_x: 1e-15,
            tol_f: 0.0,
            max_iter: 200,
        };
        let rho = bisect_root(&mut h, Bracket::new(0.0, RHO_TOP)?, &cfg)?;
        if let Some(e) = failure {
            return Err(e);
        }
        Ok(rho)
    }

    fn coordinate_descent(&self, start: [f64; 3]) -> Result<[f64; 3]> {
        let balanced = self.p.pi0 == self.p.pi1;
        let mut z = start;
        if balanced {
            z[2] = 0.0;
        }
        for _ in 0..MAX_SWEEPS {
            let prev = z;
            z[0] = self.solve_unbounded(z, 0)?;
            z[1] = self.solve_rho(z)?;
            if !balanced {
                z[2] = self.solve_unbounded(z, 2)?;
            }
            let moved = (0..3).map(|k| (z[k] - prev[k]).abs()).fold(0.0, f64::max);
            if moved < CD_TOL {
                return Ok(z);
            }
        }
        Err(Error::MaxIter(MAX_SWEEPS))
    }
}

const CD_TOL: f64 = 1e-10;
const MAX_SWEEPS: usize = 20_000;
const RESTART_TOL: f64 = 1e-4;

const STARTS: [[f64; 3]; 3] = [[1.0, 0.5, 0.0], [0.3, 0.2, 0.5], [3.0, 0.9, -0.5]];

/// Solves the soft-margin saddle problem from three deterministic starts.
///
/// Fails with `NoConvergence` when the restarts disagree by more than `1e-4`
/// in any coordinate.
pub fn solve_soft_margin_saddle(tau: f64, params: &ModelParams) -> Result<SoftMarginPrediction> {
    positive("tau", tau)?;
    params.validate()?;
    let prob = Problem::new(tau, params);

    let mut sols = Vec::with_capacity(STARTS.len());
    for start in STARTS {
        let z = prob.coordinate_descent(start)?;
        let s = prob.value(z[0], z[1], z[2])?;
        sols.push((z, s));
    }
    let mut spread: f64 = 0.0;
    for (za, _) in &sols {
        for (zb, _) in &sols {
            for k in 0..3 {
                spread = spread.max((za[k] - zb[k]).abs());
            }
        }
    }
    if spread > RESTART_TOL {
        return Err(Error::NoConvergence(spread));
    }
    let (z, s) = sols
        .into_iter()
        .min_by(|a, b| a.1.value.total_cmp(&b.1.value))
        .expect("at least one start");

    let [q0_star, rho_star, eta_star] = z;
    let snr_rho = rho_star * params.snr();
    let err0 = q_function(snr_rho - eta_star);
    let err1 = q_function(snr_rho + eta_star);
    Ok(SoftMarginPrediction {
        tau,
        q0_star,
        rho_star,
        eta_star,
        xi_star: s.xi,
        xi_location: s.location,
        err0,
        err1,
        err_total: params.pi0 * err0 + params.pi1 * err1,
        saddle_value: s.value,
        restart_spread: spread,
    })
}
