#![allow(dead_code)]

use quadrature::double_exponential;
use svm_asymptotics::empirical::{Dataset, FitStatus, SvmFit};
use svm_asymptotics::soft_margin::{sup_xi_d_soft, SoftMarginPrediction};
use svm_asymptotics::ModelParams;

const LIMIT: f64 = 14.0;

/// `∫_a^b f(t) Dt` by double-exponential quadrature on unit subintervals,
/// with infinite ends truncated where the Gaussian density is negligible.
pub fn gauss_integral<F: Fn(f64) -> f64>(f: F, a: f64, b: f64) -> f64 {
    let lo = a.max(-LIMIT);
    let hi = b.min(LIMIT);
    if lo >= hi {
        return 0.0;
    }
    let density = |t: f64| f(t) * (-0.5 * t * t).exp() / (2.0 * std::f64::consts::PI).sqrt();
    let mut cuts = vec![lo];
    let mut k = lo.floor() + 1.0;
    while k < hi {
        cuts.push(k);
        k += 1.0;
    }
    cuts.push(hi);
    cuts.windows(2)
        .map(|w| double_exponential::integrate(&density, w[0], w[1], 1e-15).integral)
        .sum()
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `Σλᵢyᵢxᵢ`.
pub fn signed_sum(data: &Dataset, lambda: &[f64]) -> Vec<f64> {
    let mut v = vec![0.0; data.p];
    for (i, &l) in lambda.iter().enumerate() {
        let c = l * data.label(i);
        for (vj, xj) in v.iter_mut().zip(data.row(i)) {
            *vj += c * xj;
        }
    }
    v
}

/// `Σλᵢ − ¼‖Σλᵢyᵢxᵢ‖²`.
pub fn dual_value(data: &Dataset, lambda: &[f64]) -> f64 {
    let v = signed_sum(data, lambda);
    lambda.iter().sum::<f64>() - 0.25 * dot(&v, &v)
}

/// Euclidean projection onto `{0 ≤ λ ≤ c, yᵀλ = 0}`.
fn project(v: &[f64], y: &[f64], c: f64) -> Vec<f64> {
    let clipped = |nu: f64| -> Vec<f64> { v.iter().zip(y).map(|(vi, yi)| (vi - nu * yi).clamp(0.0, c)).collect() };
    let balance = |nu: f64| dot(&clipped(nu), y);
    let mut lo = -1.0;
    let mut hi = 1.0;
    while balance(lo) < 0.0 {
        lo *= 2.0;
    }
    while balance(hi) > 0.0 {
        hi *= 2.0;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if balance(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    clipped(0.5 * (lo + hi))
}

/// Dense dual QP oracle: accelerated projected gradient ascent with
/// adaptive restarts on `max Σλ − ¼‖Σλyx‖²` over `{0 ≤ λ ≤ c, yᵀλ = 0}`.
pub fn dual_oracle(data: &Dataset, c: f64, iters: usize) -> Vec<f64> {
    let n = data.n;
    let y: Vec<f64> = (0..n).map(|i| data.label(i)).collect();
    let mut gram = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            gram[i * n + j] = y[i] * y[j] * dot(data.row(i), data.row(j));
        }
    }
    // Lipschitz constant of the gradient: half the largest eigenvalue of the
    // signed Gram matrix, bounded by half its trace.
    let lip = 0.5 * (0..n).map(|i| gram[i * n + i]).sum::<f64>();
    let step = 1.0 / lip;
    let grad = |l: &[f64]| -> Vec<f64> {
        (0..n)
            .map(|i| 1.0 - 0.5 * (0..n).map(|j| gram[i * n + j] * l[j]).sum::<f64>())
            .collect()
    };
    let mut x = vec![0.0; n];
    let mut z = x.clone();
    let mut t = 1.0f64;
    for _ in 0..iters {
        let g = grad(&z);
        let moved: Vec<f64> = z.iter().zip(&g).map(|(zi, gi)| zi + step * gi).collect();
        let next = project(&moved, &y, c);
        let t_next = 0.5 * (1.0 + (1.0 + 4.0 * t * t).sqrt());
        let restart = dot(&g, &next.iter().zip(&x).map(|(a, b)| a - b).collect::<Vec<_>>()) < 0.0;
        if restart {
            t = 1.0;
            z = next.clone();
        } else {
            let m = (t - 1.0) / t_next;
            z = next.iter().zip(&x).map(|(a, b)| a + m * (a - b)).collect();
            t = t_next;
        }
        x = next;
    }
    x
}

/// Checks the optimality certificate of a soft-margin fit with box bound `c`.
/// Complementary slackness is measured with the duals scaled to `[0, 1]`.
pub fn certify(fit: &SvmFit, data: &Dataset, c: f64) -> Result<(), String> {
    let scale = 1.0 + fit.objective.abs();
    if fit.status != FitStatus::Optimal {
        return Err(format!("status {:?}", fit.status));
    }
    if fit.dual_vars.iter().any(|&l| !(-1e-12..=c * (1.0 + 1e-12)).contains(&l)) {
        return Err("dual variable outside the box".into());
    }
    let balance: f64 = fit.dual_vars.iter().enumerate().map(|(i, l)| l * data.label(i)).sum();
    if balance.abs() > 1e-8 {
        return Err(format!("sum of signed duals {balance:e}"));
    }
    let v = signed_sum(data, &fit.dual_vars);
    let stationarity = fit
        .w
        .iter()
        .zip(&v)
        .map(|(w, s)| (2.0 * w - s).powi(2))
        .sum::<f64>()
        .sqrt();
    if stationarity > 1e-7 * fit.norm().max(1e-300) {
        return Err(format!("stationarity {stationarity:e}"));
    }
    if fit.duality_gap().abs() > 1e-6 * scale {
        return Err(format!("duality gap {:e}", fit.duality_gap()));
    }
    for i in 0..data.n {
        let margin = data.label(i) * (dot(&fit.w, data.row(i)) + fit.b);
        let slack = (1.0 - margin).max(0.0);
        let share = fit.dual_vars[i] / c;
        let cs = share * (margin - 1.0 + slack) + (1.0 - share) * slack;
        if cs.abs() > 1e-7 {
            return Err(format!("complementary slackness {cs:e} at {i}"));
        }
    }
    Ok(())
}

/// Projected gradient ascent of `aᵀu` on `{u ≥ 0, ‖u‖ = θ}`.
pub fn norm_ascent_oracle(a: &[f64], theta: f64) -> f64 {
    let project = |v: Vec<f64>| -> Vec<f64> {
        let pos: Vec<f64> = v.iter().map(|x| x.max(0.0)).collect();
        let n = pos.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 0.0 {
            pos.iter().map(|x| theta * x / n).collect()
        } else {
            let k = v.iter().enumerate().max_by(|x, y| x.1.total_cmp(y.1)).unwrap().0;
            let mut u = vec![0.0; v.len()];
            u[k] = theta;
            u
        }
    };
    let mut u = project(vec![1.0; a.len()]);
    for _ in 0..2000 {
        u = project(u.iter().zip(a).map(|(x, g)| x + 0.5 * g).collect());
    }
    u.iter().zip(a).map(|(x, y)| x * y).sum()
}

/// Forward differences of `sup_ξ D` at the saddle along each free direction,
/// and backward in `ρ` when the saddle is interior.
pub fn one_sided_slopes(pred: &SoftMarginPrediction, tau: f64, p: &ModelParams) -> Vec<f64> {
    let h = 1e-6;
    let f = |q0: f64, rho: f64, eta: f64| sup_xi_d_soft(q0, rho, eta, tau, p).unwrap().value;
    let (q0, rho, eta) = (pred.q0_star, pred.rho_star, pred.eta_star);
    let f0 = pred.saddle_value;
    let mut out = vec![(f(q0 + h, rho, eta) - f0) / h, (f(q0, rho, eta + h) - f0) / h];
    if rho + h < 1.0 && rho - h > 0.0 {
        out.push((f(q0, rho + h, eta) - f0) / h);
        out.push((f(q0, rho - h, eta) - f0) / h);
    }
    out
}
