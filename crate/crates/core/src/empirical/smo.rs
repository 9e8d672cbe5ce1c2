//! Exact linear SVM solvers.
//!
//! The soft-margin program `min ‖w‖² + C·Σξᵢ` subject to
//! `yᵢ(wᵀxᵢ + b) ≥ 1 − ξᵢ`, `ξᵢ ≥ 0`, with `C = τ̃/p`, has the dual
//!
//! ```text
//! max Σλᵢ − ¼‖Σλᵢyᵢxᵢ‖²   subject to 0 ≤ λᵢ ≤ C, Σλᵢyᵢ = 0,
//! ```
//!
//! and `w = ½Σλᵢyᵢxᵢ`. It is solved by sequential minimal optimization with
//! second-order working-pair selection.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

use super::dataset::Dataset;
use super::ipm::{solve_soft_margin_ipm, IpmConfig, IpmSolution};

/// Curvature floor for degenerate pairs.
const MIN_CURVATURE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FitStatus {
    Optimal,
    Infeasible,
    MaxIter,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SvmFit {
    pub w: Vec<f64>,
    pub b: f64,
    pub dual_vars: Vec<f64>,
    pub status: FitStatus,
    /// Primal objective `‖w‖² + C·Σξᵢ`.
    pub objective: f64,
    /// Dual objective `Σλᵢ − ‖w‖²`.
    pub dual_objective: f64,
    /// `Σᵢ max(0, 1 − yᵢ(wᵀxᵢ + b))`.
    pub hinge_total: f64,
    /// Maximal violating-pair gap of the dual optimality conditions.
    pub kkt_residual: f64,
    /// Box bound `C` of the returned solution.
    pub penalty: f64,
    pub iterations: usize,
}

impl SvmFit {
    pub fn norm(&self) -> f64 {
        self.w.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn duality_gap(&self) -> f64 {
        self.objective - self.dual_objective
    }

    /// `cos∠(w, e₁)`.
    pub fn cos_to_mean(&self) -> Result<f64> {
        let n = self.norm();
        if n <= 1e-12 {
            return Err(Error::ZeroWeight);
        }
        Ok(self.w[0] / n)
    }

    /// `min_i yᵢ(wᵀxᵢ + b)`.
    pub fn min_margin(&self, data: &Dataset) -> f64 {
        (0..data.n)
            .map(|i| data.label(i) * (dot(&self.w, data.row(i)) + self.b))
            .fold(f64::INFINITY, f64::min)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SmoConfig {
    /// Stop once the maximal violating-pair gap is at most this.
    pub tol: f64,
    /// Pair updates allowed, in multiples of `n`.
    pub max_epochs: usize,
}

impl Default for SmoConfig {
    fn default() -> Self {
        SmoConfig {
            tol: 1e-7,
            max_epochs: 100_000,
        }
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

struct Smo<'a> {
    data: &'a Dataset,
    n: usize,
    y: Vec<f64>,
    /// Gram matrix `xᵢᵀxⱼ`, row-major.
    k: Vec<f64>,
    alpha: Vec<f64>,
    /// `Gᵢ = yᵢ·wᵀxᵢ − 1`, the gradient of the minimization form.
    grad: Vec<f64>,
}

impl<'a> Smo<'a> {
    fn new(data: &'a Dataset) -> Self {
        let n = data.n;
        let mut k = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..=i {
                let v = dot(data.row(i), data.row(j));
                k[i * n + j] = v;
                k[j * n + i] = v;
            }
        }
        let y = (0..n).map(|i| data.label(i)).collect();
        Smo {
            data,
            n,
            y,
            k,
            alpha: vec![0.0; n],
            grad: vec![-1.0; n],
        }
    }

    fn q(&self, i: usize, j: usize) -> f64 {
        0.5 * self.y[i] * self.y[j] * self.k[i * self.n + j]
    }

    fn refresh_gradient(&mut self) {
        for t in 0..self.n {
            let mut g = -1.0;
            for s in 0..self.n {
                if self.alpha[s] != 0.0 {
                    g += self.q(t, s) * self.alpha[s];
                }
            }
            self.grad[t] = g;
        }
    }

    fn in_up(&self, t: usize, c: f64) -> bool {
        if self.y[t] > 0.0 {
            self.alpha[t] < c
        } else {
            self.alpha[t] > 0.0
        }
    }

    fn in_low(&self, t: usize, c: f64) -> bool {
        if self.y[t] > 0.0 {
            self.alpha[t] > 0.0
        } else {
            self.alpha[t] < c
        }
    }

    /// `(m, M)`: the extreme values of `−yₜGₜ` over the up and low sets.
    fn violation_bounds(&self, c: f64) -> (f64, f64) {
        let mut m = f64::NEG_INFINITY;
        let mut big_m = f64::INFINITY;
        for t in 0..self.n {
            let v = -self.y[t] * self.grad[t];
            if self.in_up(t, c) {
                m = m.max(v);
            }
            if self.in_low(t, c) {
                big_m = big_m.min(v);
            }
        }
        (m, big_m)
    }

    /// Second-order working-pair selection. `None` when optimal to `tol`.
    fn select_pair(&self, c: f64, tol: f64) -> Option<(usize, usize)> {
        let mut m = f64::NEG_INFINITY;
        let mut i = usize::MAX;
        for t in 0..self.n {
            if self.in_up(t, c) {
                let v = -self.y[t] * self.grad[t];
                if v >= m {
                    m = v;
                    i = t;
                }
            }
        }
        if i == usize::MAX {
            return None;
        }
        let k_ii = self.k[i * self.n + i];
        let mut big_m = f64::INFINITY;
        let mut best = f64::INFINITY;
        let mut j = usize::MAX;
        for t in 0..self.n {
            if !self.in_low(t, c) {
                continue;
            }
            let v = -self.y[t] * self.grad[t];
            big_m = big_m.min(v);
            let b = m - v;
            if b > 0.0 {
                let a = 0.5 * (k_ii + self.k[t * self.n + t] - 2.0 * self.k[i * self.n + t]);
                let score = -b * b / a.max(MIN_CURVATURE);
                if score <= best {
                    best = score;
                    j = t;
                }
            }
        }
        if m - big_m <= tol || j == usize::MAX {
            None
        } else {
            Some((i, j))
        }
    }

    fn update_pair(&mut self, i: usize, j: usize, c: f64) {
        let (old_i, old_j) = (self.alpha[i], self.alpha[j]);
        let (mut ai, mut aj) = (old_i, old_j);
        let (gi, gj) = (self.grad[i], self.grad[j]);
        if self.y[i] != self.y[j] {
            let quad = (self.q(i, i) + self.q(j, j) + 2.0 * self.q(i, j)).max(MIN_CURVATURE);
            let delta = (-gi - gj) / quad;
            let diff = ai - aj;
            ai += delta;
            aj += delta;
            if diff > 0.0 {
                if aj < 0.0 {
                    aj = 0.0;
                    ai = diff;
                }
            } else if ai < 0.0 {
                ai = 0.0;
                aj = -diff;
            }
            if diff > 0.0 {
                if ai > c {
                    ai = c;
                    aj = c - diff;
                }
            } else if aj > c {
                aj = c;
                ai = c + diff;
            }
        } else {
            let quad = (self.q(i, i) + self.q(j, j) - 2.0 * self.q(i, j)).max(MIN_CURVATURE);
            let delta = (gi - gj) / quad;
            let sum = ai + aj;
            ai -= delta;
            aj += delta;
            if sum > c {
                if ai > c {
                    ai = c;
                    aj = sum - c;
                }
            } else if aj < 0.0 {
                aj = 0.0;
                ai = sum;
            }
            if sum > c {
                if aj > c {
                    aj = c;
                    ai = sum - c;
                }
            } else if ai < 0.0 {
                ai = 0.0;
                aj = sum;
            }
        }
        self.alpha[i] = ai;
        self.alpha[j] = aj;
        let (di, dj) = (ai - old_i, aj - old_j);
        let n = self.n;
        let (yi, yj) = (self.y[i], self.y[j]);
        for t in 0..n {
            let yt = self.y[t];
            self.grad[t] += 0.5 * yt * (yi * self.k[t * n + i] * di + yj * self.k[t * n + j] * dj);
        }
    }

    /// Runs SMO at box bound `c` from the current `alpha`, which must be
    /// feasible for `c`. Returns `(converged, iterations)`.
    fn optimize(&mut self, c: f64, cfg: &SmoConfig) -> (bool, usize) {
        self.refresh_gradient();
        let budget = cfg.max_epochs.saturating_mul(self.n.max(1));
        let mut iter = 0;
        loop {
            while iter < budget {
                match self.select_pair(c, cfg.tol) {
                    Some((i, j)) => {
                        self.update_pair(i, j, c);
                        iter += 1;
                    }
                    None => break,
                }
            }
            self.refresh_gradient();
            if self.select_pair(c, cfg.tol).is_none() {
                return (true, iter);
            }
            if iter >= budget {
                return (false, iter);
            }
        }
    }

    fn fit(&self, c: f64, converged: bool, iterations: usize) -> SvmFit {
        let p = self.data.p;
        let mut w = vec![0.0; p];
        for i in 0..self.n {
            let coef = 0.5 * self.alpha[i] * self.y[i];
            if coef != 0.0 {
                for (wk, xk) in w.iter_mut().zip(self.data.row(i)) {
                    *wk += coef * xk;
                }
            }
        }

        let (m, big_m) = self.violation_bounds(c);
        let mut free_sum = 0.0;
        let mut free_count = 0usize;
        for t in 0..self.n {
            if self.alpha[t] > 0.0 && self.alpha[t] < c {
                free_sum += -self.y[t] * self.grad[t];
                free_count += 1;
            }
        }
        let b = if free_count > 0 {
            free_sum / free_count as f64
        } else if m.is_finite() && big_m.is_finite() {
            0.5 * (m + big_m)
        } else if m.is_finite() {
            m
        } else {
            big_m
        };

        let status = if converged { FitStatus::Optimal } else { FitStatus::MaxIter };
        assemble_fit(self.data, w, b, self.alpha.clone(), c, status, (m - big_m).max(0.0), iterations)
    }
}

/// Builds an [`SvmFit`] from a hyperplane and its duals, computing the hinge
/// losses and both objectives.
#[allow(clippy::too_many_arguments)]
fn assemble_fit(
    data: &Dataset,
    w: Vec<f64>,
    b: f64,
    dual_vars: Vec<f64>,
    c: f64,
    status: FitStatus,
    kkt_residual: f64,
    iterations: usize,
) -> SvmFit {
    let w_sq = dot(&w, &w);
    let hinge_total: f64 = (0..data.n)
        .map(|i| (1.0 - data.label(i) * (dot(&w, data.row(i)) + b)).max(0.0))
        .sum();
    let dual_sum: f64 = dual_vars.iter().sum();
    SvmFit {
        w,
        b,
        dual_vars,
        status,
        objective: w_sq + c * hinge_total,
        dual_objective: dual_sum - w_sq,
        hinge_total,
        kkt_residual,
        penalty: c,
        iterations,
    }
}

fn check_classes(data: &Dataset) -> Result<()> {
    let (n0, n1) = data.class_counts();
    if n0 == 0 || n1 == 0 {
        return Err(Error::DegenerateSplit { n0, n1 });
    }
    Ok(())
}

/// Soft-margin SVM with penalty `τ̃`, i.e. box bound `C = τ̃/p`.
///
/// An exhausted iteration budget is reported through `status = MaxIter`
/// together with the last iterate.
pub fn solve_soft_margin_svm(data: &Dataset, tau: f64) -> Result<SvmFit> {
    solve_soft_margin_svm_with(data, tau, &SmoConfig::default())
}

pub fn solve_soft_margin_svm_with(data: &Dataset, tau: f64, cfg: &SmoConfig) -> Result<SvmFit> {
    if !(tau > 0.0 && tau.is_finite()) {
        return Err(Error::InvalidArgument(format!("tau must be positive and finite, got {tau}")));
    }
    check_classes(data)?;
    let c = tau / data.p as f64;
    let mut smo = Smo::new(data);
    let (ok, iters) = smo.optimize(c, cfg);
    Ok(smo.fit(c, ok, iters))
}

/// Soft-margin SVM solved by the interior-point method instead of SMO.
pub fn solve_soft_margin_svm_ipm(data: &Dataset, tau: f64) -> Result<SvmFit> {
    if !(tau > 0.0 && tau.is_finite()) {
        return Err(Error::InvalidArgument(format!("tau must be positive and finite, got {tau}")));
    }
    check_classes(data)?;
    let c = tau / data.p as f64;
    let sol = solve_soft_margin_ipm(data, c, &IpmConfig::default())?;
    Ok(fit_from_ipm(data, sol, c))
}

fn fit_from_ipm(data: &Dataset, sol: IpmSolution, c: f64) -> SvmFit {
    let mut w = vec![0.0; data.p];
    for i in 0..data.n {
        let coef = 0.5 * sol.lambda[i] * data.label(i);
        for (wk, xk) in w.iter_mut().zip(data.row(i)) {
            *wk += coef * xk;
        }
    }
    let status = if sol.converged { FitStatus::Optimal } else { FitStatus::MaxIter };
    assemble_fit(data, w, sol.b, sol.lambda, c, status, sol.residual, sol.iterations)
}

/// Largest escalation exponent: penalties `C = 10ᵏ`, `k = 0..=8`.
pub const HARD_MARGIN_LEVELS: i32 = 8;

/// Hard-margin SVM by penalty escalation.
///
/// The soft-margin problem is solved at `C = 10ᵏ` (`τ̃ = 10ᵏ·p`). A level
/// whose solution has no training error (`hinge_total ≤ 1e−6`) and no dual
/// variable within `1e−6·max(1, C)` of `C` satisfies the hard-margin KKT
/// system and is returned as `Optimal`. Otherwise the final level is returned
/// as `Infeasible`.
///
/// An interior-point iterate approaches a bound that is active at the
/// optimum only to within about the square root of its tolerance, so a dual
/// variable sitting `1e−7` below `C` is treated as being at the bound.
///
/// Each level is solved by the interior-point method, whose iteration count
/// does not grow with `C`; SMO slows down by orders of magnitude at large `C`
/// on nearly separable data.
///
/// Before the checks, the interior-point duals are refined by solving the
/// hard-margin KKT equations exactly on their support set. The iterate
/// leaves each support vector about `1e−8` short of margin one, which adds up
/// past the hinge bound on instances with a few hundred support vectors. The
/// refined solution is used when its duals are nonnegative and every margin
/// is at least `1 − 1e−9`; it then solves the hard-margin program exactly.
pub fn solve_hard_margin_svm(data: &Dataset) -> Result<SvmFit> {
    solve_hard_margin_svm_with(data, &IpmConfig::default())
}

pub fn solve_hard_margin_svm_with(data: &Dataset, cfg: &IpmConfig) -> Result<SvmFit> {
    check_classes(data)?;
    let mut total = 0;
    let mut last = None;
    for k in 0..=HARD_MARGIN_LEVELS {
        let c = 10f64.powi(k);
        let sol = solve_soft_margin_ipm(data, c, cfg)?;
        total += sol.iterations;
        let mut fit = fit_from_ipm(data, sol, c);
        fit.iterations = total;
        let slack = 1e-6 * c.max(1.0);
        let interior = |f: &SvmFit| f.dual_vars.iter().all(|&a| a < c - slack);
        if fit.status == FitStatus::Optimal && interior(&fit) {
            if let Some(refined) = refine_support_set(data, &fit) {
                if refined.hinge_total <= 1e-6 && interior(&refined) {
                    return Ok(refined);
                }
            }
            if fit.hinge_total <= 1e-6 {
                return Ok(fit);
            }
        }
        fit.status = FitStatus::Infeasible;
        last = Some(fit);
    }
    Ok(last.expect("at least one level"))
}

/// Duals below this fraction of the largest one are treated as zero when
/// extracting the initial support set.
const SUPPORT_FRACTION: f64 = 1e-7;

/// Active-set corrections allowed while refining a support set.
const MAX_SUPPORT_UPDATES: usize = 50;

/// Solves `yᵢ(wᵀxᵢ + b) = 1` on a support set together with `Σλᵢyᵢ = 0`,
/// where `w = ½Σλᵢyᵢxᵢ`, returning `(λ_S, b)`.
fn solve_on_support(data: &Dataset, support: &[usize]) -> Option<(Vec<f64>, f64)> {
    let m = support.len();
    let mut a = DMatrix::zeros(m + 1, m + 1);
    let mut rhs = DVector::zeros(m + 1);
    for (r, &i) in support.iter().enumerate() {
        let yi = data.label(i);
        for (k, &j) in support.iter().enumerate().skip(r) {
            let v = 0.5 * yi * data.label(j) * dot(data.row(i), data.row(j));
            a[(r, k)] = v;
            a[(k, r)] = v;
        }
        a[(r, m)] = yi;
        a[(m, r)] = yi;
        rhs[r] = 1.0;
    }
    let sol = a.lu().solve(&rhs)?;
    if sol.iter().any(|v| !v.is_finite()) {
        return None;
    }
    Some((sol.iter().take(m).copied().collect(), sol[m]))
}

/// Refines the support set of `fit` until the hard-margin KKT conditions
/// hold exactly: nonnegative duals on the support set, margin one there and
/// margin at least `1 − 1e−9` elsewhere. Each correction drops the most
/// negative dual or adds the worst margin violator. Returns `None` when the
/// system turns singular or the corrections run out.
fn refine_support_set(data: &Dataset, fit: &SvmFit) -> Option<SvmFit> {
    let top = fit.dual_vars.iter().cloned().fold(0.0, f64::max);
    if !(top > 0.0) {
        return None;
    }
    let mut support: Vec<usize> = (0..data.n).filter(|&i| fit.dual_vars[i] > SUPPORT_FRACTION * top).collect();
    for _ in 0..=MAX_SUPPORT_UPDATES {
        let (duals, b) = solve_on_support(data, &support)?;
        if let Some((pos, _)) = duals.iter().enumerate().filter(|(_, &l)| l < 0.0).min_by(|x, y| x.1.total_cmp(y.1)) {
            support.remove(pos);
            continue;
        }
        let mut lambda = vec![0.0; data.n];
        let mut w = vec![0.0; data.p];
        for (&i, &l) in support.iter().zip(&duals) {
            lambda[i] = l;
            let coef = 0.5 * l * data.label(i);
            for (wk, xk) in w.iter_mut().zip(data.row(i)) {
                *wk += coef * xk;
            }
        }
        let worst = (0..data.n)
            .map(|i| (i, data.label(i) * (dot(&w, data.row(i)) + b)))
            .min_by(|x, y| x.1.total_cmp(&y.1))?;
        if worst.1 < 1.0 - 1e-9 {
            if support.contains(&worst.0) {
                return None;
            }
            support.push(worst.0);
            support.sort_unstable();
            continue;
        }
        return Some(assemble_fit(
            data,
            w,
            b,
            lambda,
            fit.penalty,
            FitStatus::Optimal,
            fit.kkt_residual,
            fit.iterations,
        ));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::ModelParams;

    fn pair() -> Dataset {
        let p = ModelParams::balanced(1.0, 1.0, 1.0).unwrap();
        Dataset::from_rows(&[vec![1.0, 0.0], vec![-1.0, 0.0]], &[1, -1], p).unwrap()
    }

    #[test]
    fn symmetric_pair_soft() {
        let fit = solve_soft_margin_svm(&pair(), 1e4).unwrap();
        assert_eq!(fit.status, FitStatus::Optimal);
        assert!((fit.w[0] - 1.0).abs() < 1e-9 && fit.w[1].abs() < 1e-12);
        assert!(fit.b.abs() < 1e-9);
        assert!((fit.min_margin(&pair()) - 1.0).abs() < 1e-9);
    }

    #[test]
    fn symmetric_pair_hard() {
        let fit = solve_hard_margin_svm(&pair()).unwrap();
        assert_eq!(fit.status, FitStatus::Optimal);
        assert!((fit.w[0] - 1.0).abs() < 1e-9 && fit.b.abs() < 1e-9);
    }

    #[test]
    fn overlapping_points_are_infeasible() {
        let p = ModelParams::balanced(1.0, 1.0, 1.0).unwrap();
        let rows = [vec![1.0, 0.0], vec![1.0, 0.0], vec![-1.0, 0.0]];
        let d = Dataset::from_rows(&rows, &[1, -1, -1], p).unwrap();
        let fit = solve_hard_margin_svm(&d).unwrap();
        assert_eq!(fit.status, FitStatus::Infeasible);
    }

    #[test]
    fn small_box_saturates() {
        let fit = solve_soft_margin_svm(&pair(), 0.2).unwrap();
        assert_eq!(fit.status, FitStatus::Optimal);
        assert!(fit.dual_vars.iter().all(|&a| (a - 0.1).abs() < 1e-12));
        assert!((fit.w[0] - 0.1).abs() < 1e-12);
        assert!(fit.duality_gap().abs() < 1e-9);
    }

    #[test]
    fn rejects_bad_tau_and_single_class() {
        assert!(solve_soft_margin_svm(&pair(), 0.0).is_err());
        let p = ModelParams::balanced(1.0, 1.0, 1.0).unwrap();
        let d = Dataset::from_rows(&[vec![1.0], vec![2.0]], &[1, 1], p).unwrap();
        assert!(matches!(solve_soft_margin_svm(&d, 1.0), Err(Error::DegenerateSplit { .. })));
    }
}
