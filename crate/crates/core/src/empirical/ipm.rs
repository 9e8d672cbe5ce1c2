//! Primal-dual interior-point solver for the soft-margin primal
//!
//! ```text
//! min ‖w‖² + C·1ᵀξ   subject to  yᵢ(xᵢᵀw + b) + ξᵢ ≥ 1,  ξ ≥ 0,
//! ```
//!
//! with Mehrotra predictor-corrector steps. Each Newton system is reduced to
//! the `(p+1)×(p+1)` normal equations `(diag(2,…,2,0) + X̃ᵀΩ⁻¹X̃)·(dw, db) = r`
//! with `X̃ = [X 1]`, so the cost per iteration does not grow with `C`.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

use super::dataset::Dataset;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IpmConfig {
    /// Target for the relative duality gap and the scaled residuals.
    pub tol: f64,
    /// Residual still reported as converged when rounding stalls progress
    /// before `tol` is reached.
    pub accept: f64,
    pub max_iter: usize,
    /// Iterations without a new best residual, once the duality gap is below
    /// `tol`, before giving up.
    pub patience: usize,
}

impl Default for IpmConfig {
    fn default() -> Self {
        IpmConfig {
            tol: 1e-12,
            accept: 1e-9,
            max_iter: 200,
            patience: 5,
        }
    }
}

/// The best primal and dual iterates found.
#[derive(Debug, Clone)]
pub struct IpmSolution {
    pub w: Vec<f64>,
    pub b: f64,
    pub xi: Vec<f64>,
    /// Multipliers of the margin constraints, in `(0, C)`.
    pub lambda: Vec<f64>,
    /// Multipliers of `ξ ≥ 0`, i.e. `C − λ` at convergence.
    pub nu: Vec<f64>,
    pub converged: bool,
    pub iterations: usize,
    /// Largest scaled residual of the returned iterate.
    pub residual: f64,
}

struct Direction {
    dw: DVector<f64>,
    db: f64,
    dxi: DVector<f64>,
    ds: DVector<f64>,
    dl: DVector<f64>,
    dn: DVector<f64>,
}

fn max_step(v: &DVector<f64>, dv: &DVector<f64>) -> f64 {
    v.iter()
        .zip(dv.iter())
        .filter(|(_, &d)| d < 0.0)
        .map(|(&x, &d)| -x / d)
        .fold(1.0, f64::min)
}

/// Solves the soft-margin problem with box bound `c`.
pub fn solve_soft_margin_ipm(data: &Dataset, c: f64, cfg: &IpmConfig) -> Result<IpmSolution> {
    if !(c > 0.0 && c.is_finite()) {
        return Err(Error::InvalidArgument(format!("C must be positive and finite, got {c}")));
    }
    let (n, p) = (data.n, data.p);
    let x = DMatrix::from_row_slice(n, p, &data.features);
    let y = DVector::from_iterator(n, (0..n).map(|i| data.label(i)));
    let mut xt = DMatrix::zeros(n, p + 1);
    xt.view_mut((0, 0), (n, p)).copy_from(&x);
    xt.column_mut(p).fill(1.0);

    let mut w = DVector::zeros(p);
    let mut b = 0.0;
    let mut xi = DVector::from_element(n, 1.0);
    let mut s = DVector::from_element(n, 1.0);
    let start = (0.5 * c).min(1.0);
    let mut lam = DVector::from_element(n, start);
    let mut nu = DVector::from_element(n, c - start);

    let scale_c = 1.0 + c;
    let x_abs = x.abs();
    let mut best: Option<IpmSolution> = None;
    let mut stalled = 0;
    let give_up = |best: Option<IpmSolution>| {
        let mut sol = best.expect("at least one iterate is recorded");
        sol.converged = sol.residual <= cfg.accept;
        sol
    };
    for iter in 0..cfg.max_iter {
        let yl = y.component_mul(&lam);
        let r_w = &w * 2.0 - x.tr_mul(&yl);
        let r_b = -y.dot(&lam);
        let r_xi = DVector::from_iterator(n, lam.iter().zip(nu.iter()).map(|(l, v)| c - l - v));
        let margins = &x * &w;
        let r_p = DVector::from_iterator(
            n,
            (0..n).map(|i| y[i] * (margins[i] + b) + xi[i] - s[i] - 1.0),
        );
        let gap = s.dot(&lam) + xi.dot(&nu);
        let mu = gap / (2 * n) as f64;
        let rel_gap = gap / (1.0 + w.norm_squared() + c * xi.sum());

        let w_scale = 1.0 + 2.0 * w.amax() + x_abs.tr_mul(&lam).amax();
        let residual = (r_w.amax() / w_scale)
            .max(r_b.abs() / (1.0 + lam.sum()))
            .max(r_xi.amax() / scale_c)
            .max(r_p.amax())
            .max(rel_gap);
        if residual <= cfg.tol {
            return Ok(finish(w, b, xi, lam, nu, true, iter, residual));
        }
        if best.as_ref().is_none_or(|s| residual < s.residual) {
            best = Some(finish(w.clone(), b, xi.clone(), lam.clone(), nu.clone(), false, iter, residual));
            stalled = 0;
        } else if rel_gap <= cfg.tol {
            stalled += 1;
            if stalled >= cfg.patience {
                return Ok(give_up(best));
            }
        }

        let omega_inv = DVector::from_iterator(
            n,
            (0..n).map(|i| 1.0 / (xi[i] / nu[i] + s[i] / lam[i])),
        );
        let mut weighted = xt.clone();
        for (i, mut row) in weighted.row_iter_mut().enumerate() {
            row *= omega_inv[i];
        }
        let mut m = xt.tr_mul(&weighted);
        for k in 0..p {
            m[(k, k)] += 2.0;
        }
        let Some(factor) = Factor::new(m) else {
            return Ok(give_up(best));
        };

        let solve = |r_sl: &DVector<f64>, r_xn: &DVector<f64>| -> Option<Direction> {
            let rhs_l = DVector::from_iterator(
                n,
                (0..n).map(|i| -r_p[i] + (r_xn[i] + xi[i] * r_xi[i]) / nu[i] - r_sl[i] / lam[i]),
            );
            let t = DVector::from_iterator(n, (0..n).map(|i| y[i] * omega_inv[i] * rhs_l[i]));
            let mut rhs = xt.tr_mul(&t);
            for k in 0..p {
                rhs[k] -= r_w[k];
            }
            rhs[p] -= r_b;
            let sol = factor.solve(&rhs)?;
            let dw = sol.rows(0, p).into_owned();
            let db = sol[p];
            let xdw = &x * &dw;
            let dl = DVector::from_iterator(
                n,
                (0..n).map(|i| omega_inv[i] * (rhs_l[i] - y[i] * xdw[i] - y[i] * db)),
            );
            let dxi = DVector::from_iterator(
                n,
                (0..n).map(|i| (-r_xn[i] - xi[i] * r_xi[i] + xi[i] * dl[i]) / nu[i]),
            );
            let ds = DVector::from_iterator(n, (0..n).map(|i| (-r_sl[i] - s[i] * dl[i]) / lam[i]));
            let dn = DVector::from_iterator(n, (0..n).map(|i| r_xi[i] - dl[i]));
            Some(Direction { dw, db, dxi, ds, dl, dn })
        };

        let sl = s.component_mul(&lam);
        let xn = xi.component_mul(&nu);
        let Some(aff) = solve(&sl, &xn) else {
            return Ok(give_up(best));
        };
        let a_aff = max_step(&s, &aff.ds)
            .min(max_step(&lam, &aff.dl))
            .min(max_step(&xi, &aff.dxi))
            .min(max_step(&nu, &aff.dn));
        let mu_aff = ((&s + &aff.ds * a_aff).dot(&(&lam + &aff.dl * a_aff))
            + (&xi + &aff.dxi * a_aff).dot(&(&nu + &aff.dn * a_aff)))
            / (2 * n) as f64;
        let sigma = (mu_aff / mu).powi(3).min(1.0);
        let target = sigma * mu;
        let r_sl = DVector::from_iterator(n, (0..n).map(|i| sl[i] + aff.ds[i] * aff.dl[i] - target));
        let r_xn = DVector::from_iterator(n, (0..n).map(|i| xn[i] + aff.dxi[i] * aff.dn[i] - target));
        let Some(d) = solve(&r_sl, &r_xn) else {
            return Ok(give_up(best));
        };

        let a_p = (0.995 * max_step(&s, &d.ds).min(max_step(&xi, &d.dxi))).min(1.0);
        let a_d = (0.995 * max_step(&lam, &d.dl).min(max_step(&nu, &d.dn))).min(1.0);
        w += &d.dw * a_p;
        b += d.db * a_p;
        xi += &d.dxi * a_p;
        s += &d.ds * a_p;
        lam += &d.dl * a_d;
        nu += &d.dn * a_d;
    }
    Ok(give_up(best))
}

enum Factor {
    Cholesky(nalgebra::Cholesky<f64, nalgebra::Dyn>),
    Lu(nalgebra::LU<f64, nalgebra::Dyn, nalgebra::Dyn>),
}

impl Factor {
    /// Cholesky when the normal matrix is numerically definite, and a
    /// partial-pivot LU when rounding has destroyed definiteness.
    fn new(m: DMatrix<f64>) -> Option<Factor> {
        match m.clone().cholesky() {
            Some(c) => Some(Factor::Cholesky(c)),
            None => {
                let lu = m.lu();
                lu.is_invertible().then_some(Factor::Lu(lu))
            }
        }
    }

    fn solve(&self, rhs: &DVector<f64>) -> Option<DVector<f64>> {
        match self {
            Factor::Cholesky(c) => Some(c.solve(rhs)),
            Factor::Lu(lu) => lu.solve(rhs),
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn finish(
    w: DVector<f64>,
    b: f64,
    xi: DVector<f64>,
    lam: DVector<f64>,
    nu: DVector<f64>,
    converged: bool,
    iterations: usize,
    residual: f64,
) -> IpmSolution {
    IpmSolution {
        w: w.iter().copied().collect(),
        b,
        xi: xi.iter().copied().collect(),
        lambda: lam.iter().copied().collect(),
        nu: nu.iter().copied().collect(),
        converged,
        iterations,
        residual,
    }
}
