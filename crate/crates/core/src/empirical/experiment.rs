use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gauss::q_function;
use crate::params::ModelParams;

use super::dataset::{generate_dataset, Dataset};
use super::smo::{solve_hard_margin_svm, solve_soft_margin_svm, FitStatus, SvmFit};

/// Environment variable that overrides the number of worker threads.
pub const THREADS_ENV: &str = "SVM_ASYM_THREADS";

/// Population error rates of a fixed hyperplane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorRates {
    /// Class centred at `−μ`.
    pub err0: f64,
    /// Class centred at `+μ`.
    pub err1: f64,
    pub err_total: f64,
}

/// Exact misclassification rates of `sign(wᵀx + b)` under the data model.
///
/// With `ρ̂ = cos∠(w, e₁)` and `η̂ = b/(σ‖w‖)`, a fresh class-1 point is
/// misclassified with probability `Q(ρ̂μ/σ + η̂)` and a class-0 point with
/// probability `Q(ρ̂μ/σ − η̂)`.
pub fn exact_error(fit: &SvmFit, data: &Dataset) -> Result<ErrorRates> {
    hyperplane_error(&fit.w, fit.b, &data.params)
}

/// [`exact_error`] for an explicit `(w, b)` with the mean along `e₁`.
pub fn hyperplane_error(w: &[f64], b: f64, params: &ModelParams) -> Result<ErrorRates> {
    let norm = w.iter().map(|v| v * v).sum::<f64>().sqrt();
    if norm <= 1e-12 {
        return Err(Error::ZeroWeight);
    }
    let s = w[0] * params.mu / (norm * params.sigma);
    let eta = b / (params.sigma * norm);
    let err0 = q_function(s - eta);
    let err1 = q_function(s + eta);
    Ok(ErrorRates {
        err0,
        err1,
        err_total: params.pi0 * err0 + params.pi1 * err1,
    })
}

/// Seed of replicate `r`: the first output of ChaCha8 keyed by
/// `master` on stream `r`.
pub fn replicate_seed(master: u64, r: u64) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(master);
    rng.set_stream(r);
    rng.next_u64()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReplicateOutcome {
    pub status: FitStatus,
    pub cos: f64,
    pub norm: f64,
    pub bias: f64,
    pub err_total: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExperimentSummary {
    pub reps: usize,
    pub p: usize,
    /// Replicates contributing to the moments.
    pub optimal_count: usize,
    pub cos_mean: f64,
    pub cos_std: f64,
    pub norm_mean: f64,
    pub norm_std: f64,
    pub bias_mean: f64,
    pub bias_std: f64,
    pub err_mean: f64,
    pub err_std: f64,
    pub infeasible_count: usize,
    /// Replicates whose solver exhausted its budget; excluded like infeasible ones.
    pub max_iter_count: usize,
}

impl ExperimentSummary {
    /// Standard error of a mean computed from `std`.
    pub fn standard_error(&self, std: f64) -> f64 {
        std / (self.optimal_count as f64).sqrt()
    }
}

/// Worker count from [`THREADS_ENV`], if set to a positive integer.
pub fn threads_from_env() -> Option<usize> {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
}

/// Solves one replicate: hard margin when `tau` is `None`.
pub fn run_replicate(params: &ModelParams, tau: Option<f64>, p: usize, seed: u64) -> Result<ReplicateOutcome> {
    let data = generate_dataset(params, p, seed)?;
    let fit = match tau {
        Some(t) => solve_soft_margin_svm(&data, t)?,
        None => solve_hard_margin_svm(&data)?,
    };
    if fit.status != FitStatus::Optimal {
        return Ok(ReplicateOutcome {
            status: fit.status,
            cos: f64::NAN,
            norm: f64::NAN,
            bias: f64::NAN,
            err_total: f64::NAN,
        });
    }
    let err = exact_error(&fit, &data)?;
    Ok(ReplicateOutcome {
        status: fit.status,
        cos: fit.cos_to_mean()?,
        norm: fit.norm(),
        bias: fit.b,
        err_total: err.err_total,
    })
}

fn mean_std(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    if xs.len() < 2 {
        return (mean, 0.0);
    }
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}

/// Reduces replicate outcomes in index order.
pub fn summarize(outcomes: &[ReplicateOutcome], p: usize) -> Result<ExperimentSummary> {
    let ok: Vec<&ReplicateOutcome> = outcomes.iter().filter(|o| o.status == FitStatus::Optimal).collect();
    let infeasible_count = outcomes.iter().filter(|o| o.status == FitStatus::Infeasible).count();
    let max_iter_count = outcomes.iter().filter(|o| o.status == FitStatus::MaxIter).count();
    if ok.is_empty() {
        return Err(Error::AllInfeasible(outcomes.len()));
    }
    let pick = |f: fn(&ReplicateOutcome) -> f64| mean_std(&ok.iter().map(|o| f(o)).collect::<Vec<_>>());
    let (cos_mean, cos_std) = pick(|o| o.cos);
    let (norm_mean, norm_std) = pick(|o| o.norm);
    let (bias_mean, bias_std) = pick(|o| o.bias);
    let (err_mean, err_std) = pick(|o| o.err_total);
    Ok(ExperimentSummary {
        reps: outcomes.len(),
        p,
        optimal_count: ok.len(),
        cos_mean,
        cos_std,
        norm_mean,
        norm_std,
        bias_mean,
        bias_std,
        err_mean,
        err_std,
        infeasible_count,
        max_iter_count,
    })
}

/// Runs `reps` independent replicates and aggregates the optimal ones.
///
/// Replicate `r` draws its data from [`replicate_seed`]`(master_seed, r)`, so
/// the result does not depend on the thread count. The worker count comes
/// from [`THREADS_ENV`] when set, and from rayon's default otherwise.
pub fn run_monte_carlo(
    params: &ModelParams,
    tau: Option<f64>,
    p: usize,
    reps: usize,
    master_seed: u64,
) -> Result<ExperimentSummary> {
    run_monte_carlo_with_threads(params, tau, p, reps, master_seed, threads_from_env())
}

pub fn run_monte_carlo_with_threads(
    params: &ModelParams,
    tau: Option<f64>,
    p: usize,
    reps: usize,
    master_seed: u64,
    threads: Option<usize>,
) -> Result<ExperimentSummary> {
    if reps < 2 {
        return Err(Error::InvalidArgument(format!("reps must be at least 2, got {reps}")));
    }
    params.validate()?;
    if let Some(t) = tau {
        if !(t > 0.0 && t.is_finite()) {
            return Err(Error::InvalidArgument(format!("tau must be positive and finite, got {t}")));
        }
    }
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        builder = builder.num_threads(n);
    }
    let pool = builder
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    let outcomes: Vec<Result<ReplicateOutcome>> = pool.install(|| {
        (0..reps)
            .into_par_iter()
            .map(|r| run_replicate(params, tau, p, replicate_seed(master_seed, r as u64)))
            .collect()
    });
    let outcomes = outcomes.into_iter().collect::<Result<Vec<_>>>()?;
    summarize(&outcomes, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params() -> ModelParams {
        ModelParams::balanced(1.5, 1.0, 1.0).unwrap()
    }

    #[test]
    fn aligned_and_orthogonal_hyperplanes() {
        let e = hyperplane_error(&[2.0, 0.0, 0.0], 0.0, &params()).unwrap();
        assert!((e.err0 - q_function(1.5)).abs() < 1e-15);
        assert_eq!(e.err0, e.err1);
        let e = hyperplane_error(&[0.0, 1.0, 0.0], 0.0, &params()).unwrap();
        assert_eq!(e.err_total, 0.5);
        assert!(matches!(hyperplane_error(&[0.0, 0.0], 0.0, &params()), Err(Error::ZeroWeight)));
    }

    #[test]
    fn positive_bias_favours_class_one() {
        let e = hyperplane_error(&[1.0, 0.0], 0.5, &params()).unwrap();
        assert!(e.err1 < e.err0);
    }

    #[test]
    fn replicate_seeds_differ() {
        let s: Vec<u64> = (0..4).map(|r| replicate_seed(7, r)).collect();
        assert_eq!(s, (0..4).map(|r| replicate_seed(7, r)).collect::<Vec<_>>());
        for i in 0..4 {
            for j in 0..i {
                assert_ne!(s[i], s[j]);
            }
        }
        assert_ne!(replicate_seed(7, 0), replicate_seed(8, 0));
    }

    #[test]
    fn summary_statistics() {
        let mk = |status, v: f64| ReplicateOutcome {
            status,
            cos: v,
            norm: 2.0 * v,
            bias: 0.0,
            err_total: v,
        };
        let out = [
            mk(FitStatus::Optimal, 1.0),
            mk(FitStatus::Infeasible, f64::NAN),
            mk(FitStatus::Optimal, 3.0),
        ];
        let s = summarize(&out, 10).unwrap();
        assert_eq!((s.optimal_count, s.infeasible_count), (2, 1));
        assert_eq!(s.cos_mean, 2.0);
        assert!((s.cos_std - 2f64.sqrt()).abs() < 1e-15);
        assert!((s.standard_error(s.cos_std) - 1.0).abs() < 1e-15);
        let none = [mk(FitStatus::Infeasible, f64::NAN); 2];
        assert!(matches!(summarize(&none, 10), Err(Error::AllInfeasible(2))));
    }

    #[test]
    fn rejects_too_few_reps() {
        assert!(run_monte_carlo_with_threads(&params(), None, 10, 1, 0, Some(1)).is_err());
    }
}
