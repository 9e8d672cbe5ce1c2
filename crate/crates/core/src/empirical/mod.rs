//! Finite-size ground truth: data generation, exact SVM solvers, population
//! error rates and seeded Monte Carlo aggregation.

pub mod dataset;
pub mod experiment;
pub mod ipm;
pub mod lemmas;
pub mod smo;

pub use dataset::{generate_dataset, Dataset};
pub use experiment::{exact_error, run_monte_carlo, ErrorRates, ExperimentSummary};
pub use smo::{solve_hard_margin_svm, solve_soft_margin_svm, FitStatus, SmoConfig, SvmFit};
