use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("f has the same sign at both ends of [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },

    #[error("iteration budget of {0} exhausted")]
    MaxIter(usize),

    #[error("hard-margin SVM is not separable: delta = {delta} >= delta* = {delta_critical}")]
    NotSeparable { delta: f64, delta_critical: f64 },

    #[error("beta(q0) stayed nonnegative up to q0 = {0}")]
    Divergence(f64),

    #[error("saddle-point restarts disagree by {0:e}")]
    NoConvergence(f64),

    #[error("class split n0 = {n0}, n1 = {n1} leaves a class empty")]
    DegenerateSplit { n0: usize, n1: usize },

    #[error("weight vector has zero norm")]
    ZeroWeight,

    #[error("all {0} replicates were infeasible")]
    AllInfeasible(usize),

    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
