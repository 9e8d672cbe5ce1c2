//! Asymptotic theory and simulation of support vector machines on a
//! two-class isotropic Gaussian mixture.

pub mod empirical;
pub mod error;
pub mod figures;
pub mod gauss;
pub mod hard_margin;
pub mod params;
pub mod scalar;
pub mod soft_margin;

pub use error::{Error, Result};
pub use params::ModelParams;
