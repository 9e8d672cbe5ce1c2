use crate::error::{Error, Result};

/// Population statistics of the two-class isotropic Gaussian mixture.
///
/// `mu` is the limit of `‖μ‖₂` (class means are `±μ`), `sigma` the per-coordinate
/// noise standard deviation, `delta` the limit of `n/p`, and `pi0`/`pi1` the
/// class proportions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    pub mu: f64,
    pub sigma: f64,
    pub delta: f64,
    pub pi0: f64,
    pub pi1: f64,
}

impl ModelParams {
    pub fn new(mu: f64, sigma: f64, delta: f64, pi0: f64, pi1: f64) -> Result<Self> {
        let p = ModelParams { mu, sigma, delta, pi0, pi1 };
        p.validate()?;
        Ok(p)
    }

    /// Equal class proportions.
    pub fn balanced(mu: f64, sigma: f64, delta: f64) -> Result<Self> {
        Self::new(mu, sigma, delta, 0.5, 0.5)
    }

    /// Builds parameters from the class-1 proportion alone.
    pub fn with_pi1(mu: f64, sigma: f64, delta: f64, pi1: f64) -> Result<Self> {
        Self::new(mu, sigma, delta, 1.0 - pi1, pi1)
    }

    pub fn validate(&self) -> Result<()> {
        let all_finite = [self.mu, self.sigma, self.delta, self.pi0, self.pi1]
            .iter()
            .all(|v| v.is_finite());
        let ok = all_finite
            && self.mu >= 0.0
            && self.sigma > 0.0
            && self.delta > 0.0
            && self.pi0 > 0.0
            && self.pi0 < 1.0
            && self.pi1 > 0.0
            && self.pi1 < 1.0
            && (self.pi0 + self.pi1 - 1.0).abs() <= 1e-12;
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!("invalid model parameters {self:?}")))
        }
    }

    /// Signal-to-noise ratio `μ/σ`.
    pub fn snr(&self) -> f64 {
        self.mu / self.sigma
    }

    pub fn with_delta(self, delta: f64) -> Result<Self> {
        Self::new(self.mu, self.sigma, delta, self.pi0, self.pi1)
    }

    pub fn with_mu(self, mu: f64) -> Result<Self> {
        Self::new(mu, self.sigma, self.delta, self.pi0, self.pi1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(ModelParams::balanced(1.0, 1.0, 2.0).is_ok());
        assert!(ModelParams::new(1.0, 1.0, 2.0, 0.4, 0.5).is_err());
        assert!(ModelParams::balanced(-1.0, 1.0, 2.0).is_err());
        assert!(ModelParams::balanced(1.0, 0.0, 2.0).is_err());
        assert!(ModelParams::balanced(1.0, 1.0, 0.0).is_err());
        assert!(ModelParams::balanced(f64::NAN, 1.0, 1.0).is_err());
        assert!(ModelParams::with_pi1(1.0, 1.0, 1.0, 1.0).is_err());
        let p = ModelParams::with_pi1(1.0, 2.0, 1.0, 0.7).unwrap();
        assert!((p.pi0 - 0.3).abs() < 1e-15);
        assert_eq!(p.snr(), 0.5);
    }
}
