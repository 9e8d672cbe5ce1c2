//! Truncated moments of the standard Gaussian measure `Dx = exp(-x²/2) dx / √(2π)`.
//!
//! Every integral in the asymptotic formulas reduces to one of these closed
//! forms. The measure already carries the `1/√(2π)` normalization; no extra
//! prefactor is applied anywhere.

use crate::error::{Error, Result};

const FRAC_1_SQRT_2PI: f64 = 0.398_942_280_401_432_7;

/// Beyond this magnitude arguments collapse to their asymptotic limits.
pub const TAIL_CUTOFF: f64 = 40.0;

/// Density of the standard normal distribution.
pub fn gauss_pdf(x: f64) -> f64 {
    if x.abs() > TAIL_CUTOFF {
        return 0.0;
    }
    FRAC_1_SQRT_2PI * (-0.5 * x * x).exp()
}

/// Upper tail probability `Q(x) = P(G > x)`, via `erfc`.
pub fn q_function(x: f64) -> f64 {
    if x > TAIL_CUTOFF {
        0.0
    } else if x < -TAIL_CUTOFF {
        1.0
    } else {
        0.5 * libm::erfc(x * std::f64::consts::FRAC_1_SQRT_2)
    }
}

/// `Mₖ(a) = ∫_a^∞ xᵏ Dx` for `k ∈ {0, 1, 2}`.
pub fn partial_moment(k: u32, a: f64) -> Result<f64> {
    match k {
        0 => Ok(q_function(a)),
        1 => Ok(gauss_pdf(a)),
        2 => {
            if a == f64::NEG_INFINITY {
                Ok(1.0)
            } else if a.is_infinite() {
                Ok(0.0)
            } else {
                Ok(a * gauss_pdf(a) + q_function(a))
            }
        }
        _ => Err(Error::InvalidArgument(format!(
            "partial moment order must be 0, 1 or 2, got {k}"
        ))),
    }
}

/// `E(G - a)₊ = φ(a) - a·Q(a)`.
pub fn hinge_moment(a: f64) -> f64 {
    if a > TAIL_CUTOFF {
        0.0
    } else if a < -TAIL_CUTOFF {
        -a
    } else {
        gauss_pdf(a) - a * q_function(a)
    }
}

/// `J(a) = E(G - a)₊² = (1 + a²)·Q(a) - a·φ(a)`.
pub fn hinge_sq_moment(a: f64) -> f64 {
    if a > TAIL_CUTOFF {
        0.0
    } else if a < -TAIL_CUTOFF {
        1.0 + a * a
    } else {
        (1.0 + a * a) * q_function(a) - a * gauss_pdf(a)
    }
}

/// `∫_a^b (t - a)² Dt` for `a ≤ b`; `b` may be `+∞`.
pub fn interval_shifted_sq(a: f64, b: f64) -> Result<f64> {
    if !a.is_finite() || b.is_nan() || a > b {
        return Err(Error::InvalidArgument(format!(
            "interval_shifted_sq needs finite a <= b, got a = {a}, b = {b}"
        )));
    }
    Ok(shifted_sq_unchecked(a, b))
}

/// Same as [`interval_shifted_sq`] without argument validation; callers
/// guarantee `a ≤ b`.
pub(crate) fn shifted_sq_unchecked(a: f64, b: f64) -> f64 {
    if b == f64::INFINITY {
        return hinge_sq_moment(a);
    }
    let w = b - a;
    let v = hinge_sq_moment(a) - hinge_sq_moment(b) - w * w * q_function(b) - 2.0 * w * hinge_moment(b);
    v.max(0.0)
}
