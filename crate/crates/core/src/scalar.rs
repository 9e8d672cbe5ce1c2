//! One-dimensional root finding and unimodal optimization.
//!
//! Everything here is deterministic: the same closure and the same inputs
//! produce bit-identical results.

use crate::error::{Error, Result};

/// Golden ratio conjugate, `(√5 - 1) / 2`.
const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// A closed search interval `[lo, hi]` with `lo < hi`, both finite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    lo: f64,
    hi: f64,
}

impl Bracket {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(Error::InvalidArgument(format!("invalid bracket [{lo}, {hi}]")));
        }
        Ok(Bracket { lo, hi })
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    /// Absolute tolerance on the argument.
    pub tol_x: f64,
    /// Absolute tolerance on the function value (root finding only).
    pub tol_f: f64,
    pub max_iter: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            tol_x: 1e-10,
            tol_f: 1e-12,
            max_iter: 200,
        }
    }
}

impl SolverConfig {
    pub fn new(tol_x: f64, tol_f: f64, max_iter: usize) -> Result<Self> {
        if !(tol_x > 0.0 && tol_f > 0.0 && max_iter >= 1) {
            return Err(Error::InvalidArgument(format!(
                "solver config needs positive tolerances and max_iter >= 1, got ({tol_x}, {tol_f}, {max_iter})"
            )));
        }
        Ok(SolverConfig { tol_x, tol_f, max_iter })
    }
}

/// Bisection for a root of a function whose sign differs at the bracket ends.
///
/// Stops when `|f(x)| ≤ tol_f`, when the bracket is narrower than `tol_x`, or
/// when the midpoint can no longer be distinguished from an endpoint. `f` is
/// only ever evaluated inside the initial bracket.
pub fn bisect_root<F>(mut f: F, bracket: Bracket, cfg: &SolverConfig) -> Result<f64>
where
    F: FnMut(f64) -> f64,
{
    let (mut lo, mut hi) = (bracket.lo, bracket.hi);
    let f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.is_nan() || f_hi.is_nan() || f_lo.signum() == f_hi.signum() {
        return Err(Error::NoSignChange { lo, hi });
    }
    let lo_negative = f_lo < 0.0;

    for _ in 0..cfg.max_iter {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            return Ok(mid);
        }
        let f_mid = f(mid);
        if f_mid.abs() <= cfg.tol_f || hi - lo <= cfg.tol_x {
            return Ok(mid);
        }
        if (f_mid < 0.0) == lo_negative {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Err(Error::MaxIter(cfg.max_iter))
}

/// Golden-section search for the minimum of a unimodal function.
///
/// Returns `(argmin, min)`. The reported point is the best of the two final
/// interior probes and the final bracket midpoint.
pub fn golden_min<F>(mut f: F, bracket: Bracket, cfg: &SolverConfig) -> Result<(f64, f64)>
where
    F: FnMut(f64) -> f64,
{
    let (mut a, mut b) = (bracket.lo, bracket.hi);
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);

    let mut iter = 0;
    while b - a > cfg.tol_x {
        if iter >= cfg.max_iter {
            return Err(Error::MaxIter(cfg.max_iter));
        }
        iter += 1;
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        }
    }

    let mid = 0.5 * (a + b);
    let f_mid = f(mid);
    let (mut best_x, mut best_f) = (mid, f_mid);
    for (x, fx) in [(x1, f1), (x2, f2)] {
        if fx < best_f {
            best_x = x;
            best_f = fx;
        }
    }
    Ok((best_x, best_f))
}

/// Golden-section search for the maximum of a unimodal function.
pub fn golden_max<F>(mut f: F, bracket: Bracket, cfg: &SolverConfig) -> Result<(f64, f64)>
where
    F: FnMut(f64) -> f64,
{
    let (x, neg) = golden_min(|x| -f(x), bracket, cfg)?;
    Ok((x, -neg))
}

/// Outcome of [`expand_bracket_for_max`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpandedBracket {
    pub bracket: Bracket,
    /// The function was still increasing when the upper cap was reached.
    pub at_cap: bool,
    /// The function was still increasing towards zero when the floor was reached.
    pub at_floor: bool,
}

/// Number of geometric shrink steps allowed below the seed before giving up.
const MAX_SHRINK_STEPS: i32 = 80;

/// Geometric bracket expansion for the maximizer of a concave function on `(0, cap]`.
///
/// Starting from `seed`, the bracket is pushed upward by `growth` while `f`
/// increases, or downward while it decreases. The returned bracket holds a
/// stationary point unless one of the boundary flags is set, in which case it
/// abuts the boundary where the supremum sits.
pub fn expand_bracket_for_max<F>(mut f: F, seed: Bracket, growth: f64, cap: f64) -> Result<ExpandedBracket>
where
    F: FnMut(f64) -> f64,
{
    if !(growth > 1.0) || !(seed.lo > 0.0) || !(seed.hi < cap) {
        return Err(Error::InvalidArgument(format!(
            "expand_bracket_for_max needs growth > 1 and seed in (0, cap); got growth {growth}, seed [{}, {}], cap {cap}",
            seed.lo, seed.hi
        )));
    }
    let (mut x0, mut x1) = (seed.lo, seed.hi);
    let (mut f0, mut f1) = (f(x0), f(x1));

    if f1 >= f0 {
        loop {
            let x2 = (x1 * growth).min(cap);
            let f2 = f(x2);
            if f2 < f1 {
                return Ok(ExpandedBracket {
                    bracket: Bracket::new(x0, x2)?,
                    at_cap: false,
                    at_floor: false,
                });
            }
            if x2 >= cap {
                return Ok(ExpandedBracket {
                    bracket: Bracket::new(x1, cap)?,
                    at_cap: true,
                    at_floor: false,
                });
            }
            x0 = x1;
            x1 = x2;
            f1 = f2;
        }
    }

    let floor = seed.lo / growth.powi(MAX_SHRINK_STEPS);
    loop {
        let xm = x0 / growth;
        let fm = f(xm);
        if fm <= f0 {
            return Ok(ExpandedBracket {
                bracket: Bracket::new(xm, x1)?,
                at_cap: false,
                at_floor: false,
            });
        }
        if xm <= floor {
            return Ok(ExpandedBracket {
                bracket: Bracket::new(xm, x0)?,
                at_cap: false,
                at_floor: true,
            });
        }
        x1 = x0;
        x0 = xm;
        f0 = fm;
    }
}

/// Downhill walk that brackets the minimizer of a convex function on the real line.
///
/// Probes `center ± step` and then moves in the descending direction with
/// steps growing by `growth`. Fails with `MaxIter` if no bracket is found
/// within `max_steps` moves.
pub fn bracket_minimum<F>(mut f: F, center: f64, step: f64, growth: f64, max_steps: usize) -> Result<Bracket>
where
    F: FnMut(f64) -> f64,
{
    if !(step > 0.0 && growth > 1.0 && center.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "bracket_minimum needs finite center, step > 0, growth > 1; got ({center}, {step}, {growth})"
        )));
    }
    let fc = f(center);
    let f_right = f(center + step);
    let dir = if f_right < fc {
        1.0
    } else {
        let f_left = f(center - step);
        if f_left < fc {
            -1.0
        } else {
            return Bracket::new(center - step, center + step);
        }
    };

    let mut prev = center;
    let mut cur = center + dir * step;
    let mut f_cur = if dir > 0.0 { f_right } else { f(cur) };
    let mut h = step;
    for _ in 0..max_steps {
        h *= growth;
        let next = cur + dir * h;
        let f_next = f(next);
        if f_next >= f_cur {
            let (lo, hi) = if dir > 0.0 { (prev, next) } else { (next, prev) };
            return Bracket::new(lo, hi);
        }
        prev = cur;
        cur = next;
        f_cur = f_next;
    }
    Err(Error::MaxIter(max_steps))
}
