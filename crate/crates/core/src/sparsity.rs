//! Sparseness measures, their sums over a weight vector, the componentwise
//! sign function, and the normalized (Hoyer) channel-sparsity statistic.
//!
//! A sparseness measure `G(t)` scores a single coefficient: it is zero at
//! zero, even, nondecreasing in `|t|`, and saturating measures approach the
//! indicator `|t| > 0`, so the tap-wise sum `J(w) = sum_i G(w_i)` behaves as
//! a smooth surrogate for the l0 norm. The Hoyer statistic instead maps the
//! l1/l2 norm ratio into `[0, 1]`: 1 for a single active tap, 0 for a
//! constant-magnitude (fully dispersive) vector.

use crate::error::{Error, Result};

/// Componentwise sign: `x / |x|` for nonzero `x`, exactly `0` at zero.
pub fn sign(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else if x < 0.0 {
        -1.0
    } else {
        0.0
    }
}

/// A scalar sparseness penalty `G(t)`.
///
/// Every formula reads its argument as `|t|`, so each measure is even and
/// defined for negative taps.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Measure {
    /// `|t|`, the plain l1 penalty.
    Abs,
    /// `|t| / (|t| + sigma)^(1 - p)` with `sigma > 0`, `0 <= p < 1`.
    Rational { sigma: f64, p: f64 },
    /// `1 - exp(-sigma |t|)` with `sigma > 0`.
    Exponential { sigma: f64 },
    /// `ln(1 + sigma |t|)` with `sigma > 0`.
    LogSum { sigma: f64 },
    /// `atan(sigma |t|)` with `sigma > 0`.
    Arctan { sigma: f64 },
    /// `2 sigma |t| - sigma^2 t^2` for `|t| <= 1/sigma`, saturating at `1`
    /// above. Continuous at the boundary, where both branches equal 1.
    SaturatedQuadratic { sigma: f64 },
}

impl Measure {
    /// Checks this measure's parameter constraints.
    pub fn validate(&self) -> Result<()> {
        match *self {
            Measure::Abs => Ok(()),
            Measure::Rational { sigma, p } => {
                check_sigma("Rational", sigma)?;
                if !p.is_finite() || !(0.0..1.0).contains(&p) {
                    return Err(Error::param(format!(
                        "Rational measure requires 0 <= p < 1, got p = {p}"
                    )));
                }
                Ok(())
            }
            Measure::Exponential { sigma } => check_sigma("Exponential", sigma),
            Measure::LogSum { sigma } => check_sigma("LogSum", sigma),
            Measure::Arctan { sigma } => check_sigma("Arctan", sigma),
            Measure::SaturatedQuadratic { sigma } => check_sigma("SaturatedQuadratic", sigma),
        }
    }

    /// Evaluates `G(t)`.
    pub fn penalty(&self, t: f64) -> Result<f64> {
        self.validate()?;
        Ok(self.eval(t))
    }

    /// Sums `G` over every component of `w`, in index order.
    pub fn penalty_sum(&self, w: &[f64]) -> Result<f64> {
        self.validate()?;
        if w.is_empty() {
            return Err(Error::param("penalty_sum: empty weight vector"));
        }
        Ok(w.iter().map(|&t| self.eval(t)).sum())
    }

    fn eval(&self, t: f64) -> f64 {
        let a = t.abs();
        match *self {
            Measure::Abs => a,
            Measure::Rational { sigma, p } => a / (a + sigma).powf(1.0 - p),
            Measure::Exponential { sigma } => 1.0 - (-sigma * a).exp(),
            Measure::LogSum { sigma } => (1.0 + sigma * a).ln(),
            Measure::Arctan { sigma } => (sigma * a).atan(),
            Measure::SaturatedQuadratic { sigma } => {
                if a <= 1.0 / sigma {
                    2.0 * sigma * a - sigma * sigma * t * t
                } else {
                    1.0
                }
            }
        }
    }
}

fn check_sigma(name: &str, sigma: f64) -> Result<()> {
    if !sigma.is_finite() || sigma <= 0.0 {
        return Err(Error::param(format!(
            "{name} measure requires sigma > 0, got sigma = {sigma}"
        )));
    }
    Ok(())
}

/// Normalized sparsity of a vector of length `L > 1`, in `[0, 1]`:
///
/// ```text
/// eps(w) = L / (L - sqrt(L)) * (1 - ||w||_1 / (sqrt(L) ||w||_2))
/// ```
///
/// A one-hot vector gives 1, a constant-magnitude vector gives 0. The
/// all-zero vector is mapped to 0 by definition, so a freshly initialized
/// filter reports no sparsity information and leaves the zero attractor off.
pub fn hoyer_sparsity(w: &[f64]) -> Result<f64> {
    let len = w.len();
    if len < 2 {
        return Err(Error::param(format!(
            "hoyer_sparsity: need at least 2 taps, got {len}"
        )));
    }
    let l1: f64 = w.iter().map(|&t| t.abs()).sum();
    if l1 == 0.0 {
        return Ok(0.0);
    }
    let l2 = w.iter().map(|&t| t * t).sum::<f64>().sqrt();
    let n = len as f64;
    let root = n.sqrt();
    let value = n / (n - root) * (1.0 - l1 / (root * l2));
    Ok(value.clamp(0.0, 1.0))
}
