//! Per-sample adaptive filter kernels: plain LMS and the l0/l1 zero-point
//! attracting projection (ZAP) variants.
//!
//! All three updates share the LMS gradient term; the ZAP variants subtract a
//! zero attractor evaluated componentwise on the pre-update weights:
//!
//! ```text
//! LMS     w(n) = w(n-1) + mu e(n) x(n)
//! l0-ZAP  w(n) = w(n-1) + mu e(n) x(n) - kappa beta sgn(w(n-1)) .* exp(-beta |w(n-1)|)
//! l1-ZAP  w(n) = w(n-1) + mu e(n) x(n) - kappa sgn(w(n-1))
//! ```
//!
//! The attractor drags small coefficients toward exactly zero, which speeds
//! up identification of sparse systems. `kappa` is the attractor step-size,
//! supplied per sample by a [`crate::stepsize`] controller; with `kappa = 0`
//! both ZAP updates reduce to plain LMS bit for bit. Neither attractor clips
//! at zero, so a coefficient may flip sign within one step.

use crate::error::{Error, Result};
use crate::sparsity::sign;

/// Which zero attractor an update applies.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Attractor {
    /// Plain LMS, no attractor.
    None,
    /// Exponentially windowed attractor `kappa beta sgn(w) exp(-beta |w|)`;
    /// `1/beta` sets the magnitude range that still feels attraction.
    L0 { beta: f64 },
    /// Constant-magnitude attractor `kappa sgn(w)`.
    L1,
}

/// Step sizes for one update call.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdaptParams {
    /// LMS gradient step-size.
    pub mu: f64,
    /// Zero-attractor step-size kappa(n).
    pub kappa: f64,
    /// Attractor kind.
    pub attractor: Attractor,
}

impl AdaptParams {
    pub fn lms(mu: f64) -> Self {
        Self {
            mu,
            kappa: 0.0,
            attractor: Attractor::None,
        }
    }

    pub fn zap_l0(mu: f64, kappa: f64, beta: f64) -> Self {
        Self {
            mu,
            kappa,
            attractor: Attractor::L0 { beta },
        }
    }

    pub fn zap_l1(mu: f64, kappa: f64) -> Self {
        Self {
            mu,
            kappa,
            attractor: Attractor::L1,
        }
    }

    /// Same parameters with this sample's kappa from a step-size controller.
    pub fn with_kappa(self, kappa: f64) -> Self {
        Self { kappa, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if !self.mu.is_finite() || self.mu <= 0.0 {
            return Err(Error::param(format!(
                "mu must be positive, got {}",
                self.mu
            )));
        }
        if !self.kappa.is_finite() || self.kappa < 0.0 {
            return Err(Error::param(format!(
                "kappa must be nonnegative, got {}",
                self.kappa
            )));
        }
        if let Attractor::L0 { beta } = self.attractor {
            if !beta.is_finite() || beta <= 0.0 {
                return Err(Error::param(format!("beta must be positive, got {beta}")));
            }
        }
        Ok(())
    }
}

/// Adaptive filter state: the weight vector and the most-recent-first
/// regressor window, both of fixed length.
///
/// A `FilterState` is a plain value; updates mutate it in place and distinct
/// instances are independent. Samples must be fed strictly in order.
#[derive(Debug, Clone, PartialEq)]
pub struct FilterState {
    weights: Vec<f64>,
    window: Vec<f64>,
}

impl FilterState {
    /// Zero-initialized filter of length `len >= 1`.
    pub fn new(len: usize) -> Result<Self> {
        if len == 0 {
            return Err(Error::param("filter length must be at least 1"));
        }
        Ok(Self {
            weights: vec![0.0; len],
            window: vec![0.0; len],
        })
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Current adaptive weights w(n).
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Regressor window `[x(n), x(n-1), ..., x(n-L+1)]`, newest first.
    pub fn window(&self) -> &[f64] {
        &self.window
    }

    /// Shifts the regressor window by one sample: the new sample lands at
    /// index 0 and the oldest falls off the end.
    pub fn push_sample(&mut self, x_new: f64) -> Result<()> {
        if !x_new.is_finite() {
            return Err(Error::param(format!(
                "push_sample: non-finite input sample {x_new}"
            )));
        }
        self.window.rotate_right(1);
        self.window[0] = x_new;
        Ok(())
    }

    /// Estimation error `e(n) = d(n) - x' w` against the desired sample.
    pub fn error(&self, desired: f64) -> f64 {
        let y: f64 = self
            .window
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| x * w)
            .sum();
        desired - y
    }

    /// Plain LMS update `w += mu e x`.
    pub fn lms_update(&mut self, e: f64, mu: f64) {
        let g = mu * e;
        for (w, &x) in self.weights.iter_mut().zip(&self.window) {
            *w += g * x;
        }
    }

    /// l0-ZAP update: LMS plus the exponential zero attractor, with sign and
    /// magnitude taken from the pre-update weights.
    pub fn zap_l0_update(&mut self, e: f64, mu: f64, kappa: f64, beta: f64) {
        let g = mu * e;
        let kb = kappa * beta;
        for (w, &x) in self.weights.iter_mut().zip(&self.window) {
            let prev = *w;
            *w = prev + g * x - kb * sign(prev) * (-beta * prev.abs()).exp();
        }
    }

    /// l1-ZAP update: LMS plus the constant-magnitude zero attractor on the
    /// pre-update weights.
    pub fn zap_l1_update(&mut self, e: f64, mu: f64, kappa: f64) {
        let g = mu * e;
        for (w, &x) in self.weights.iter_mut().zip(&self.window) {
            let prev = *w;
            *w = prev + g * x - kappa * sign(prev);
        }
    }

    /// Applies the update selected by `params.attractor`.
    pub fn update(&mut self, e: f64, params: &AdaptParams) {
        match params.attractor {
            Attractor::None => self.lms_update(e, params.mu),
            Attractor::L0 { beta } => self.zap_l0_update(e, params.mu, params.kappa, beta),
            Attractor::L1 => self.zap_l1_update(e, params.mu, params.kappa),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn state_with(weights: &[f64], window: &[f64]) -> FilterState {
        let mut s = FilterState::new(weights.len()).unwrap();
        s.weights.copy_from_slice(weights);
        s.window.copy_from_slice(window);
        s
    }

    #[test]
    fn push_shifts_from_zeros() {
        let mut s = FilterState::new(3).unwrap();
        s.push_sample(5.0).unwrap();
        assert_eq!(s.window(), &[5.0, 0.0, 0.0]);
    }

    #[test]
    fn push_keeps_newest_first() {
        let mut s = FilterState::new(3).unwrap();
        for v in [1.0, 2.0, 3.0] {
            s.push_sample(v).unwrap();
        }
        assert_eq!(s.window(), &[3.0, 2.0, 1.0]);
        s.push_sample(4.0).unwrap();
        assert_eq!(s.window(), &[4.0, 3.0, 2.0]);
    }

    #[test]
    fn push_rejects_non_finite() {
        let mut s = FilterState::new(2).unwrap();
        assert!(s.push_sample(f64::NAN).is_err());
        assert!(s.push_sample(f64::INFINITY).is_err());
        // State untouched by the failed pushes.
        assert_eq!(s.window(), &[0.0, 0.0]);
    }

    #[test]
    fn error_with_zero_weights_is_desired() {
        let mut s = FilterState::new(4).unwrap();
        s.push_sample(1.5).unwrap();
        assert_eq!(s.error(0.75), 0.75);
    }

    #[test]
    fn error_is_zero_for_perfect_model() {
        let h = [0.4, -0.2, 1.1];
        let x = [2.0, -1.0, 0.5];
        let s = state_with(&h, &x);
        let d: f64 = h.iter().zip(&x).map(|(&a, &b)| a * b).sum();
        assert_relative_eq!(s.error(d), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn error_hand_oracle() {
        // w = (0.5, -1), x = (2, 3), d = 1: e = 1 - (1 - 3) = 3
        let s = state_with(&[0.5, -1.0], &[2.0, 3.0]);
        assert_eq!(s.error(1.0), 3.0);
    }

    #[test]
    fn lms_update_scalar_oracle() {
        let mut s = state_with(&[0.0, 0.0], &[1.0, 2.0]);
        s.lms_update(1.0, 0.1);
        assert_relative_eq!(s.weights()[0], 0.1, epsilon = 1e-15);
        assert_relative_eq!(s.weights()[1], 0.2, epsilon = 1e-15);
    }

    #[test]
    fn lms_update_no_op_cases() {
        let mut s = state_with(&[0.3, -0.7], &[1.0, -2.0]);
        let before = s.weights().to_vec();
        s.lms_update(0.0, 0.5);
        assert_eq!(s.weights(), before.as_slice());

        let mut s = state_with(&[0.3, -0.7], &[0.0, 0.0]);
        s.lms_update(3.0, 0.5);
        assert_eq!(s.weights(), &[0.3, -0.7]);
    }

    #[test]
    fn zap_l0_attractor_value() {
        // mu e = 0 isolates the attractor: w0 = 1 - 0.1 * 1 * e^-1
        let mut s = state_with(&[1.0, 0.0], &[0.0, 0.0]);
        s.zap_l0_update(0.0, 0.5, 0.1, 1.0);
        assert_relative_eq!(s.weights()[0], 0.9632120558828557, epsilon = 1e-15);
        // A zero component feels no attraction at all.
        assert_eq!(s.weights()[1], 0.0);
    }

    #[test]
    fn zap_l0_with_zero_kappa_is_lms_bitwise() {
        let mut a = state_with(&[0.2, -0.9, 0.0], &[1.3, 0.4, -0.8]);
        let mut b = a.clone();
        a.lms_update(0.7, 0.05);
        b.zap_l0_update(0.7, 0.05, 0.0, 3.0);
        for (x, y) in a.weights().iter().zip(b.weights()) {
            assert_eq!(x.to_bits(), y.to_bits());
        }
    }

    #[test]
    fn zap_l1_attractor_arithmetic() {
        let mut s = state_with(&[0.5, -0.2, 0.0], &[0.0, 0.0, 0.0]);
        s.zap_l1_update(0.0, 0.5, 0.1);
        assert_relative_eq!(s.weights()[0], 0.4, epsilon = 1e-15);
        assert_relative_eq!(s.weights()[1], -0.1, epsilon = 1e-15);
        assert_eq!(s.weights()[2], 0.0);
    }

    #[test]
    fn zap_l1_overshoots_zero_without_clipping() {
        let mut s = state_with(&[0.05], &[0.0]);
        s.zap_l1_update(0.0, 0.5, 0.1);
        assert_relative_eq!(s.weights()[0], -0.05, epsilon = 1e-15);
    }

    #[test]
    fn zap_l1_with_zero_kappa_is_lms_bitwise() {
        let mut a = state_with(&[0.0, -0.9, 1e-12], &[0.3, 0.4, -0.8]);
        let mut b = a.clone();
        a.lms_update(-1.3, 0.02);
        b.zap_l1_update(-1.3, 0.02, 0.0);
        for (x, y) in a.weights().iter().zip(b.weights()) {
            assert_eq!(x.to_bits(), y.to_bits());
        }
    }

    #[test]
    fn l0_attraction_decays_with_magnitude() {
        // Attraction strength kappa beta exp(-beta |w|) on a magnitude grid.
        let (kappa, beta) = (0.01, 5.0);
        let grid: Vec<f64> = (1..100).map(|i| i as f64 * 0.02).collect();
        let pull = |w: f64| {
            let mut s = state_with(&[w], &[0.0]);
            s.zap_l0_update(0.0, 0.5, kappa, beta);
            w - s.weights()[0]
        };
        for pair in grid.windows(2) {
            assert!(
                pull(pair[0]) > pull(pair[1]),
                "attraction did not decay between {} and {}",
                pair[0],
                pair[1]
            );
        }
    }

    #[test]
    fn update_dispatches_on_attractor() {
        let x = [1.0, -0.5];
        let e = 0.3;
        let mu = 0.1;

        let mut direct = state_with(&[0.4, -0.6], &x);
        let mut via = direct.clone();
        direct.zap_l0_update(e, mu, 0.01, 5.0);
        via.update(e, &AdaptParams::zap_l0(mu, 0.01, 5.0));
        assert_eq!(direct.weights(), via.weights());

        let mut direct = state_with(&[0.4, -0.6], &x);
        let mut via = direct.clone();
        direct.zap_l1_update(e, mu, 0.01);
        via.update(e, &AdaptParams::zap_l1(mu, 0.01));
        assert_eq!(direct.weights(), via.weights());

        let mut direct = state_with(&[0.4, -0.6], &x);
        let mut via = direct.clone();
        direct.lms_update(e, mu);
        via.update(e, &AdaptParams::lms(mu));
        assert_eq!(direct.weights(), via.weights());
    }

    #[test]
    fn params_validation() {
        assert!(AdaptParams::lms(0.1).validate().is_ok());
        assert!(AdaptParams::lms(0.0).validate().is_err());
        assert!(AdaptParams::lms(-0.1).validate().is_err());
        assert!(AdaptParams::zap_l0(0.1, 0.0, 1.0).validate().is_ok());
        assert!(AdaptParams::zap_l0(0.1, -1e-9, 1.0).validate().is_err());
        assert!(AdaptParams::zap_l0(0.1, 0.0, 0.0).validate().is_err());
        assert!(AdaptParams::zap_l1(0.1, f64::NAN).validate().is_err());
    }

    #[test]
    fn new_rejects_zero_length() {
        assert!(FilterState::new(0).is_err());
    }
}
