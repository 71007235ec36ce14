//! Per-sample controllers for the zero-attractor step-size kappa(n).
//!
//! Three families:
//!
//! - [`FixedStep`] returns a constant kappa forever.
//! - [`YouVss`] starts large and is cut by a factor `eta` each time a
//!   windowed error-power detector declares the filter convergent; once
//!   kappa drops below `kappa_min` it is never reduced again. Fast to
//!   converge, but the small frozen step-size cannot react when the true
//!   system later changes.
//! - [`SparsenessVss`] drives kappa from the motion of the weight vector's
//!   sparseness. With `J` a sparseness functional of the weights:
//!
//!   ```text
//!   delta(n) = J(w(n)) - phi(n-1)
//!   phi(n)   = (1 - lambda) phi(n-1) + lambda J(w(n))
//!   kappa(n) = (1 - alpha) kappa(n-1) + alpha gamma |delta(n)|
//!   ```
//!
//!   While the filter is moving (initial convergence, or a change of the
//!   true system) the deviation `delta` is large and kappa inflates; at
//!   steady state `delta` dies out and kappa decays geometrically, removing
//!   the attractor's bias. `J` is either a summed scalar penalty or the
//!   Hoyer sparsity, which stays near zero for dispersive weight vectors.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::sparsity::{hoyer_sparsity, Measure};

/// Parameters for the variable step-size controllers. Each controller
/// validates only the fields it uses.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VssParams {
    /// Forgetting factor of the running sparseness average, in (0, 1).
    pub lambda: f64,
    /// Smoothing factor of the kappa recursion, in (0, 1).
    pub alpha: f64,
    /// Correction factor scaling |delta| into a step-size, > 0.
    pub gamma: f64,
    /// Initial step-size kappa(0), >= 0.
    pub kappa0: f64,
    /// Decay factor applied on each convergence event, in (0, 1).
    pub eta: f64,
    /// Once kappa falls below this floor it is frozen, > 0.
    pub kappa_min: f64,
    /// Short error-power window of the convergence detector.
    pub conv_short: usize,
    /// Long error-power window; also the detector's check interval.
    pub conv_long: usize,
    /// Short/long power ratio at or below which the filter counts as
    /// converging.
    pub conv_ratio: f64,
}

impl Default for VssParams {
    fn default() -> Self {
        Self {
            lambda: 0.002,
            alpha: 0.05,
            gamma: 6.0e-6,
            kappa0: 2.5e-5,
            eta: 0.5,
            kappa_min: 7.0e-5,
            conv_short: 64,
            conv_long: 1024,
            conv_ratio: 0.98,
        }
    }
}

fn check_unit_interval(name: &str, v: f64) -> Result<()> {
    if !v.is_finite() || v <= 0.0 || v >= 1.0 {
        return Err(Error::param(format!(
            "{name} must lie strictly inside (0, 1), got {v}"
        )));
    }
    Ok(())
}

fn check_positive(name: &str, v: f64) -> Result<()> {
    if !v.is_finite() || v <= 0.0 {
        return Err(Error::param(format!("{name} must be positive, got {v}")));
    }
    Ok(())
}

fn check_nonnegative(name: &str, v: f64) -> Result<()> {
    if !v.is_finite() || v < 0.0 {
        return Err(Error::param(format!("{name} must be nonnegative, got {v}")));
    }
    Ok(())
}

/// Constant step-size controller.
#[derive(Debug, Clone, Copy)]
pub struct FixedStep {
    kappa: f64,
}

impl FixedStep {
    pub fn new(kappa0: f64) -> Result<Self> {
        check_nonnegative("kappa0", kappa0)?;
        Ok(Self { kappa: kappa0 })
    }

    pub fn next_kappa(&mut self) -> f64 {
        self.kappa
    }
}

/// Sliding-window mean with O(1) updates.
#[derive(Debug, Clone)]
struct SlidingMean {
    buf: VecDeque<f64>,
    cap: usize,
    sum: f64,
}

impl SlidingMean {
    fn new(cap: usize) -> Self {
        Self {
            buf: VecDeque::with_capacity(cap),
            cap,
            sum: 0.0,
        }
    }

    fn push(&mut self, v: f64) {
        if self.buf.len() == self.cap {
            if let Some(old) = self.buf.pop_front() {
                self.sum -= old;
            }
        }
        self.buf.push_back(v);
        self.sum += v;
    }

    fn is_full(&self) -> bool {
        self.buf.len() == self.cap
    }

    fn mean(&self) -> f64 {
        self.sum / self.buf.len() as f64
    }
}

/// Decay-on-convergence step-size rule.
///
/// Kappa starts at `kappa0`. Every `conv_long` samples the detector compares
/// the mean of e^2 over the last `conv_short` samples against the mean over
/// the last `conv_long`; a ratio at or below `conv_ratio` means the error
/// power is still falling, and kappa is multiplied by `eta`. Once kappa is
/// below `kappa_min` no further reduction ever happens, so after the filter
/// has converged the step-size stays stuck at its small final value.
#[derive(Debug, Clone)]
pub struct YouVss {
    kappa: f64,
    eta: f64,
    kappa_min: f64,
    conv_ratio: f64,
    short: SlidingMean,
    long: SlidingMean,
    check_every: u64,
    samples: u64,
    decay_events: u32,
}

impl YouVss {
    pub fn new(params: &VssParams) -> Result<Self> {
        check_nonnegative("kappa0", params.kappa0)?;
        check_unit_interval("eta", params.eta)?;
        check_positive("kappa_min", params.kappa_min)?;
        check_positive("conv_ratio", params.conv_ratio)?;
        if params.conv_short == 0 || params.conv_long < params.conv_short {
            return Err(Error::param(format!(
                "detector windows must satisfy 1 <= conv_short <= conv_long, got {} and {}",
                params.conv_short, params.conv_long
            )));
        }
        Ok(Self {
            kappa: params.kappa0,
            eta: params.eta,
            kappa_min: params.kappa_min,
            conv_ratio: params.conv_ratio,
            short: SlidingMean::new(params.conv_short),
            long: SlidingMean::new(params.conv_long),
            check_every: params.conv_long as u64,
            samples: 0,
            decay_events: 0,
        })
    }

    /// Feeds one error sample and returns the kappa to use for this sample.
    pub fn next_kappa(&mut self, e: f64) -> f64 {
        let power = e * e;
        self.short.push(power);
        self.long.push(power);
        self.samples += 1;
        if self.samples.is_multiple_of(self.check_every) && self.long.is_full() {
            let long_mean = self.long.mean();
            if long_mean > 0.0
                && self.short.mean() / long_mean <= self.conv_ratio
                && self.kappa >= self.kappa_min
            {
                self.kappa *= self.eta;
                self.decay_events += 1;
            }
        }
        self.kappa
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    /// How many times the detector has fired.
    pub fn decay_events(&self) -> u32 {
        self.decay_events
    }
}

/// The sparseness functional `J` driving a [`SparsenessVss`] controller.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SparsenessFunctional {
    /// J(w) = sum of a scalar penalty over all taps.
    PenaltySum(Measure),
    /// J(w) = Hoyer sparsity of w, in [0, 1].
    Hoyer,
}

impl SparsenessFunctional {
    pub fn eval(&self, w: &[f64]) -> Result<f64> {
        match self {
            Self::PenaltySum(measure) => measure.penalty_sum(w),
            Self::Hoyer => hoyer_sparsity(w),
        }
    }
}

/// Sparseness-gradient variable step-size controller.
///
/// On the first step phi is initialized to J(w(0)), so delta(1) = 0 and the
/// recursion starts without a spike. Within each step, delta is formed
/// against the average from the previous sample before that average absorbs
/// the current sparseness value.
#[derive(Debug, Clone)]
pub struct SparsenessVss {
    functional: SparsenessFunctional,
    lambda: f64,
    alpha: f64,
    gamma: f64,
    kappa: f64,
    phi: f64,
    primed: bool,
}

impl SparsenessVss {
    pub fn new(functional: SparsenessFunctional, params: &VssParams) -> Result<Self> {
        if let SparsenessFunctional::PenaltySum(measure) = &functional {
            measure.validate()?;
        }
        check_unit_interval("lambda", params.lambda)?;
        check_unit_interval("alpha", params.alpha)?;
        check_positive("gamma", params.gamma)?;
        check_nonnegative("kappa0", params.kappa0)?;
        Ok(Self {
            functional,
            lambda: params.lambda,
            alpha: params.alpha,
            gamma: params.gamma,
            kappa: params.kappa0,
            phi: 0.0,
            primed: false,
        })
    }

    /// Running sparseness average phi(n-1), as seen by the next step.
    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    /// `delta(n) = j_now - phi(n-1)`, with phi as it stood before this
    /// sample's average update.
    pub fn delta(&self, j_now: f64) -> f64 {
        j_now - self.phi
    }

    /// `phi(n) = (1 - lambda) phi(n-1) + lambda j_now`.
    pub fn phi_update(&mut self, j_now: f64) {
        self.phi = (1.0 - self.lambda) * self.phi + self.lambda * j_now;
    }

    /// `kappa(n) = (1 - alpha) kappa(n-1) + alpha gamma |delta|`; returns the
    /// new kappa.
    pub fn kappa_update(&mut self, delta: f64) -> f64 {
        self.kappa = (1.0 - self.alpha) * self.kappa + self.alpha * self.gamma * delta.abs();
        self.kappa
    }

    /// One controller step on the current weights: evaluate the functional,
    /// form delta against the old average, fold the new value into phi, then
    /// smooth `gamma |delta|` into kappa.
    pub fn step(&mut self, w: &[f64]) -> Result<f64> {
        let j_now = self.functional.eval(w)?;
        if !self.primed {
            self.phi = j_now;
            self.primed = true;
        }
        let delta = self.delta(j_now);
        self.phi_update(j_now);
        Ok(self.kappa_update(delta))
    }
}

/// Any step-size controller, driven uniformly by the simulation loop.
#[derive(Debug, Clone)]
pub enum Controller {
    Fixed(FixedStep),
    You(YouVss),
    Sparseness(SparsenessVss),
}

impl Controller {
    /// Returns kappa(n) given this sample's error and the pre-update weights.
    pub fn next_kappa(&mut self, e: f64, w: &[f64]) -> Result<f64> {
        match self {
            Controller::Fixed(c) => Ok(c.next_kappa()),
            Controller::You(c) => Ok(c.next_kappa(e)),
            Controller::Sparseness(c) => c.step(w),
        }
    }
}
