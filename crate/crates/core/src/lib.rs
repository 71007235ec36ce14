//! Sparse system identification with zero-point attracting projection (ZAP)
//! adaptive filters.
//!
//! The crate provides the building blocks of an echo-cancellation style
//! identification experiment and a harness that wires them together:
//!
//! - [`signalgen`]: seeded white-noise input, sparse and dispersive test
//!   channels, echo synthesis, SNR-calibrated measurement noise.
//! - [`sparsity`]: scalar sparseness penalties, their tap-wise sums, the
//!   sign function, and the normalized (Hoyer) sparsity in `[0, 1]`.
//! - [`adaptive`]: per-sample LMS, l0-ZAP, and l1-ZAP weight updates.
//! - [`stepsize`]: controllers for the attractor step-size kappa(n) - fixed,
//!   decay-on-convergence, and the sparseness-gradient rule.
//! - [`harness`]: experiment configs, the Monte-Carlo scenario runner with a
//!   mid-run echo-path switch, the misalignment metric, and CSV output.
//!
//! Everything is seeded and deterministic: a configuration plus a base seed
//! fully determines every output byte, including under parallel Monte-Carlo
//! execution.
//!
//! ```
//! use zap_lms::adaptive::{AdaptParams, FilterState};
//! use zap_lms::signalgen::{sparse_impulse, synthesize_echo, white_noise};
//!
//! let h = sparse_impulse(64, 4, 7).unwrap();
//! let x = white_noise(2000, 8).unwrap();
//! let d = synthesize_echo(&x, &h).unwrap();
//!
//! let mut filter = FilterState::new(64).unwrap();
//! let params = AdaptParams::zap_l0(0.01, 1e-4, 10.0);
//! for (&xn, &dn) in x.iter().zip(&d) {
//!     filter.push_sample(xn).unwrap();
//!     let e = filter.error(dn);
//!     filter.update(e, &params);
//! }
//! # assert!(filter.weights().iter().zip(h.taps()).all(|(w, t)| (w - t).abs() < 0.2));
//! ```
//!
//! The runnable examples cover each capability end to end; the `zap-sim`
//! binary drives full scenarios from a config file.

pub mod adaptive;
pub mod error;
pub mod harness;
pub mod seed;
pub mod signalgen;
pub mod sparsity;
pub mod stepsize;

pub use error::{Error, Result};
