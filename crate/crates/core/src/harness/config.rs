//! Experiment configuration and its flat `key = value` file format.
//!
//! Files are plain text: one `key = value` pair per line, `#` starts a
//! comment, blank lines are ignored. Keys match the [`ExperimentConfig`]
//! field names exactly and unknown keys are errors. Any key left out keeps
//! its tuned default.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::error::{Error, Result};

use super::AlgorithmId;

/// Which echo-path change a scenario applies at the switch sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scenario {
    /// Sparse channel replaced by an independent sparse channel.
    SparseToSparse,
    /// Sparse channel replaced by a fully dispersive channel.
    SparseToDispersive,
}

impl Scenario {
    pub fn label(&self) -> &'static str {
        match self {
            Scenario::SparseToSparse => "sparse_switch_sparse",
            Scenario::SparseToDispersive => "sparse_switch_dispersive",
        }
    }
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Scenario {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sparse_switch_sparse" => Ok(Scenario::SparseToSparse),
            "sparse_switch_dispersive" => Ok(Scenario::SparseToDispersive),
            other => Err(Error::Config(format!("unknown scenario `{other}`"))),
        }
    }
}

/// dB convention for the misalignment metric.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MisalignConvention {
    /// `10 log10(||h - w|| / ||h||)`, the plain norm-ratio form.
    #[default]
    NormRatio,
    /// `10 log10(||h - w||^2 / ||h||^2)`, the conventional power-ratio form
    /// (twice the norm-ratio value).
    SquaredNormRatio,
}

impl MisalignConvention {
    pub fn label(&self) -> &'static str {
        match self {
            MisalignConvention::NormRatio => "paper",
            MisalignConvention::SquaredNormRatio => "squared",
        }
    }
}

impl fmt::Display for MisalignConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for MisalignConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper" => Ok(MisalignConvention::NormRatio),
            "squared" => Ok(MisalignConvention::SquaredNormRatio),
            other => Err(Error::Config(format!(
                "unknown misalign_convention `{other}` (expected `paper` or `squared`)"
            ))),
        }
    }
}

/// Full description of one simulation scenario.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    /// Adaptive filter and channel length L.
    pub filter_len: usize,
    /// Total samples per run.
    pub n_samples: usize,
    /// Echo-to-noise ratio in dB; `inf` disables the noise.
    pub snr_db: f64,
    /// LMS step-size shared by every algorithm.
    pub mu: f64,
    /// Algorithms to simulate, every one driven by the same signals.
    pub algorithms: Vec<AlgorithmId>,
    /// Attractor step-size of the fixed-kappa ZAPs, and kappa(0) of the
    /// sparseness-gradient controllers.
    pub kappa0: f64,
    /// Shape constant of the l0 attractor (and sigma of the penalty-sum
    /// functional used by vss1 on the l0 filters).
    pub beta: f64,
    /// Initial step-size of the decay-on-convergence controller.
    pub kappa0_you: f64,
    /// Decay factor of the decay-on-convergence controller, in (0, 1).
    pub eta: f64,
    /// Freeze floor of the decay-on-convergence controller.
    pub kappa_min: f64,
    /// Short window of the convergence detector, in samples.
    pub conv_short: usize,
    /// Long window of the convergence detector; also its check interval.
    pub conv_long: usize,
    /// Short/long error-power ratio at or below which the detector fires.
    pub conv_ratio: f64,
    /// Forgetting factor of the running sparseness average, in (0, 1).
    pub lambda: f64,
    /// Smoothing factor of the kappa recursion, in (0, 1).
    pub alpha: f64,
    /// Correction factor of the penalty-sum (vss1) controllers.
    pub gamma_vss1: f64,
    /// Correction factor of the Hoyer (vss2) controllers.
    pub gamma_vss2: f64,
    /// Which echo-path change happens at `switch_at`.
    pub scenario: Scenario,
    /// Sample index at which the echo path is replaced.
    pub switch_at: usize,
    /// Monte-Carlo run count.
    pub runs: usize,
    /// Base seed; run r derives its own seeds from it.
    pub seed: u64,
    /// Where `traces.csv` and `summary.csv` are written.
    pub out_dir: PathBuf,
    /// Nonzero taps of each synthesized sparse channel.
    pub active_taps: usize,
    /// dB convention used for recorded misalignment.
    pub misalign_convention: MisalignConvention,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            filter_len: 512,
            n_samples: 10_000,
            snr_db: 30.0,
            mu: 8.0e-4,
            algorithms: AlgorithmId::ALL.to_vec(),
            kappa0: 2.5e-5,
            beta: 3.0,
            kappa0_you: 2.4e-4,
            eta: 0.5,
            kappa_min: 7.0e-5,
            conv_short: 64,
            conv_long: 1024,
            conv_ratio: 0.98,
            lambda: 0.002,
            alpha: 0.05,
            gamma_vss1: 6.0e-6,
            gamma_vss2: 1.0e-4,
            scenario: Scenario::SparseToSparse,
            switch_at: 5000,
            runs: 10,
            seed: 1,
            out_dir: PathBuf::from("out"),
            active_taps: 8,
            misalign_convention: MisalignConvention::NormRatio,
        }
    }
}

impl ExperimentConfig {
    /// Reads and parses a config file (defaults filled in for missing keys).
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text).map_err(|e| Error::Config(format!("{}: {e}", path.display())))
    }

    /// Parses config text. Validation is separate; call [`Self::validate`]
    /// once any command-line overrides are applied.
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = Self::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let lineno = idx + 1;
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Config(format!(
                    "line {lineno}: expected `key = value`, got `{line}`"
                ))
            })?;
            cfg.set(key.trim(), value.trim())
                .map_err(|e| Error::Config(format!("line {lineno}: {e}")))?;
        }
        Ok(cfg)
    }

    fn set(&mut self, key: &str, value: &str) -> Result<()> {
        match key {
            "filter_len" => self.filter_len = parse_num(key, value)?,
            "n_samples" => self.n_samples = parse_num(key, value)?,
            "snr_db" => self.snr_db = parse_num(key, value)?,
            "mu" => self.mu = parse_num(key, value)?,
            "algorithms" => {
                self.algorithms = value
                    .split(',')
                    .map(|s| s.trim().parse::<AlgorithmId>())
                    .collect::<Result<Vec<_>>>()?;
            }
            "kappa0" => self.kappa0 = parse_num(key, value)?,
            "beta" => self.beta = parse_num(key, value)?,
            "kappa0_you" => self.kappa0_you = parse_num(key, value)?,
            "eta" => self.eta = parse_num(key, value)?,
            "kappa_min" => self.kappa_min = parse_num(key, value)?,
            "conv_short" => self.conv_short = parse_num(key, value)?,
            "conv_long" => self.conv_long = parse_num(key, value)?,
            "conv_ratio" => self.conv_ratio = parse_num(key, value)?,
            "lambda" => self.lambda = parse_num(key, value)?,
            "alpha" => self.alpha = parse_num(key, value)?,
            "gamma_vss1" => self.gamma_vss1 = parse_num(key, value)?,
            "gamma_vss2" => self.gamma_vss2 = parse_num(key, value)?,
            "scenario" => self.scenario = value.parse()?,
            "switch_at" => self.switch_at = parse_num(key, value)?,
            "runs" => self.runs = parse_num(key, value)?,
            "seed" => self.seed = parse_num(key, value)?,
            "out_dir" => self.out_dir = PathBuf::from(value),
            "active_taps" => self.active_taps = parse_num(key, value)?,
            "misalign_convention" => self.misalign_convention = value.parse()?,
            other => return Err(Error::Config(format!("unknown key `{other}`"))),
        }
        Ok(())
    }

    /// Checks every invariant the harness relies on.
    pub fn validate(&self) -> Result<()> {
        fn config(cond: bool, msg: impl Into<String>) -> Result<()> {
            if cond {
                Ok(())
            } else {
                Err(Error::Config(msg.into()))
            }
        }
        config(self.filter_len > 1, "filter_len must be at least 2")?;
        config(self.n_samples >= 1, "n_samples must be at least 1")?;
        config(
            self.switch_at < self.n_samples,
            format!(
                "switch_at ({}) must be below n_samples ({})",
                self.switch_at, self.n_samples
            ),
        )?;
        config(self.runs >= 1, "runs must be at least 1")?;
        config(!self.algorithms.is_empty(), "algorithms must not be empty")?;
        config(
            self.mu.is_finite() && self.mu > 0.0,
            format!("mu must be positive, got {}", self.mu),
        )?;
        config(
            !self.snr_db.is_nan() && self.snr_db != f64::NEG_INFINITY,
            "snr_db must be a number or `inf`",
        )?;
        config(
            self.kappa0.is_finite() && self.kappa0 >= 0.0,
            format!("kappa0 must be nonnegative, got {}", self.kappa0),
        )?;
        config(
            self.beta.is_finite() && self.beta > 0.0,
            format!("beta must be positive, got {}", self.beta),
        )?;
        config(
            self.kappa0_you.is_finite() && self.kappa0_you >= 0.0,
            format!("kappa0_you must be nonnegative, got {}", self.kappa0_you),
        )?;
        config(
            self.eta.is_finite() && self.eta > 0.0 && self.eta < 1.0,
            format!("eta must lie in (0, 1), got {}", self.eta),
        )?;
        config(
            self.kappa_min.is_finite() && self.kappa_min > 0.0,
            format!("kappa_min must be positive, got {}", self.kappa_min),
        )?;
        config(
            self.conv_short >= 1 && self.conv_long >= self.conv_short,
            format!(
                "detector windows must satisfy 1 <= conv_short <= conv_long, got {} and {}",
                self.conv_short, self.conv_long
            ),
        )?;
        config(
            self.conv_ratio.is_finite() && self.conv_ratio > 0.0,
            format!("conv_ratio must be positive, got {}", self.conv_ratio),
        )?;
        config(
            self.lambda.is_finite() && self.lambda > 0.0 && self.lambda < 1.0,
            format!("lambda must lie in (0, 1), got {}", self.lambda),
        )?;
        config(
            self.alpha.is_finite() && self.alpha > 0.0 && self.alpha < 1.0,
            format!("alpha must lie in (0, 1), got {}", self.alpha),
        )?;
        config(
            self.gamma_vss1.is_finite() && self.gamma_vss1 > 0.0,
            format!("gamma_vss1 must be positive, got {}", self.gamma_vss1),
        )?;
        config(
            self.gamma_vss2.is_finite() && self.gamma_vss2 > 0.0,
            format!("gamma_vss2 must be positive, got {}", self.gamma_vss2),
        )?;
        config(
            self.active_taps >= 1 && self.active_taps <= self.filter_len,
            format!(
                "active_taps must lie in 1..={}, got {}",
                self.filter_len, self.active_taps
            ),
        )?;
        Ok(())
    }
}

fn parse_num<T: FromStr>(key: &str, value: &str) -> Result<T> {
    value
        .parse()
        .map_err(|_| Error::Config(format!("key `{key}`: cannot parse `{value}`")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_overrides_defaults() {
        let cfg = ExperimentConfig::parse(
            "filter_len = 64\n\
             # a comment line\n\
             mu = 0.002   # trailing comment\n\
             snr_db = inf\n\
             algorithms = lms, zap_fixed_l1\n\
             scenario = sparse_switch_dispersive\n\
             misalign_convention = squared\n\
             out_dir = /tmp/zap\n",
        )
        .unwrap();
        assert_eq!(cfg.filter_len, 64);
        assert_eq!(cfg.mu, 0.002);
        assert_eq!(cfg.snr_db, f64::INFINITY);
        assert_eq!(
            cfg.algorithms,
            vec![AlgorithmId::Lms, AlgorithmId::ZapFixedL1]
        );
        assert_eq!(cfg.scenario, Scenario::SparseToDispersive);
        assert_eq!(
            cfg.misalign_convention,
            MisalignConvention::SquaredNormRatio
        );
        assert_eq!(cfg.out_dir, PathBuf::from("/tmp/zap"));
        // Untouched keys keep their defaults.
        assert_eq!(cfg.switch_at, ExperimentConfig::default().switch_at);
    }

    #[test]
    fn unknown_keys_are_errors() {
        let err = ExperimentConfig::parse("step_size = 0.1\n").unwrap_err();
        assert!(err.to_string().contains("unknown key"), "{err}");
    }

    #[test]
    fn malformed_lines_are_errors() {
        assert!(ExperimentConfig::parse("just some words\n").is_err());
        assert!(ExperimentConfig::parse("mu = not_a_number\n").is_err());
        assert!(ExperimentConfig::parse("algorithms = lms, bogus\n").is_err());
        assert!(ExperimentConfig::parse("scenario = what\n").is_err());
        assert!(ExperimentConfig::parse("misalign_convention = cubed\n").is_err());
    }

    #[test]
    fn default_config_validates() {
        ExperimentConfig::default().validate().unwrap();
    }

    #[test]
    fn validation_catches_bad_ranges() {
        let base = ExperimentConfig::default();
        let bad = [
            ExperimentConfig {
                switch_at: base.n_samples,
                ..base.clone()
            },
            ExperimentConfig {
                runs: 0,
                ..base.clone()
            },
            ExperimentConfig {
                filter_len: 1,
                ..base.clone()
            },
            ExperimentConfig {
                algorithms: Vec::new(),
                ..base.clone()
            },
            ExperimentConfig {
                active_taps: base.filter_len + 1,
                ..base.clone()
            },
            ExperimentConfig {
                lambda: 1.0,
                ..base.clone()
            },
            ExperimentConfig {
                snr_db: f64::NAN,
                ..base.clone()
            },
        ];
        for cfg in bad {
            assert!(cfg.validate().is_err(), "{cfg:?} should not validate");
        }
    }

    #[test]
    fn scenario_labels_round_trip() {
        for s in [Scenario::SparseToSparse, Scenario::SparseToDispersive] {
            assert_eq!(s.label().parse::<Scenario>().unwrap(), s);
        }
    }
}
