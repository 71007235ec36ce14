//! Experiment configuration, scenario execution, the misalignment metric,
//! Monte-Carlo averaging, and CSV output.
//!
//! A scenario identifies a synthesized echo path from white-noise input at a
//! configured SNR, switching to a second path partway through the run to probe
//! tracking. Every algorithm in a run sees bit-identical input, noise, and
//! channel draws, so per-sample traces are directly comparable, and the whole
//! experiment is a pure function of its configuration and base seed.

mod config;
mod csv;
mod run;

pub use config::{ExperimentConfig, MisalignConvention, Scenario};
pub use csv::emit_csv;
pub use run::run_scenario;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::signalgen::ImpulseResponse;

/// The algorithms the harness can run, as labeled in configs and CSV output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AlgorithmId {
    /// Plain LMS baseline.
    Lms,
    /// l0-ZAP with a constant attractor step-size.
    ZapFixedL0,
    /// l1-ZAP with a constant attractor step-size.
    ZapFixedL1,
    /// l0-ZAP under the decay-on-convergence step-size rule.
    ZapYouL0,
    /// l1-ZAP under the decay-on-convergence step-size rule.
    ZapYouL1,
    /// l0-ZAP under the sparseness-gradient rule, penalty-sum functional.
    ZapVss1L0,
    /// l1-ZAP under the sparseness-gradient rule, penalty-sum functional.
    ZapVss1L1,
    /// l0-ZAP under the sparseness-gradient rule, Hoyer functional.
    ZapVss2L0,
    /// l1-ZAP under the sparseness-gradient rule, Hoyer functional.
    ZapVss2L1,
}

impl AlgorithmId {
    pub const ALL: [AlgorithmId; 9] = [
        AlgorithmId::Lms,
        AlgorithmId::ZapFixedL0,
        AlgorithmId::ZapFixedL1,
        AlgorithmId::ZapYouL0,
        AlgorithmId::ZapYouL1,
        AlgorithmId::ZapVss1L0,
        AlgorithmId::ZapVss1L1,
        AlgorithmId::ZapVss2L0,
        AlgorithmId::ZapVss2L1,
    ];

    /// Stable label used in config files and CSV rows.
    pub fn label(&self) -> &'static str {
        match self {
            AlgorithmId::Lms => "lms",
            AlgorithmId::ZapFixedL0 => "zap_fixed_l0",
            AlgorithmId::ZapFixedL1 => "zap_fixed_l1",
            AlgorithmId::ZapYouL0 => "zap_you_l0",
            AlgorithmId::ZapYouL1 => "zap_you_l1",
            AlgorithmId::ZapVss1L0 => "zap_vss1_l0",
            AlgorithmId::ZapVss1L1 => "zap_vss1_l1",
            AlgorithmId::ZapVss2L0 => "zap_vss2_l0",
            AlgorithmId::ZapVss2L1 => "zap_vss2_l1",
        }
    }
}

impl fmt::Display for AlgorithmId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for AlgorithmId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AlgorithmId::ALL
            .iter()
            .find(|a| a.label() == s)
            .copied()
            .ok_or_else(|| Error::Config(format!("unknown algorithm `{s}`")))
    }
}

/// One algorithm's trajectory through one Monte-Carlo run.
#[derive(Debug, Clone, PartialEq)]
pub struct Trace {
    pub run_id: u32,
    pub algorithm: AlgorithmId,
    /// Misalignment in dB at every sample, recorded after the update.
    pub misalign_db: Vec<f64>,
    /// The attractor step-size used at every sample.
    pub kappa: Vec<f64>,
}

/// One output row: one algorithm at one sample of one run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceRecord {
    pub run_id: u32,
    pub algorithm: AlgorithmId,
    pub sample: usize,
    pub misalign_db: f64,
    pub kappa: f64,
}

impl Trace {
    /// Rows of this trace in sample order.
    pub fn records(&self) -> impl Iterator<Item = TraceRecord> + '_ {
        self.misalign_db.iter().zip(&self.kappa).enumerate().map(
            move |(sample, (&misalign_db, &kappa))| TraceRecord {
                run_id: self.run_id,
                algorithm: self.algorithm,
                sample,
                misalign_db,
                kappa,
            },
        )
    }
}

/// Everything produced by [`run_scenario`], with traces in canonical order
/// (run id, then algorithm label).
#[derive(Debug, Clone)]
pub struct ScenarioResult {
    pub traces: Vec<Trace>,
    pub n_samples: usize,
    pub switch_at: usize,
}

/// Per-sample mean across runs for one algorithm.
#[derive(Debug, Clone, PartialEq)]
pub struct AveragedTrace {
    pub algorithm: AlgorithmId,
    pub misalign_db: Vec<f64>,
    pub kappa: Vec<f64>,
}

/// Averages traces across runs, per algorithm and per sample. Output is
/// sorted by algorithm label.
pub fn aggregate_runs(traces: &[Trace]) -> Result<Vec<AveragedTrace>> {
    let mut groups: BTreeMap<&'static str, (AlgorithmId, Vec<&Trace>)> = BTreeMap::new();
    for trace in traces {
        groups
            .entry(trace.algorithm.label())
            .or_insert_with(|| (trace.algorithm, Vec::new()))
            .1
            .push(trace);
    }
    let mut averaged = Vec::with_capacity(groups.len());
    for (label, (algorithm, group)) in groups {
        let len = group[0].misalign_db.len();
        if group
            .iter()
            .any(|t| t.misalign_db.len() != len || t.kappa.len() != len)
        {
            return Err(Error::param(format!(
                "aggregate_runs: traces for `{label}` have mismatched lengths"
            )));
        }
        let scale = 1.0 / group.len() as f64;
        let mut misalign_db = vec![0.0; len];
        let mut kappa = vec![0.0; len];
        for trace in &group {
            for (acc, &v) in misalign_db.iter_mut().zip(&trace.misalign_db) {
                *acc += v;
            }
            for (acc, &v) in kappa.iter_mut().zip(&trace.kappa) {
                *acc += v;
            }
        }
        for v in &mut misalign_db {
            *v *= scale;
        }
        for v in &mut kappa {
            *v *= scale;
        }
        averaged.push(AveragedTrace {
            algorithm,
            misalign_db,
            kappa,
        });
    }
    Ok(averaged)
}

/// Normalized misalignment between the true response and the adaptive
/// weights, in dB, clamped below at -120.
///
/// [`MisalignConvention::NormRatio`] evaluates `10 log10(||h - w|| / ||h||)`;
/// [`MisalignConvention::SquaredNormRatio`] evaluates the conventional
/// power-ratio form `10 log10(||h - w||^2 / ||h||^2)`, i.e. twice the former.
pub fn misalignment_db(
    h: &ImpulseResponse,
    w: &[f64],
    convention: MisalignConvention,
) -> Result<f64> {
    let taps = h.taps();
    if taps.len() != w.len() {
        return Err(Error::param(format!(
            "misalignment_db: length mismatch ({} taps vs {} weights)",
            taps.len(),
            w.len()
        )));
    }
    let h_power: f64 = taps.iter().map(|&t| t * t).sum();
    if h_power == 0.0 {
        return Err(Error::param(
            "misalignment_db: all-zero impulse response, metric undefined",
        ));
    }
    let err_power: f64 = taps
        .iter()
        .zip(w)
        .map(|(&t, &wi)| (t - wi) * (t - wi))
        .sum();
    let db = match convention {
        MisalignConvention::NormRatio => 10.0 * (err_power.sqrt() / h_power.sqrt()).log10(),
        MisalignConvention::SquaredNormRatio => 10.0 * (err_power / h_power).log10(),
    };
    Ok(db.max(-120.0))
}

/// The two steady-state windows of a switched run: everything before the
/// switch and everything from the switch on. Empty segments are skipped.
pub(crate) fn segments(
    n_samples: usize,
    switch_at: usize,
) -> Vec<(&'static str, std::ops::Range<usize>)> {
    let mut out = Vec::new();
    if switch_at > 0 {
        out.push(("pre_switch", 0..switch_at));
    }
    if switch_at < n_samples {
        out.push(("post_switch", switch_at..n_samples));
    }
    out
}

/// Mean over the final 10% (at least one sample) of a slice range.
pub(crate) fn steady_state_mean(values: &[f64], range: std::ops::Range<usize>) -> f64 {
    let len = range.end - range.start;
    let tail = ((len as f64 * 0.10).ceil() as usize).clamp(1, len);
    let window = &values[range.end - tail..range.end];
    window.iter().sum::<f64>() / window.len() as f64
}
