//! Scenario execution: signal synthesis, the per-sample adaptation loop, and
//! the echo-path switch.

use rayon::prelude::*;

use crate::adaptive::{AdaptParams, Attractor, FilterState};
use crate::error::{Error, Result};
use crate::seed::{run_seed, stream, stream_seed};
use crate::signalgen::{
    add_noise_at_snr, dispersive_impulse, sparse_impulse, synthesize_echo, white_noise,
    ImpulseResponse,
};
use crate::sparsity::Measure;
use crate::stepsize::{
    Controller, FixedStep, SparsenessFunctional, SparsenessVss, VssParams, YouVss,
};

use super::{misalignment_db, AlgorithmId, ExperimentConfig, Scenario, ScenarioResult, Trace};

/// An error magnitude past this is reported as divergence.
const DIVERGENCE_LIMIT: f64 = 1e100;

/// Runs every configured algorithm over every Monte-Carlo run.
///
/// All algorithms within a run see bit-identical input, noise, and channels,
/// so their traces form a paired comparison. Runs execute in parallel; the
/// result is canonically ordered by (run id, algorithm label) and is a pure
/// function of the configuration, so repeated calls give identical output.
pub fn run_scenario(cfg: &ExperimentConfig) -> Result<ScenarioResult> {
    cfg.validate()?;
    let per_run: Vec<Result<Vec<Trace>>> = (0..cfg.runs as u32)
        .into_par_iter()
        .map(|run_id| run_one(cfg, run_id))
        .collect();
    let mut traces = Vec::with_capacity(cfg.runs * cfg.algorithms.len());
    for run in per_run {
        traces.extend(run?);
    }
    traces.sort_by(|a, b| (a.run_id, a.algorithm.label()).cmp(&(b.run_id, b.algorithm.label())));
    Ok(ScenarioResult {
        traces,
        n_samples: cfg.n_samples,
        switch_at: cfg.switch_at,
    })
}

fn run_one(cfg: &ExperimentConfig, run_id: u32) -> Result<Vec<Trace>> {
    let rs = run_seed(cfg.seed, run_id);
    let input = white_noise(cfg.n_samples, stream_seed(rs, stream::INPUT))?;
    let h_first = sparse_impulse(
        cfg.filter_len,
        cfg.active_taps,
        stream_seed(rs, stream::CHANNEL_PRIMARY),
    )?;
    let h_second = match cfg.scenario {
        Scenario::SparseToSparse => sparse_impulse(
            cfg.filter_len,
            cfg.active_taps,
            stream_seed(rs, stream::CHANNEL_SWITCHED),
        )?,
        Scenario::SparseToDispersive => {
            dispersive_impulse(cfg.filter_len, stream_seed(rs, stream::CHANNEL_SWITCHED))?
        }
    };

    // The switched system's output: convolution with h_first up to the switch
    // sample, with h_second (over the shared input history) from there on.
    let mut echo = synthesize_echo(&input, &h_first)?;
    if cfg.switch_at < cfg.n_samples {
        let tail = synthesize_echo(&input, &h_second)?;
        echo[cfg.switch_at..].copy_from_slice(&tail[cfg.switch_at..]);
    }
    let desired = add_noise_at_snr(&echo, cfg.snr_db, stream_seed(rs, stream::NOISE))?;

    cfg.algorithms
        .iter()
        .map(|&alg| run_algorithm(cfg, alg, run_id, &input, &desired, &h_first, &h_second))
        .collect()
}

fn attractor_for(cfg: &ExperimentConfig, alg: AlgorithmId) -> Attractor {
    match alg {
        AlgorithmId::Lms => Attractor::None,
        AlgorithmId::ZapFixedL0
        | AlgorithmId::ZapYouL0
        | AlgorithmId::ZapVss1L0
        | AlgorithmId::ZapVss2L0 => Attractor::L0 { beta: cfg.beta },
        AlgorithmId::ZapFixedL1
        | AlgorithmId::ZapYouL1
        | AlgorithmId::ZapVss1L1
        | AlgorithmId::ZapVss2L1 => Attractor::L1,
    }
}

fn controller_for(cfg: &ExperimentConfig, alg: AlgorithmId) -> Result<Controller> {
    let vss_params = |gamma: f64| VssParams {
        lambda: cfg.lambda,
        alpha: cfg.alpha,
        gamma,
        kappa0: cfg.kappa0,
        eta: cfg.eta,
        kappa_min: cfg.kappa_min,
        conv_short: cfg.conv_short,
        conv_long: cfg.conv_long,
        conv_ratio: cfg.conv_ratio,
    };
    Ok(match alg {
        AlgorithmId::Lms => Controller::Fixed(FixedStep::new(0.0)?),
        AlgorithmId::ZapFixedL0 | AlgorithmId::ZapFixedL1 => {
            Controller::Fixed(FixedStep::new(cfg.kappa0)?)
        }
        AlgorithmId::ZapYouL0 | AlgorithmId::ZapYouL1 => {
            let mut params = vss_params(cfg.gamma_vss1);
            params.kappa0 = cfg.kappa0_you;
            Controller::You(YouVss::new(&params)?)
        }
        // The penalty-sum controller pairs each filter with the matching
        // measure: the plain l1 penalty for the l1 attractor, and the
        // exponential penalty (whose gradient is exactly the l0 attractor,
        // with sigma = beta) for the l0 attractor.
        AlgorithmId::ZapVss1L0 => Controller::Sparseness(SparsenessVss::new(
            SparsenessFunctional::PenaltySum(Measure::Exponential { sigma: cfg.beta }),
            &vss_params(cfg.gamma_vss1),
        )?),
        AlgorithmId::ZapVss1L1 => Controller::Sparseness(SparsenessVss::new(
            SparsenessFunctional::PenaltySum(Measure::Abs),
            &vss_params(cfg.gamma_vss1),
        )?),
        AlgorithmId::ZapVss2L0 | AlgorithmId::ZapVss2L1 => Controller::Sparseness(
            SparsenessVss::new(SparsenessFunctional::Hoyer, &vss_params(cfg.gamma_vss2))?,
        ),
    })
}

#[allow(clippy::too_many_arguments)]
fn run_algorithm(
    cfg: &ExperimentConfig,
    alg: AlgorithmId,
    run_id: u32,
    input: &[f64],
    desired: &[f64],
    h_first: &ImpulseResponse,
    h_second: &ImpulseResponse,
) -> Result<Trace> {
    let mut state = FilterState::new(cfg.filter_len)?;
    let mut controller = controller_for(cfg, alg)?;
    let base = AdaptParams {
        mu: cfg.mu,
        kappa: 0.0,
        attractor: attractor_for(cfg, alg),
    };
    base.validate()?;

    let mut misalign = Vec::with_capacity(cfg.n_samples);
    let mut kappa_trace = Vec::with_capacity(cfg.n_samples);
    for n in 0..cfg.n_samples {
        let h_now = if n < cfg.switch_at { h_first } else { h_second };
        state.push_sample(input[n])?;
        let e = state.error(desired[n]);
        if !e.is_finite() || e.abs() > DIVERGENCE_LIMIT {
            return Err(Error::Divergence {
                algorithm: alg.label().to_string(),
                run_id,
                sample: n,
            });
        }
        let kappa = controller.next_kappa(e, state.weights())?;
        state.update(e, &base.with_kappa(kappa));
        misalign.push(misalignment_db(
            h_now,
            state.weights(),
            cfg.misalign_convention,
        )?);
        kappa_trace.push(kappa);
    }
    Ok(Trace {
        run_id,
        algorithm: alg,
        misalign_db: misalign,
        kappa: kappa_trace,
    })
}
