//! Watch kappa(n) evolve under the three step-size controllers while the
//! same l1-ZAP filter identifies a sparse channel that changes midway.
//!
//! The decay-on-convergence rule cuts kappa and freezes; the
//! sparseness-gradient rules inflate kappa whenever the weights move (initial
//! convergence, then again right after the path switch) and let it die out at
//! steady state.
//!
//! ```sh
//! cargo run -p zap-lms --example variable_step_size
//! ```

use zap_lms::adaptive::{AdaptParams, FilterState};
use zap_lms::harness::{misalignment_db, MisalignConvention};
use zap_lms::signalgen::{add_noise_at_snr, sparse_impulse, synthesize_echo, white_noise};
use zap_lms::sparsity::Measure;
use zap_lms::stepsize::{
    Controller, FixedStep, SparsenessFunctional, SparsenessVss, VssParams, YouVss,
};

fn main() {
    let len = 256;
    let n_samples = 8000;
    let switch_at = 4000;
    let mu = 0.0016;
    let seed = 3;

    let h_first = sparse_impulse(len, 4, seed).unwrap();
    let h_second = sparse_impulse(len, 4, seed + 10).unwrap();
    let input = white_noise(n_samples, seed + 1).unwrap();
    let mut echo = synthesize_echo(&input, &h_first).unwrap();
    let tail = synthesize_echo(&input, &h_second).unwrap();
    echo[switch_at..].copy_from_slice(&tail[switch_at..]);
    let desired = add_noise_at_snr(&echo, 30.0, seed + 2).unwrap();

    let vss = VssParams {
        kappa0: 5e-5,
        gamma: 1.2e-5,
        lambda: 0.002,
        alpha: 0.05,
        eta: 0.5,
        kappa_min: 1.5e-4,
        ..VssParams::default()
    };
    let mut controllers: Vec<(&str, Controller)> = vec![
        ("fixed", Controller::Fixed(FixedStep::new(5e-5).unwrap())),
        (
            "decay-on-conv",
            Controller::You(
                YouVss::new(&VssParams {
                    kappa0: 5e-4,
                    ..vss
                })
                .unwrap(),
            ),
        ),
        (
            "penalty-sum",
            Controller::Sparseness(
                SparsenessVss::new(SparsenessFunctional::PenaltySum(Measure::Abs), &vss).unwrap(),
            ),
        ),
        (
            "hoyer",
            Controller::Sparseness(
                SparsenessVss::new(
                    SparsenessFunctional::Hoyer,
                    &VssParams { gamma: 2e-4, ..vss },
                )
                .unwrap(),
            ),
        ),
    ];

    let mut filters: Vec<FilterState> = controllers
        .iter()
        .map(|_| FilterState::new(len).unwrap())
        .collect();

    println!("l1-ZAP under four kappa controllers; path switch at sample {switch_at}");
    println!(
        "{:>7} | {:>10} {:>10} | {:>10} {:>10} | {:>10} {:>10} | {:>10} {:>10}",
        "sample", "fixed", "dB", "decay", "dB", "pen-sum", "dB", "hoyer", "dB"
    );
    for n in 0..n_samples {
        let h_now = if n < switch_at { &h_first } else { &h_second };
        let mut row = Vec::new();
        for ((_, controller), filter) in controllers.iter_mut().zip(&mut filters) {
            filter.push_sample(input[n]).unwrap();
            let e = filter.error(desired[n]);
            let kappa = controller.next_kappa(e, filter.weights()).unwrap();
            filter.update(e, &AdaptParams::zap_l1(mu, kappa));
            let db = misalignment_db(
                h_now,
                filter.weights(),
                MisalignConvention::SquaredNormRatio,
            )
            .unwrap();
            row.push((kappa, db));
        }
        if (n + 1) % 800 == 0 || n + 1 == switch_at + 100 {
            print!("{:>7}", n + 1);
            for (kappa, db) in row {
                print!(" | {kappa:>10.2e} {db:>10.2}");
            }
            println!();
        }
    }
}
