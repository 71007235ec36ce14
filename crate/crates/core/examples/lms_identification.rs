//! Identify a synthesized echo path with plain LMS, sample by sample.
//!
//! ```sh
//! cargo run -p zap-lms --example lms_identification
//! ```

use zap_lms::adaptive::FilterState;
use zap_lms::harness::{misalignment_db, MisalignConvention};
use zap_lms::signalgen::{add_noise_at_snr, sparse_impulse, synthesize_echo, white_noise};

fn main() {
    let len = 128;
    let n_samples = 6000;
    let mu = 0.004;
    let seed = 11;

    let channel = sparse_impulse(len, 4, seed).unwrap();
    let input = white_noise(n_samples, seed + 1).unwrap();
    let echo = synthesize_echo(&input, &channel).unwrap();
    let desired = add_noise_at_snr(&echo, 30.0, seed + 2).unwrap();

    let mut filter = FilterState::new(len).unwrap();
    println!("plain LMS, L = {len}, mu = {mu}, SNR = 30 dB");
    println!("{:>8} {:>14}", "sample", "misalign (dB)");
    for n in 0..n_samples {
        filter.push_sample(input[n]).unwrap();
        let e = filter.error(desired[n]);
        filter.lms_update(e, mu);
        if (n + 1) % 500 == 0 {
            let m = misalignment_db(
                &channel,
                filter.weights(),
                MisalignConvention::SquaredNormRatio,
            )
            .unwrap();
            println!("{:>8} {:>14.2}", n + 1, m);
        }
    }

    let final_db = misalignment_db(
        &channel,
        filter.weights(),
        MisalignConvention::SquaredNormRatio,
    )
    .unwrap();
    println!("final misalignment {final_db:.2} dB");
}
