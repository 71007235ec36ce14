//! Generate the two kinds of test channels and score their sparsity.
//!
//! ```sh
//! cargo run -p zap-lms --example synthesize_channels
//! ```

use zap_lms::signalgen::{dispersive_impulse, sparse_impulse};
use zap_lms::sparsity::hoyer_sparsity;

fn main() {
    let len = 512;
    let seed = 7;

    let sparse = sparse_impulse(len, 8, seed).unwrap();
    let dispersive = dispersive_impulse(len, seed + 1).unwrap();

    for (name, channel) in [("sparse (8 of 512)", &sparse), ("dispersive", &dispersive)] {
        let taps = channel.taps();
        let nonzero = taps.iter().filter(|t| **t != 0.0).count();
        let energy: f64 = taps.iter().map(|t| t * t).sum();
        let peak = taps.iter().cloned().fold(0.0, |m: f64, t| m.max(t.abs()));
        let eps = hoyer_sparsity(taps).unwrap();
        println!("{name}");
        println!("  nonzero taps   {nonzero}");
        println!("  energy         {energy:.3}");
        println!("  peak |tap|     {peak:.3}");
        println!("  hoyer sparsity {eps:.4}");
    }

    println!();
    println!("positions of the sparse channel's active taps:");
    let active: Vec<usize> = sparse
        .taps()
        .iter()
        .enumerate()
        .filter(|(_, t)| **t != 0.0)
        .map(|(i, _)| i)
        .collect();
    println!("  {active:?}");
}
