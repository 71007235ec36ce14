//! Evaluate the six scalar sparseness penalties and the Hoyer measure.
//!
//! ```sh
//! cargo run -p zap-lms --example sparseness_measures
//! ```

use zap_lms::signalgen::{dispersive_impulse, sparse_impulse};
use zap_lms::sparsity::{hoyer_sparsity, Measure};

fn main() {
    let measures: [(&str, Measure); 6] = [
        ("abs", Measure::Abs),
        (
            "rational(s=1,p=0.5)",
            Measure::Rational { sigma: 1.0, p: 0.5 },
        ),
        ("exponential(s=3)", Measure::Exponential { sigma: 3.0 }),
        ("log-sum(s=3)", Measure::LogSum { sigma: 3.0 }),
        ("arctan(s=3)", Measure::Arctan { sigma: 3.0 }),
        (
            "saturated-quad(s=3)",
            Measure::SaturatedQuadratic { sigma: 3.0 },
        ),
    ];

    println!(
        "{:<20} {:>8} {:>8} {:>8} {:>8} {:>8}",
        "G(t)", "t=0", "0.1", "0.5", "1", "5"
    );
    for (name, m) in &measures {
        let row: Vec<String> = [0.0, 0.1, 0.5, 1.0, 5.0]
            .iter()
            .map(|&t| format!("{:>8.4}", m.penalty(t).unwrap()))
            .collect();
        println!("{name:<20} {}", row.join(" "));
    }

    // Summed over a weight vector, the saturating measures approximate the
    // count of significant taps while `abs` gives the l1 norm.
    let sparse = sparse_impulse(512, 8, 21).unwrap();
    let dense = dispersive_impulse(512, 22).unwrap();
    println!();
    println!(
        "{:<20} {:>14} {:>14}",
        "J(w) over 512 taps", "sparse(8)", "dispersive"
    );
    for (name, m) in &measures {
        println!(
            "{:<20} {:>14.3} {:>14.3}",
            name,
            m.penalty_sum(sparse.taps()).unwrap(),
            m.penalty_sum(dense.taps()).unwrap()
        );
    }
    println!(
        "{:<20} {:>14.3} {:>14.3}",
        "hoyer sparsity",
        hoyer_sparsity(sparse.taps()).unwrap(),
        hoyer_sparsity(dense.taps()).unwrap()
    );
}
