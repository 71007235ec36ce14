//! Run both shipped reference configs end to end and write their CSV traces,
//! equivalent to `zap-sim run --config paper.cfg` followed by
//! `zap-sim run --config paper_dispersive.cfg`.
//!
//! ```sh
//! cargo run -p zap-lms --example reference_protocol
//! ```

use std::path::Path;

use zap_lms::harness::{aggregate_runs, emit_csv, run_scenario, ExperimentConfig};

fn main() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../..");
    for name in ["paper.cfg", "paper_dispersive.cfg"] {
        let cfg = ExperimentConfig::from_file(&root.join(name)).expect("shipped config");
        println!(
            "{name}: {} / L = {}, {} samples, switch at {}, {} runs",
            cfg.scenario, cfg.filter_len, cfg.n_samples, cfg.switch_at, cfg.runs
        );

        let result = run_scenario(&cfg).expect("scenario");
        emit_csv(&result, &cfg.out_dir).expect("csv output");

        let averaged = aggregate_runs(&result.traces).expect("aggregate");
        let tail = cfg.n_samples / 20;
        println!(
            "  {:<14} {:>12} {:>12}",
            "algorithm", "pre steady", "post steady"
        );
        for avg in &averaged {
            let steady =
                |end: usize| avg.misalign_db[end - tail..end].iter().sum::<f64>() / tail as f64;
            println!(
                "  {:<14} {:>12.2} {:>12.2}",
                avg.algorithm.label(),
                steady(cfg.switch_at),
                steady(cfg.n_samples)
            );
        }
        println!(
            "  traces.csv and summary.csv written to {}\n",
            cfg.out_dir.display()
        );
    }
}
