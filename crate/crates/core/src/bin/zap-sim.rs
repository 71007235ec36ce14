//! Thin command-line front end: runs a configured scenario and writes the
//! CSV outputs, or lists the available algorithm labels.
//!
//! Exit codes: 0 on success, 2 when an algorithm diverges, 1 for config and
//! I/O errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use zap_lms::harness::{emit_csv, run_scenario, AlgorithmId, ExperimentConfig};
use zap_lms::Error;

#[derive(Parser)]
#[command(
    name = "zap-sim",
    version,
    about = "Sparse-system-identification simulations with ZAP adaptive filters"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the scenario described by a config file.
    Run {
        /// Path to a `key = value` config file.
        #[arg(long)]
        config: PathBuf,
        /// Override the config's output directory.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Override the config's base seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Override the config's Monte-Carlo run count.
        #[arg(long)]
        runs: Option<usize>,
    },
    /// List the algorithm labels accepted in config files.
    ListAlgorithms,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::Divergence { .. } => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn execute(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Run {
            config,
            out,
            seed,
            runs,
        } => {
            let mut cfg = ExperimentConfig::from_file(&config)?;
            if let Some(out) = out {
                cfg.out_dir = out;
            }
            if let Some(seed) = seed {
                cfg.seed = seed;
            }
            if let Some(runs) = runs {
                cfg.runs = runs;
            }
            cfg.validate()?;
            let result = run_scenario(&cfg)?;
            emit_csv(&result, &cfg.out_dir)?;
            println!(
                "wrote {} trace rows ({} algorithms x {} runs x {} samples) to {}",
                result.traces.len() * cfg.n_samples,
                cfg.algorithms.len(),
                cfg.runs,
                cfg.n_samples,
                cfg.out_dir.display()
            );
            Ok(())
        }
        Command::ListAlgorithms => {
            for alg in AlgorithmId::ALL {
                println!("{alg}");
            }
            Ok(())
        }
    }
}
