//! CSV output: the long-format per-sample trace file and the steady-state
//! summary.

use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::Path;

use crate::error::{Error, Result};

use super::{aggregate_runs, segments, steady_state_mean, ScenarioResult};

/// Writes `traces.csv` and `summary.csv` into `out_dir` (created if needed).
///
/// `traces.csv` holds one row per (run, algorithm, sample):
/// `run_id,algorithm,sample,misalign_db,kappa`. `summary.csv` holds one row
/// per algorithm and segment with the steady-state misalignment and kappa,
/// each the mean over the final 10% of the segment of the run-averaged
/// trace. Lines end in LF and floats carry 9 significant digits, so output
/// bytes are a pure function of the scenario result.
pub fn emit_csv(result: &ScenarioResult, out_dir: &Path) -> Result<()> {
    fs::create_dir_all(out_dir).map_err(|e| Error::io(out_dir, e))?;

    let traces_path = out_dir.join("traces.csv");
    let file = File::create(&traces_path).map_err(|e| Error::io(&traces_path, e))?;
    let mut out = BufWriter::new(file);
    let emit = |out: &mut BufWriter<File>| -> std::io::Result<()> {
        out.write_all(b"run_id,algorithm,sample,misalign_db,kappa\n")?;
        for trace in &result.traces {
            for record in trace.records() {
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    record.run_id,
                    record.algorithm,
                    record.sample,
                    fmt9(record.misalign_db),
                    fmt9(record.kappa)
                )?;
            }
        }
        out.flush()
    };
    emit(&mut out).map_err(|e| Error::io(&traces_path, e))?;

    let summary_path = out_dir.join("summary.csv");
    let file = File::create(&summary_path).map_err(|e| Error::io(&summary_path, e))?;
    let mut out = BufWriter::new(file);
    let averaged = aggregate_runs(&result.traces)?;
    let emit = |out: &mut BufWriter<File>| -> std::io::Result<()> {
        out.write_all(b"algorithm,segment,steady_misalign_db,steady_kappa\n")?;
        for avg in &averaged {
            for (segment, range) in segments(result.n_samples, result.switch_at) {
                writeln!(
                    out,
                    "{},{},{},{}",
                    avg.algorithm,
                    segment,
                    fmt9(steady_state_mean(&avg.misalign_db, range.clone())),
                    fmt9(steady_state_mean(&avg.kappa, range))
                )?;
            }
        }
        out.flush()
    };
    emit(&mut out).map_err(|e| Error::io(&summary_path, e))?;
    Ok(())
}

/// 9 significant digits, locale-free.
fn fmt9(v: f64) -> String {
    format!("{v:.8e}")
}
