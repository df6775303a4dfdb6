//! Command-line front end for the `grover-ent` analyses.
//!
//! Every command produces a table of flat records rendered as CSV or JSON.
//! Rows are computed in parallel and emitted in order by a single writer,
//! so output does not depend on the thread count.

pub mod commands;
pub mod config;
pub mod error;
pub mod output;
pub mod records;

use grover_ent::pseudopure::DEFAULT_VALIDITY_THRESHOLD;

pub use config::{Cli, Command, Format, RunConfig};
pub use error::CliError;

/// Rendered report plus diagnostics meant for standard error.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub body: String,
    pub notes: Vec<String>,
}

fn validity_note(epsilon: f64) -> Option<String> {
    (epsilon > DEFAULT_VALIDITY_THRESHOLD).then(|| {
        format!(
            "warning: epsilon = {epsilon} exceeds {DEFAULT_VALIDITY_THRESHOLD}, above the purity of current pseudo-pure hardware"
        )
    })
}

fn compute(config: &RunConfig) -> Result<Report, CliError> {
    let format = config.format;
    Ok(match config.command {
        Command::Table1 { min, max, cost } => Report {
            body: output::render(&commands::cmd_table1(min, max, cost)?, format)?,
            notes: Vec::new(),
        },
        Command::Trace {
            qubits,
            target,
            epsilon,
        } => Report {
            body: output::render(&commands::cmd_trace(qubits, target, epsilon)?, format)?,
            notes: validity_note(epsilon).into_iter().collect(),
        },
        Command::Bound { qubits, target } => Report {
            body: output::render(&commands::cmd_bound(qubits, target)?, format)?,
            notes: Vec::new(),
        },
        Command::Scan { min, max } => {
            let records = commands::cmd_scan(min, max)?;
            Report {
                body: output::render(&records, format)?,
                notes: vec![commands::scan_summary(&records)],
            }
        }
        Command::Fluctuations { qubits, epsilon } => Report {
            body: output::render(&[commands::cmd_fluctuations(qubits, epsilon)?], format)?,
            notes: validity_note(epsilon).into_iter().collect(),
        },
    })
}

/// Runs the configured command, on a dedicated pool when `threads` is set.
pub fn execute(config: &RunConfig) -> Result<Report, CliError> {
    match config.threads {
        None => compute(config),
        Some(threads) => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| CliError::Invariant(format!("thread pool: {e}")))?
            .install(|| compute(config)),
    }
}

/// Executes and writes the body to `--output` or standard output.
pub fn run(config: &RunConfig) -> Result<Vec<String>, CliError> {
    let report = execute(config)?;
    match &config.output {
        Some(path) => std::fs::write(path, &report.body)?,
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(report.body.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(report.notes)
}
