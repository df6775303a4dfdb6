use std::path::PathBuf;

use clap::{ArgAction, Parser, ValueEnum};
use grover_ent::complexity::MAX_SCAN_QUBITS;
use grover_ent::grover::MAX_INSTANCE_QUBITS;
use grover_ent::pseudopure::MAX_DENSE_SIZE;
use grover_ent::QueryCost;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CommandName {
    /// Separability-constrained query complexity per qubit count
    Table1,
    /// Per-iteration entanglement diagnostics for one instance
    Trace,
    /// Per-iteration separability bound for one instance
    Bound,
    /// Speed-up threshold versus separability bound, per qubit count
    Scan,
    /// Fluctuations of P - 1/N on pure and pseudo-pure states
    Fluctuations,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "grover-ent", version)]
#[command(
    about = "Entanglement and query complexity of Grover search on pure and pseudo-pure states"
)]
pub struct Cli {
    pub command: CommandName,

    /// Qubit count for single-instance commands
    #[arg(long)]
    pub qubits: Option<u32>,

    #[arg(long)]
    pub min_qubits: Option<u32>,

    #[arg(long)]
    pub max_qubits: Option<u32>,

    /// Target index; defaults to 2^n - 1
    #[arg(long)]
    pub target: Option<u64>,

    /// Purity parameter in [0, 1]
    #[arg(long, allow_negative_numbers = true)]
    pub epsilon: Option<f64>,

    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Write the report here instead of standard output
    #[arg(long)]
    pub output: Option<PathBuf>,

    /// Worker threads; defaults to the available parallelism
    #[arg(long)]
    pub threads: Option<usize>,

    /// Charge one oracle call per run to test the result
    #[arg(long, action = ArgAction::Set, default_value_t = true)]
    pub include_final_test_query: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Command {
    Table1 {
        min: u32,
        max: u32,
        cost: QueryCost,
    },
    Trace {
        qubits: u32,
        target: u64,
        epsilon: f64,
    },
    Bound {
        qubits: u32,
        target: u64,
    },
    Scan {
        min: u32,
        max: u32,
    },
    Fluctuations {
        qubits: u32,
        epsilon: f64,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub format: Format,
    pub output: Option<PathBuf>,
    pub threads: Option<usize>,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn require<T>(value: Option<T>, flag: &str, command: &str) -> Result<T, CliError> {
    value.ok_or_else(|| usage(format!("{command} requires {flag}")))
}

fn check_qubits(qubits: u32, max: u32) -> Result<u32, CliError> {
    if !(1..=max).contains(&qubits) {
        return Err(usage(format!(
            "--qubits must be in [1, {max}], got {qubits}"
        )));
    }
    Ok(qubits)
}

fn check_target(target: Option<u64>, qubits: u32) -> Result<u64, CliError> {
    let size = 1u64 << qubits;
    match target {
        None => Ok(size - 1),
        Some(t) if t < size => Ok(t),
        Some(t) => Err(usage(format!(
            "--target must be below 2^{qubits} = {size}, got {t}"
        ))),
    }
}

fn check_epsilon(epsilon: Option<f64>, command: &str) -> Result<f64, CliError> {
    let e = require(epsilon, "--epsilon", command)?;
    if !(0.0..=1.0).contains(&e) {
        return Err(usage(format!("--epsilon must be in [0, 1], got {e}")));
    }
    Ok(e)
}

fn check_range(min: u32, max: u32, lowest: u32, highest: u32) -> Result<(u32, u32), CliError> {
    if min < lowest || max > highest || min > max {
        return Err(usage(format!(
            "qubit range must satisfy {lowest} <= --min-qubits <= --max-qubits <= {highest}, got [{min}, {max}]"
        )));
    }
    Ok((min, max))
}

impl RunConfig {
    /// Validates every numeric argument against the preconditions of the
    /// selected command.
    pub fn from_cli(cli: &Cli) -> Result<Self, CliError> {
        let command = match cli.command {
            CommandName::Table1 => {
                let max = require(cli.max_qubits, "--max-qubits", "table1")?;
                let (min, max) =
                    check_range(cli.min_qubits.unwrap_or(1), max, 1, MAX_INSTANCE_QUBITS)?;
                Command::Table1 {
                    min,
                    max,
                    cost: QueryCost {
                        include_final_test: cli.include_final_test_query,
                    },
                }
            }
            CommandName::Trace => {
                let qubits = check_qubits(
                    require(cli.qubits, "--qubits", "trace")?,
                    MAX_INSTANCE_QUBITS,
                )?;
                Command::Trace {
                    qubits,
                    target: check_target(cli.target, qubits)?,
                    epsilon: check_epsilon(cli.epsilon, "trace")?,
                }
            }
            CommandName::Bound => {
                let qubits = check_qubits(
                    require(cli.qubits, "--qubits", "bound")?,
                    MAX_INSTANCE_QUBITS,
                )?;
                Command::Bound {
                    qubits,
                    target: check_target(cli.target, qubits)?,
                }
            }
            CommandName::Scan => {
                let (min, max) = check_range(
                    cli.min_qubits.unwrap_or(3),
                    cli.max_qubits.unwrap_or(MAX_SCAN_QUBITS),
                    3,
                    MAX_SCAN_QUBITS,
                )?;
                Command::Scan { min, max }
            }
            CommandName::Fluctuations => {
                let dense_max = MAX_DENSE_SIZE.trailing_zeros();
                let qubits =
                    check_qubits(require(cli.qubits, "--qubits", "fluctuations")?, dense_max)?;
                Command::Fluctuations {
                    qubits,
                    epsilon: check_epsilon(cli.epsilon, "fluctuations")?,
                }
            }
        };
        if cli.threads == Some(0) {
            return Err(usage("--threads must be at least 1"));
        }
        Ok(Self {
            command,
            format: cli.format,
            output: cli.output.clone(),
            threads: cli.threads,
        })
    }
}
