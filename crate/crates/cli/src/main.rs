//! `kmeasure`: knowledge, ignorance and knowledge entropy from the command line.
//!
//! Exit status: 0 when a result was computed (including checks that report
//! infeasibility), 1 on input errors, 2 on usage errors.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use crate::output::Envelope;

#[derive(Parser, Debug)]
#[command(
    name = "kmeasure",
    version,
    about = "Measure knowledge for recognition from partitions and rankings"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "table", global = true)]
    format: Format,

    /// Decimal places in table output.
    #[arg(long, default_value_t = 4, global = true)]
    precision: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Knowledge, ignorance and entropy for every rater in a dataset.
    Measure(DatasetArgs),
    /// Knowledge entropy per rater and the lowest-entropy rater.
    Entropy(DatasetArgs),
    /// Raters ordered from most to least knowledge.
    Rank(DatasetArgs),
    /// Whole-versus-parts additivity checks.
    #[command(subcommand)]
    Additivity(AdditivityCommand),
    /// Calibrate the log-linear uncertainty model and query it.
    Dynamics(DynamicsArgs),
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("input").required(true).args(["rankings", "partitions"])))]
pub struct DatasetArgs {
    /// Rankings file: one `rater: ranking` per line.
    #[arg(long, value_name = "PATH")]
    rankings: Option<PathBuf>,

    /// Measurement table: `object,<rater>,...` header then one row per object.
    #[arg(long, value_name = "PATH")]
    partitions: Option<PathBuf>,

    /// Only report these raters (repeatable).
    #[arg(long, value_name = "ID")]
    rater: Vec<String>,

    /// Readings within this distance are chained into one class (tables only).
    #[arg(long, value_name = "REAL")]
    tolerance: Option<f64>,
}

#[derive(Subcommand, Debug)]
enum AdditivityCommand {
    /// Does the sum of two knowledge levels correspond to any achievable W?
    Pair(PairArgs),
    /// Knowledge on a whole set versus the sum over a split into blocks.
    Decompose(DecomposeArgs),
}

#[derive(Args, Debug)]
pub struct PairArgs {
    /// Number of objects.
    #[arg(long)]
    n: usize,

    /// A knowledge level in [0, 1]; give exactly two.
    #[arg(long = "k", value_name = "REAL", allow_negative_numbers = true)]
    k: Vec<f64>,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("source").required(true).args(["class", "rankings", "partitions"])))]
pub struct DecomposeArgs {
    /// One equivalence class as comma-separated object names (repeatable).
    #[arg(long, value_name = "A,B,...")]
    class: Vec<String>,

    /// Take the partition of a single rater from a rankings file.
    #[arg(long, value_name = "PATH", requires = "rater")]
    rankings: Option<PathBuf>,

    /// Take the partition of a single rater from a measurement table.
    #[arg(long, value_name = "PATH", requires = "rater")]
    partitions: Option<PathBuf>,

    #[arg(long, value_name = "ID")]
    rater: Option<String>,

    #[arg(long, value_name = "REAL")]
    tolerance: Option<f64>,

    /// One block of the split as comma-separated object names (repeatable).
    #[arg(long, value_name = "A,B,...", required = true)]
    block: Vec<String>,
}

#[derive(Args, Debug)]
pub struct DynamicsArgs {
    #[arg(long, value_enum)]
    kind: Kind,

    /// Uncertainty at variable = 0.
    #[arg(long)]
    u0: f64,

    /// Uncertainty at variable = 1.
    #[arg(long)]
    u1: f64,

    /// Infer the variable at this uncertainty (repeatable).
    #[arg(long = "at-u", value_name = "U")]
    at_u: Vec<f64>,

    /// Predict the uncertainty at this variable value (repeatable).
    #[arg(long = "at-v", value_name = "V", allow_negative_numbers = true)]
    at_v: Vec<f64>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Knowledge,
    Ignorance,
}

/// Why a command failed.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Input(String),
}

impl Failure {
    fn exit_code(&self) -> ExitCode {
        match self {
            Failure::Input(_) => ExitCode::from(1),
            Failure::Usage(_) => ExitCode::from(2),
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "usage error: {m}"),
            Failure::Input(m) => f.write_str(m),
        }
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let env = Envelope::new(cli.format, cli.precision);
    match &cli.command {
        Command::Measure(a) => commands::measure(a, &env),
        Command::Entropy(a) => commands::entropy(a, &env),
        Command::Rank(a) => commands::rank(a, &env),
        Command::Additivity(AdditivityCommand::Pair(a)) => commands::pair(a, &env),
        Command::Additivity(AdditivityCommand::Decompose(a)) => commands::decompose(a, &env),
        Command::Dynamics(a) => commands::dynamics(a, &env),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {f}");
            f.exit_code()
        }
    }
}
