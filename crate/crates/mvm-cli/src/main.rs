//! Command-line front end for the mvm matching library.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "mvm",
    version,
    about = "Maximum vertex-weighted matching in bipartite graphs",
    after_help = "Exit codes: 0 ok, 1 usage, 2 I/O, 3 verification failure."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one graph with one algorithm and print the matching
    Run(RunArgs),
    /// Run graphs x algorithms and emit a CSV report with geometric means
    Bench(BenchArgs),
    /// Generate a seeded random bipartite graph and optional weights
    Gen(GenArgs),
    /// Validate a matching file and run the path verifiers
    Check(CheckArgs),
    /// Print per-side size and degree statistics for a graph
    Stats(StatsArgs),
}

/// Solver selection. Ratio columns in reports are always relative to
/// `exact`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    /// Exact maximum vertex-weighted matching
    Exact,
    /// 2/3-approximation from augmenting paths of length at most three
    TwoThirds,
    /// Greedy 1/2-approximation from length-one augmenting paths
    Half,
}

impl Algo {
    fn name(self) -> &'static str {
        match self {
            Algo::Exact => "exact",
            Algo::TwoThirds => "two-thirds",
            Algo::Half => "half",
        }
    }
}

#[derive(clap::Args)]
struct RunArgs {
    /// Matrix Market coordinate file
    #[arg(long)]
    graph: PathBuf,
    /// unit | random:<lo>:<hi>:<seed> | file:<path>
    #[arg(long, default_value = "unit")]
    weights: String,
    #[arg(long, value_enum)]
    algo: Algo,
    /// Write the matching here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Timing repetitions; the median is reported
    #[arg(long, default_value_t = 3)]
    reps: usize,
    /// Validate the result (and for exact, run both path verifiers)
    #[arg(long)]
    check: bool,
}

#[derive(clap::Args)]
struct BenchArgs {
    /// Graph file; may be given multiple times
    #[arg(long = "graph")]
    graphs: Vec<PathBuf>,
    /// File listing one graph path per line (# comments allowed)
    #[arg(long = "graphs")]
    graph_list: Option<PathBuf>,
    /// Comma-separated algorithms to run
    #[arg(long, value_enum, value_delimiter = ',', required = true)]
    algos: Vec<Algo>,
    #[arg(long, default_value = "unit")]
    weights: String,
    /// Write the CSV here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 3)]
    reps: usize,
    /// Add a brute-force optimum column (graphs must have at most 24 edges)
    #[arg(long)]
    oracle: bool,
}

#[derive(clap::Args)]
struct GenArgs {
    #[arg(long = "n-s")]
    n_s: usize,
    #[arg(long = "n-t")]
    n_t: usize,
    /// Number of distinct edges to sample
    #[arg(long)]
    m: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Output Matrix Market file
    #[arg(long)]
    out: PathBuf,
    /// Weight spec to materialize alongside the graph
    #[arg(long, requires = "weights_out")]
    weights: Option<String>,
    /// Output weight file (requires --weights)
    #[arg(long = "weights-out", requires = "weights")]
    weights_out: Option<PathBuf>,
}

#[derive(clap::Args)]
struct CheckArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, default_value = "unit")]
    weights: String,
    /// Matching file with `s t` lines
    #[arg(long)]
    matching: PathBuf,
    /// Also verify that no augmenting and no increasing path exists
    #[arg(long)]
    full: bool,
    /// Compare against the brute-force optimum (at most 24 edges)
    #[arg(long)]
    oracle: bool,
}

#[derive(clap::Args)]
struct StatsArgs {
    #[arg(long)]
    graph: PathBuf,
}

/// Process failure carrying its exit code class.
#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Verification(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Io(_) => 2,
            CliError::Verification(_) => 3,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Run(args) => commands::run(args),
        Command::Bench(args) => commands::bench(args),
        Command::Gen(args) => commands::gen(args),
        Command::Check(args) => commands::check(args),
        Command::Stats(args) => commands::stats(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
