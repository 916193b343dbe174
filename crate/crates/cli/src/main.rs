use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod document;

/// Failures mapped onto the stable exit-code contract.
#[derive(Debug)]
pub enum CliError {
    Io(String),
    Parse(String),
    Precondition(String),
    Regression(usize),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Regression(_) => 4,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Io(m) => write!(f, "i/o error: {m}"),
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Precondition(m) => write!(f, "precondition violated: {m}"),
            CliError::Regression(n) => write!(f, "{n} regression check(s) failed"),
        }
    }
}

impl From<rrmf_core::Error> for CliError {
    fn from(e: rrmf_core::Error) -> Self {
        use rrmf_core::Error as E;
        match e {
            E::Parse(m) => CliError::Parse(m),
            E::InvalidBase(_) | E::MismatchedBase { .. } => CliError::Parse(e.to_string()),
            E::Precondition(m) => CliError::Precondition(m),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(name = "rrmf", version, about = "Polynomial curves with rational rotation-minimizing frames")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ConstructKind {
    Trivial,
    Cubic,
    CubicMonic,
    Quartic,
    Family,
    FElement,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a quaternion polynomial generator (JSON verdict on stdout).
    Classify {
        /// Polynomial document, or `-` for stdin.
        input: String,
        /// Run the heuristic certificate search when membership is otherwise open.
        #[arg(long)]
        search: bool,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
        #[arg(long, default_value_t = 10_000)]
        budget_ms: u64,
    },
    /// Build a generator from a JSON spec.
    Construct {
        #[arg(value_enum)]
        kind: ConstructKind,
        /// Inline JSON spec.
        #[arg(long, conflicts_with = "spec_file")]
        spec: Option<String>,
        #[arg(long)]
        spec_file: Option<PathBuf>,
        /// Degree for `family`.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Sample a frame along the curve and write CSV.
    Frames {
        input: String,
        #[arg(long, default_value = "rmf")]
        frame: String,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Parameter interval `lo:hi`.
        #[arg(long, default_value = "0:1")]
        range: String,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Constant normal-plane rotation applied to (f2, f3), in radians.
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        phase: f64,
    },
    /// Check the document's certificate (a, b) against the Han fraction.
    VerifyHan { input: String },
    /// Map a generator with certificate a + b i to its F0 representative.
    Reduce { input: String },
    /// Search for a Han certificate.
    SearchGamma {
        input: String,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
        #[arg(long, default_value_t = 10_000)]
        budget_ms: u64,
    },
    /// Run the worked-example regression battery.
    PaperExamples {
        /// Raise Example 1's u by one (the battery should then fail).
        #[arg(long)]
        perturb_example1: bool,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.cmd {
        Command::Classify { input, search, max_degree, budget_ms } => {
            commands::classify(&input, search.then_some((max_degree, budget_ms)))
        }
        Command::Construct { kind, spec, spec_file, n } => {
            let spec = match (spec, spec_file) {
                (Some(s), _) => Some(s),
                (None, Some(p)) => Some(std::fs::read_to_string(&p).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?),
                (None, None) => None,
            };
            commands::construct(kind, spec.as_deref(), n)
        }
        Command::Frames { input, frame, samples, range, out, phase } => {
            commands::frames(&input, &frame, samples, &range, out.as_deref(), phase)
        }
        Command::VerifyHan { input } => commands::verify_han(&input),
        Command::Reduce { input } => commands::reduce(&input),
        Command::SearchGamma { input, max_degree, budget_ms } => commands::search_gamma(&input, max_degree, budget_ms),
        Command::PaperExamples { perturb_example1 } => commands::paper_examples(perturb_example1),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("rrmf: {e}");
            ExitCode::from(e.code())
        }
    }
}
