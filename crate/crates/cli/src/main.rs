mod commands;
mod manifest;
mod reproduce;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use manifest::{Files, RunManifest};

/// Default seed for randomized pipelines.
pub const DEFAULT_SEED: u64 = 2024;

#[derive(Parser, Debug)]
#[command(
    name = "crosscert",
    version,
    about = "Crossing numbers, certified drawings and counting audits"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Print machine-readable JSON instead of a table.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write a run manifest (argv, file digests, timing, result) to this path.
    #[arg(long, global = true, value_name = "PATH")]
    pub manifest: Option<PathBuf>,
    /// Wall-clock budget for searches, in seconds.
    #[arg(
        long,
        global = true,
        env = "CROSSCERT_BUDGET_SECS",
        default_value_t = 600
    )]
    pub budget_secs: u64,
    /// Seed for randomized steps.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenFamily {
    Cycle,
    Complete,
    Biclique,
    Gn,
    Mn,
    Hn,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DrawFamily {
    Gn,
    Mn,
    Hn,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Scope {
    SmallExact,
    Drawings,
    Audit,
    All,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate a graph file.
    Gen {
        #[arg(long, value_enum)]
        family: GenFamily,
        #[arg(long)]
        n: usize,
        /// First side of a biclique.
        #[arg(long)]
        m: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Test planarity and extract a Kuratowski witness.
    Planar { graph: PathBuf },
    /// Compute the crossing number exactly.
    Solve {
        graph: PathBuf,
        /// Give up above this many crossings.
        #[arg(long)]
        max_k: Option<usize>,
    },
    /// Decide whether cr(G) <= k.
    Decide {
        graph: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
    },
    /// Check that deleting each edge lowers the crossing number.
    Critical {
        graph: PathBuf,
        /// Known crossing number of the graph; computed when absent.
        #[arg(long)]
        cr: Option<usize>,
        /// Restrict to these edges (`u--v`, repeatable).
        #[arg(long = "edge")]
        edges: Vec<String>,
    },
    /// Build an explicit drawing.
    Draw {
        #[arg(long, value_enum)]
        family: DrawFamily,
        #[arg(long)]
        n: usize,
        /// Delete this G_n edge (e.g. `x1y2`).
        #[arg(long)]
        delete: Option<String>,
        /// Exchange x_j and y_j (G_n only, repeatable).
        #[arg(long)]
        exchange: Vec<usize>,
        /// Jitter vertex positions by up to this much (uses --seed).
        #[arg(long)]
        jitter: Option<i64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Certify the crossings of a drawing.
    VerifyDrawing {
        drawing: PathBuf,
        /// Also check the good-drawing conditions.
        #[arg(long)]
        good: bool,
        /// Count crossings between two edge sets (`all`, `L3`, `u--v`, comma-separated).
        #[arg(long, num_args = 2, value_names = ["E1", "E2"])]
        between: Option<Vec<String>>,
    },
    /// Audit the section-counting inequalities on a drawing of G_n.
    Audit { drawing: PathBuf },
    /// Rerun the reference pipelines and print a pass/fail table.
    Reproduce {
        #[arg(long, value_enum, default_value_t = Scope::All)]
        scope: Scope,
        /// Jittered drawings per n in the audit pipeline.
        #[arg(long, default_value_t = 100)]
        jitter_seeds: u64,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Gen { .. } => "gen",
            Command::Planar { .. } => "planar",
            Command::Solve { .. } => "solve",
            Command::Decide { .. } => "decide",
            Command::Critical { .. } => "critical",
            Command::Draw { .. } => "draw",
            Command::VerifyDrawing { .. } => "verify-drawing",
            Command::Audit { .. } => "audit",
            Command::Reproduce { .. } => "reproduce",
        }
    }
}

/// Exit statuses.
pub mod exit {
    pub const OK: u8 = 0;
    pub const FAILED: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const BUDGET: u8 = 3;
}

/// What a command produced: an exit status, a table and a JSON summary.
pub struct Outcome {
    pub code: u8,
    pub text: String,
    pub json: serde_json::Value,
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = Cli::parse();
    let start = Instant::now();
    let mut files = Files::default();
    let name = cli.command.name();

    let outcome = match commands::run(&cli.command, &cli.common, &mut files) {
        Ok(o) => o,
        Err(message) => Outcome {
            code: exit::USAGE,
            text: format!("error: {message}"),
            json: serde_json::json!({ "error": message }),
        },
    };

    if outcome.code == exit::USAGE {
        eprintln!("{}", outcome.text);
    } else if cli.common.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&outcome.json).expect("json")
        );
    } else if !outcome.text.is_empty() {
        print!("{}", outcome.text);
        if !outcome.text.ends_with('\n') {
            println!();
        }
    }

    if let Some(path) = &cli.common.manifest {
        let m = RunManifest::new(
            name,
            argv,
            files,
            start.elapsed(),
            outcome.code,
            outcome.json,
        );
        if let Err(e) = std::fs::write(path, m.to_json()) {
            eprintln!("error: cannot write manifest {}: {e}", path.display());
            return ExitCode::from(exit::USAGE);
        }
    }
    ExitCode::from(outcome.code)
}
