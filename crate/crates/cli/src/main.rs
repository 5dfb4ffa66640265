use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fflab_core::solver::Limits;
use fflab_core::Variant;

mod commands;
mod input;

/// Exact solving, bounds, gadgets and strategy checking for the firefighter game.
#[derive(Debug, Parser)]
#[command(name = "fflab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Firefighter number, or a decision for a fixed budget.
    Solve(SolveArgs),
    /// Play a strategy file against a graph.
    Verify(VerifyArgs),
    /// Lower and upper bounds with certificates.
    Bound(BoundArgs),
    /// Build a labelled gadget, optionally with its constructed strategy.
    Gadget(GadgetArgs),
    /// Sweep a graph6 stream with an exhaustive check.
    Enumcheck(EnumcheckArgs),
    /// Sample seeded random strategies.
    Fuzz(FuzzArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum GraphFormat {
    Auto,
    Edges,
    Graph6,
}

#[derive(Debug, Args)]
pub struct GraphInput {
    /// Graph file (edge list or graph6), `-` for stdin.
    pub graph: PathBuf,
    #[arg(long, value_enum, default_value = "auto")]
    pub format: GraphFormat,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub input: GraphInput,
    /// Decide a single budget instead of computing the minimum.
    #[arg(long)]
    pub m: Option<usize>,
    /// With `--m`: decide whether a strategy of at most this many steps exists.
    #[arg(long, requires = "m")]
    pub time: Option<usize>,
    #[arg(long, default_value = "firefighter")]
    pub variant: Variant,
    /// Search limits as `states=N,ms=N`; `states=none` lifts the state cap.
    #[arg(long, env = "FFLAB_LIMIT_STATES", value_parser = parse_limits, default_value = "states=50000000")]
    pub limits: Limits,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub input: GraphInput,
    /// Strategy JSON: `{"m": int, "steps": [[node, ...], ...]}`.
    pub strategy: PathBuf,
    #[arg(long, default_value = "firefighter")]
    pub variant: Variant,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    #[command(flatten)]
    pub input: GraphInput,
    /// Path decomposition JSON: a list of bags.
    #[arg(long)]
    pub pathdecomp: Option<PathBuf>,
    /// Nodes whose removal leaves a graph with a known strategy.
    #[arg(long, value_delimiter = ',')]
    pub removal: Option<Vec<usize>>,
}

#[derive(Debug, Args)]
pub struct GadgetArgs {
    #[command(subcommand)]
    pub kind: GadgetKind,
    /// Attach the constructed strategy for the gadget.
    #[arg(long, global = true)]
    pub construct: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Shape {
    Star,
    Spider,
    Arbitrary,
}

#[derive(Debug, Subcommand)]
pub enum GadgetKind {
    /// Timed fuse around the 2-blowup of a graph.
    TimeGadget {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        m: usize,
    },
    /// Recursive family with long shortest strategies.
    GFamily {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 4)]
        alpha: usize,
        #[arg(long, default_value_t = 1)]
        beta: usize,
    },
    /// Clique with common neighbours.
    AuxH {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 4)]
        alpha: usize,
        #[arg(long, default_value_t = 1)]
        beta: usize,
    },
    /// Every edge replaced by n + 1 paths of length two.
    HunterTransform {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Centre joined to one tree per item.
    ThreePartition {
        #[arg(long, value_delimiter = ',', required = true)]
        items: Vec<usize>,
        #[arg(long, value_enum, default_value = "star")]
        shape: Shape,
    },
    /// Disjoint cliques, one per item.
    Binpacking {
        #[arg(long, value_delimiter = ',', required = true)]
        items: Vec<usize>,
    },
    /// Clique plus a pendant path joined to all of it.
    PathClique {
        #[arg(long)]
        p: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Check {
    Char,
    Conjecture,
    BoundsSoundness,
}

#[derive(Debug, Args)]
pub struct EnumcheckArgs {
    /// graph6 stream, `-` for stdin.
    pub stream: PathBuf,
    #[arg(long, value_enum)]
    pub check: Check,
    /// Skip graphs with more nodes.
    #[arg(long, default_value_t = 7)]
    pub max_n: usize,
    /// Worker threads (default: all cores).
    #[arg(long)]
    pub jobs: Option<usize>,
    #[arg(long, env = "FFLAB_LIMIT_STATES", value_parser = parse_limits, default_value = "states=50000000")]
    pub limits: Limits,
}

#[derive(Debug, Args)]
pub struct FuzzArgs {
    #[command(flatten)]
    pub input: GraphInput,
    #[arg(long)]
    pub m: usize,
    /// Steps per random strategy.
    #[arg(long)]
    pub steps: usize,
    #[arg(long, default_value_t = 1000)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value = "firefighter")]
    pub variant: Variant,
}

/// `states=N,ms=N` in any order; a bare number is a state cap.
fn parse_limits(s: &str) -> Result<Limits, String> {
    let mut limits = Limits::default();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (key, value) = part.split_once('=').unwrap_or(("states", part));
        let number = || value.parse::<u64>().map_err(|e| format!("{key}: {e}"));
        match key {
            "states" if value == "none" => limits.max_states = None,
            "states" => limits.max_states = Some(number()? as usize),
            "ms" if value == "none" => limits.max_time = None,
            "ms" => limits.max_time = Some(Duration::from_millis(number()?)),
            _ => return Err(format!("unknown limit '{key}', expected states or ms")),
        }
    }
    Ok(limits)
}

/// Why a command did not succeed, mapped to the documented exit codes.
#[derive(Debug)]
pub enum Failure {
    Usage(anyhow::Error),
    Resource(String),
    Lost,
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.into())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Solve(a) => commands::solve(a),
        Command::Verify(a) => commands::verify(a),
        Command::Bound(a) => commands::bound(a),
        Command::Gadget(a) => commands::gadget(a),
        Command::Enumcheck(a) => commands::enumcheck(a),
        Command::Fuzz(a) => commands::fuzz(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Resource(msg)) => {
            eprintln!("resource limit: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Lost) => ExitCode::from(3),
    }
}
