//! `ccker`: relation analysis, kernels, reductions, oracles and seeded generators.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or input error,
//! 3 enumeration or search budget exceeded.

mod analyze;
mod gen;
mod io;
mod pipeline;
mod solve;

use std::path::PathBuf;
use std::process::ExitCode;

use ccker::instances::Kind;
use ccker::reductions::NaeVariant;
use ccker::Limits;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "ccker", version, about = "Constrained coloring kernels, reductions and oracles")]
struct Cli {
    /// Cap on enumerated tuples and on oracle search nodes.
    #[arg(long, global = true, env = "CCKER_BUDGET", value_parser = clap::value_parser!(u64).range(1..))]
    budget: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Report arity, invariance and the largest definable OR of a relation file.
    Analyze {
        /// Relation file (`relation q= r=` with tuples, or `nur d= l= q=`); `-` for stdin.
        #[arg(value_name = "RELATION", required_unless_present = "relation")]
        path: Option<PathBuf>,
        #[arg(long, conflicts_with = "path")]
        relation: Option<PathBuf>,
    },
    /// Shrink an instance (urfc, gurfc, cliquekv, rcc) and write it with a metadata header.
    Kernelize(RunArgs),
    /// Transform an instance into another problem (see --to).
    Reduce(RunArgs),
    /// Decide an instance with the exhaustive oracles.
    Solve(SolveArgs),
    /// Compare oracle answers before and after a kernel or reduction.
    Verify(RunArgs),
    /// Emit a seeded random instance.
    Gen(gen::GenArgs),
}

/// Shape parameters shared by the subcommands.
#[derive(Args, Debug, Clone, Default)]
pub struct ShapeArgs {
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub l: Option<usize>,
    /// Number of colors.
    #[arg(long)]
    pub q: Option<usize>,
    /// Clique size bound.
    #[arg(long)]
    pub t: Option<usize>,
    /// Clause width for CNF, modulator size for cliquekv.
    #[arg(long)]
    pub k: Option<usize>,
    /// Number of vertices or variables.
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Sat,
    Nae,
    Kernel,
    Reduction,
}

#[derive(Args, Debug)]
pub struct RunArgs {
    /// Kind of the input instance.
    #[arg(long, value_parser = parse_kind)]
    pub problem: Kind,
    /// Target kind for `reduce` and `verify --mode reduction`.
    #[arg(long, value_parser = parse_kind)]
    pub to: Option<Kind>,
    /// Relation file, needed to reduce CNF to rclc.
    #[arg(long)]
    pub relation: Option<PathBuf>,
    #[command(flatten)]
    pub shape: ShapeArgs,
    /// Tuple shape for CNF to urfc.
    #[arg(long, default_value = "singletons")]
    pub variant: NaeVariant,
    /// For verify: kernel (solution sets) or reduction (answers).
    #[arg(long, value_enum)]
    pub mode: Option<Mode>,
    /// Input instance; `-` for stdin.
    pub input: PathBuf,
    /// For verify: a previously written output to check instead of recomputing it.
    pub against: Option<PathBuf>,
    /// Output path (written atomically); stdout when absent.
    #[arg(short = 'o', long = "output")]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    #[arg(long, value_parser = parse_kind)]
    pub problem: Kind,
    #[command(flatten)]
    pub shape: ShapeArgs,
    /// sat or nae, for CNF input.
    #[arg(long, value_enum)]
    pub mode: Option<Mode>,
    /// Also enumerate and print the number of solutions.
    #[arg(long)]
    pub count: bool,
    pub input: PathBuf,
}

fn parse_kind(s: &str) -> Result<Kind, String> {
    s.parse()
}

/// What a successful run concluded.
pub enum Status {
    Ok,
    Mismatch,
}

fn run(cli: Cli) -> anyhow::Result<Status> {
    let limits = match cli.budget {
        Some(b) => Limits { enumeration: b, search_nodes: b },
        None => Limits::default(),
    };
    match cli.command {
        Command::Analyze { path, relation } => {
            let path = path.or(relation).expect("clap requires one of them");
            analyze::run(&path, &limits)
        }
        Command::Kernelize(args) => pipeline::kernelize_cmd(&args, &limits),
        Command::Reduce(args) => pipeline::reduce_cmd(&args, &limits),
        Command::Solve(args) => solve::run(&args, &limits),
        Command::Verify(args) => pipeline::verify_cmd(&args, &limits),
        Command::Gen(args) => gen::run(&args, &limits),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Mismatch) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(if io::is_budget(&e) { 3 } else { 2 })
        }
    }
}
