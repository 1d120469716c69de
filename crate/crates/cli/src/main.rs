//! `maxgenus` command-line front end.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use maxgenus::ScrollType;

use crate::output::Failure;

#[derive(Parser)]
#[command(
    name = "maxgenus",
    version,
    about = "Divisor calculus on cubic rational normal 3-folds and maximal-genus curves in P^5"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; each command picks its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    /// Allow computations the theory does not cover (classification for s < 9).
    #[arg(long, global = true)]
    force: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Decomposition, h-vector and maximal genus for (d, s).
    Bound(DegreeArgs),
    /// Shape of the linked curve C' for (d, s) on a given scroll.
    Classify(ClassifyArgs),
    /// Sections of a Weil divisor class.
    H0(H0Args),
    /// Intersection degree of two surfaces (with a third class on the smooth scrolls).
    Intersect(IntersectArgs),
    /// Intersection multiplicity along the vertex line of S(0,0,3).
    Multiplicity(PairArgs),
    /// Existence construction for (d, s) and the genus it reproduces.
    Construct(DegreeArgs),
    /// Cross-check all genus oracles over a grid.
    Verify(VerifyArgs),
    /// Table of parameters and genera over a grid.
    Sweep(GridArgs),
}

#[derive(Args)]
pub struct DegreeArgs {
    #[arg(long)]
    pub d: i64,
    #[arg(long)]
    pub s: i64,
}

#[derive(Args)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub degree: DegreeArgs,
    #[arg(long, value_parser = parse_scroll)]
    pub scroll: ScrollType,
    /// Class of S, e.g. "3H" or "4H+R", or "auto" for every admissible class.
    #[arg(long = "class", default_value = "auto")]
    pub s_class: String,
}

#[derive(Args)]
pub struct H0Args {
    #[arg(long, value_parser = parse_scroll)]
    pub scroll: ScrollType,
    /// Divisor class such as "H-2R".
    #[arg(long = "class", allow_hyphen_values = true)]
    pub class: String,
}

#[derive(Args)]
pub struct IntersectArgs {
    #[arg(long, value_parser = parse_scroll)]
    pub scroll: ScrollType,
    #[command(flatten)]
    pub pair: PairArgs,
    /// Third class (S(1,1,1), S(0,1,2) only).
    #[arg(long, default_value = "H", allow_hyphen_values = true)]
    pub d3: String,
}

#[derive(Args)]
pub struct PairArgs {
    /// A class "aH+bR" (generic member) or a proper transform "aH~+bR~".
    #[arg(long, allow_hyphen_values = true)]
    pub d1: String,
    #[arg(long, allow_hyphen_values = true)]
    pub d2: String,
}

#[derive(Args)]
pub struct GridArgs {
    #[arg(long, default_value_t = 9)]
    pub s_min: i64,
    #[arg(long, default_value_t = 60)]
    pub s_max: i64,
    /// Values of m per s, e.g. "w+5" or "w+2..w+6,10,50".
    #[arg(long = "m", default_value = "w+2..w+6,10,50", allow_hyphen_values = true)]
    pub m_spec: String,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub grid: GridArgs,
    /// Compare the closed genus expressions against the summations instead.
    #[arg(long)]
    pub discrepancy: bool,
}

fn parse_scroll(s: &str) -> Result<ScrollType, String> {
    s.parse().map_err(|e: maxgenus::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = commands::Context {
        format: cli.format,
        force: cli.force,
    };
    let result = match &cli.command {
        Command::Bound(a) => commands::bound(&ctx, a),
        Command::Classify(a) => commands::classify(&ctx, a),
        Command::H0(a) => commands::h0(&ctx, a),
        Command::Intersect(a) => commands::intersect(&ctx, a),
        Command::Multiplicity(a) => commands::multiplicity(&ctx, a),
        Command::Construct(a) => commands::construct(&ctx, a),
        Command::Verify(a) => commands::verify(&ctx, a),
        Command::Sweep(a) => commands::sweep(&ctx, a),
    };
    let report = result.and_then(|out| output::emit(&out, cli.out.as_deref()).map(|()| out.exit));
    match report {
        Ok(code) => code,
        Err(Failure { message, code }) => {
            eprintln!("error: {message}");
            code
        }
    }
}
