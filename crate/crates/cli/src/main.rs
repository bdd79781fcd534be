mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use leavitt::Field;

/// Exact computations in Leavitt path algebras of finite graphs.
#[derive(Debug, Parser)]
#[command(name = "leavitt", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Coefficient field: `q` for the rationals or `gf:p` for a prime p.
    #[arg(long, global = true, default_value = "q", value_parser = parse_field)]
    pub field: Field,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Seed for the randomised spot checks of `check`.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Depth bound for the hedgehog graph (default: number of vertices + 1).
    #[arg(long, global = true)]
    pub depth: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Vertices whose tree has no bifurcation and no cycle.
    Linepoints { graph: PathBuf },
    /// Hereditary saturated closure of a set of vertices.
    Closure {
        /// Comma-separated vertex names.
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<String>,
        graph: PathBuf,
    },
    /// Socle report: line points, closure, summand sizes, hedgehog graph.
    Socle { graph: PathBuf },
    /// Isomorphism type of the socle (and of the algebra when finite-dimensional).
    Structure { graph: PathBuf },
    /// Reduce a nonzero element to a scalar times a vertex or a cycle polynomial.
    Reduce {
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        graph: PathBuf,
    },
    /// An element `a` with `x a x` nonzero.
    Nondegen {
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        graph: PathBuf,
    },
    /// Whether the algebra is simple.
    Simple { graph: PathBuf },
    /// Whether the left ideal generated by a vertex is minimal.
    Minimal {
        #[arg(long)]
        vertex: String,
        graph: PathBuf,
    },
    /// Whether an element lies in the socle.
    Member {
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        graph: PathBuf,
    },
    /// Normal form of an element.
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        graph: PathBuf,
    },
    /// The graph in Graphviz format.
    Dot { graph: PathBuf },
    /// Evaluate every defining relation; with `--seed`, also spot-check reductions.
    Check { graph: PathBuf },
}

fn parse_field(s: &str) -> Result<Field, String> {
    s.parse().map_err(|e: leavitt::ScalarError| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            print!("{out}");
            if !out.is_empty() && !out.ends_with('\n') {
                println!();
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
