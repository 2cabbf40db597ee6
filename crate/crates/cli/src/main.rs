//! `chipfire`: chip-firing groups from edge-list files.

mod commands;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::commands::{CliError, Context};
use crate::output::{Format, OutputRecord};

#[derive(Debug, Parser)]
#[command(name = "chipfire", version, about = "Chip-firing groups of graphs, joins and iterated cones")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Replace every input graph by its Nth cone before running the command.
    #[arg(long, value_name = "N", global = true)]
    cone: Option<usize>,

    /// Delete this vertex (instead of 0) when forming the reduced Laplacian.
    #[arg(long, value_name = "V", global = true)]
    remove_vertex: Option<usize>,

    /// Seed for sample-based subcommands.
    #[arg(long, value_name = "S", default_value_t = 0, global = true)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Critical group, spanning-tree count and restricted characteristic polynomial.
    Group { file: PathBuf },
    /// Group of the Nth cone over the input graph.
    Cone { file: PathBuf, n: usize },
    /// Group of the join of two or more graphs.
    Join {
        #[arg(required = true, num_args = 2..)]
        files: Vec<PathBuf>,
    },
    /// Check a structural statement on each input (or, for `join`, on the
    /// join of all inputs). Exit code 1 if any check fails.
    Verify {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Cone size.
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, value_enum)]
        which: Which,
    },
    /// Run a check over seeded random connected graphs (random trees for
    /// `tree`).
    Sample {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 7)]
        max_vertices: usize,
        /// Largest cone size; every n in 1..=N is checked.
        #[arg(long, default_value_t = 4)]
        n: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    /// Subgroup, quotient and order formula for the cone sequence
    Cone,
    /// Generator bound for the quotient over a tree
    Tree,
    /// Spanning-tree count of a join against the product formula
    Join,
    /// Laplacian eigenvectors of the cone on apex differences
    Eigen,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Context {
        cone: cli.cone,
        remove_vertex: cli.remove_vertex,
        seed: cli.seed,
    };
    let results = match &cli.command {
        Command::Group { file } => vec![ctx.group(file)],
        Command::Cone { file, n } => vec![ctx.cone(file, *n)],
        Command::Join { files } => vec![ctx.join(files)],
        Command::Verify { files, n, which } => ctx.verify(files, *n, *which),
        Command::Sample {
            which,
            count,
            max_vertices,
            n,
        } => vec![ctx.sample(*which, *count, *max_vertices, *n)],
    };

    let mut stdout = std::io::stdout().lock();
    let mut stderr = std::io::stderr().lock();
    let code = emit(results, cli.format, &mut stdout, &mut stderr);
    ExitCode::from(code)
}

/// Writes records in order and returns the process exit code: 0 when every
/// record holds, 1 if a verification failed, otherwise the code of the
/// first error.
fn emit(
    results: Vec<Result<OutputRecord, CliError>>,
    format: Format,
    out: &mut impl Write,
    err: &mut impl Write,
) -> u8 {
    let mut code = 0u8;
    for result in results {
        match result {
            Ok(record) => {
                writeln!(out, "{}", format.render(&record)).expect("stdout is writable");
                if !record.holds() && code == 0 {
                    code = 1;
                }
            }
            Err(e) => {
                writeln!(err, "error: {e}").expect("stderr is writable");
                if code <= 1 {
                    code = e.exit_code();
                }
            }
        }
    }
    code
}
