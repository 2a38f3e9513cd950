//! `wcheb <spec.json> [flags]` — run one batch problem and persist the
//! result record; see the `cli` module for the file formats and exit
//! codes.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use wcheb::cli::{self, Flags, Format};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "wcheb",
    version,
    about = "Weighted Chebyshev polynomials on compact subsets of the plane: \
             solve, certify, and check potential-theoretic bounds"
)]
struct Args {
    /// JSON problem file.
    spec: PathBuf,

    /// Write the result record here (default: print to stdout).
    #[arg(long)]
    out: Option<PathBuf>,

    /// `csv` additionally writes a flat table next to `--out`.
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,

    /// Solver tolerance (overrides the spec).
    #[arg(long)]
    tol: Option<f64>,

    /// Sampling grid density (overrides the spec).
    #[arg(long)]
    grid: Option<usize>,

    /// Quadrature node count (overrides the spec).
    #[arg(long)]
    quad: Option<usize>,

    /// Iteration budget (overrides the spec).
    #[arg(long = "max-iter")]
    max_iter: Option<usize>,

    /// Seed for randomized sampling (overrides the spec).
    #[arg(long)]
    seed: Option<u64>,

    /// Omit wall-clock timing so identical runs produce identical bytes.
    #[arg(long)]
    reproducible: bool,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let flags = Flags {
        out: args.out,
        format: match args.format {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        },
        tol: args.tol,
        grid: args.grid,
        quad: args.quad,
        max_iter: args.max_iter,
        seed: args.seed,
        reproducible: args.reproducible,
    };

    match cli::run(&args.spec, &flags) {
        Ok(out) => {
            if flags.out.is_none() {
                print!("{}", out.json);
            }
            ExitCode::from(out.exit as u8)
        }
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
