//! `ncshuffle`: exact moment, cumulant and convolution computations from the
//! command line. Results are JSON with rationals written as `"p/q"` strings.

mod commands;
mod error;
mod io;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ncshuffle_core::combinatorics::Family;
use ncshuffle_core::Rational;

use crate::error::CliError;
use crate::io::parse_rational;

#[derive(Parser)]
#[command(name = "ncshuffle", version, about = "Exact moments, cumulants and additive convolutions of non-commutative distributions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the result to this file instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Truncate every input to this degree before computing.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    truncation: Option<u64>,
}

/// Functionals given as JSON files (`-` for stdin) or as inline univariate
/// moment lists.
#[derive(Args, Clone, Debug, Default)]
struct Inputs {
    /// JSON input file; repeat for binary operations.
    #[arg(long, short)]
    input: Vec<String>,
    /// Univariate moments m_1,m_2,... inline, e.g. `0,1,0,2`.
    #[arg(long, allow_hyphen_values = true)]
    moments: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// List partitions of one family, or count them.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(Family))]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// Moments to cumulants, cumulants to moments, or between cumulant families.
    Transform {
        #[command(flatten)]
        inputs: Inputs,
        /// `moments` or a cumulant family of the input file.
        #[arg(long, default_value = "moments")]
        from: String,
        /// `moments`, free, boolean, monotone, t-boolean or t-monotone.
        #[arg(long)]
        to: String,
        /// Parameter of the target t-family.
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        t: Option<Rational>,
    },
    /// c-free or c-monotone cumulants of a pair state.
    Ctransform {
        #[arg(long, short)]
        input: String,
        /// cfree or cmonotone.
        #[arg(long)]
        to: String,
        /// Compute from the other conditional family through the relation
        /// between them instead of directly.
        #[arg(long)]
        via_relation: bool,
    },
    /// Free, Boolean, monotone, orthogonal or subordination products of
    /// two characters, or the Belinschi–Nica map of one.
    Convolve {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long)]
        kind: String,
        /// Parameter of the Belinschi–Nica map.
        #[arg(long, value_parser = parse_rational)]
        t: Option<Rational>,
    },
    /// c-free or c-monotone products of pair states.
    Cconvolve {
        #[arg(long, short)]
        input: Vec<String>,
        /// cfree or cmonotone.
        #[arg(long)]
        kind: String,
        /// c-monotone power of a single pair.
        #[arg(long)]
        power: Option<usize>,
    },
    /// ω(π), t(π)! and m(π) for every non-crossing partition of [n].
    Coefficients {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "nc", value_parser = clap::value_parser!(Family))]
        family: Family,
        /// `json` or `tsv`.
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Run a named identity suite on seeded random inputs.
    Verify {
        /// Suite name, or `all`.
        #[arg(long, required_unless_present = "list")]
        suite: Option<String>,
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        cases: Option<usize>,
        #[arg(long)]
        letters: Option<usize>,
        /// List the suites and exit.
        #[arg(long)]
        list: bool,
    },
    /// Coefficients of ρ^(t) in terms of ρ^(s), by rooted tree.
    TsExpansion {
        #[arg(long, default_value_t = 4)]
        order: usize,
        /// `text` or `json`.
        #[arg(long, default_value = "text")]
        format: String,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or_default();
            return fail(&CliError::Usage(first.trim_start_matches("error: ").to_string()));
        }
    };
    match commands::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => fail(&e),
    }
}

fn fail(e: &CliError) -> ExitCode {
    eprintln!("{}", e.to_json());
    ExitCode::from(1)
}
