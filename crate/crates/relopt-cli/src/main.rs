//! `relopt`: exact reliability computations on multigraph files.

mod commands;
mod repro;

use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "relopt", version, about = "Exact all-terminal reliability of multigraphs")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct Common {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    /// Emit graphs in DOT instead of the edge-list format.
    #[arg(long, global = true)]
    dot: bool,
    /// Worker threads for enumeration; 0 uses every core.
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
    /// Largest edge count for subset enumeration.
    #[arg(long, global = true, env = "RELOPT_SUBSET_CAP")]
    subset_cap: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Disconnection spectrum, connected-subset counts and tree count.
    Profile {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Number of spanning trees.
    Trees {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Bond counts by size and the split of each d_i by smallest bond.
    Bonds {
        #[arg(short, long)]
        input: PathBuf,
        /// Also list the bonds as edge ids.
        #[arg(long)]
        list: bool,
    },
    /// Exact comparison of two reliability polynomials on (0, 1).
    Compare { a: PathBuf, b: PathBuf },
    /// The optimal (m - k, m)-graph; k = 4, 5 give conjectural generators.
    Optimal {
        #[arg(short, long, allow_negative_numbers = true)]
        k: i64,
        #[arg(short, long)]
        m: usize,
        /// Weighting rule for k = 4, 5: balanced, ath_sobel_a, ath_sobel_b.
        #[arg(long, default_value = "balanced")]
        flavor: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The K_{3,3} weighting built from perfect matchings.
    Wang {
        #[arg(short, long)]
        m: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// A named pair of graphs; with -o, writes g.txt, g_prime.txt and
    /// g_double_prime.txt into the directory.
    Pair {
        name: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Lists the legal edge shifts, or applies one of them.
    Shift {
        #[arg(short, long)]
        input: PathBuf,
        /// Position in the listing of the shift to apply.
        #[arg(long)]
        index: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Closure under edge shifts, up to isomorphism.
    Equivclass {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long, default_value_t = relopt::equivalence::DEFAULT_CLASS_CAP)]
        cap: usize,
    },
    /// Proper distillation with chain lengths as weights.
    Distill {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The subdivision described by a weighted distillation file.
    Realize {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Certifies a candidate against the corpus of connected (m - k, m)-graphs.
    Verify {
        #[arg(short, long, allow_negative_numbers = true)]
        k: i64,
        #[arg(short, long)]
        m: usize,
        /// Candidate graph; defaults to the constructed optimal graph.
        #[arg(long)]
        candidate: Option<PathBuf>,
        #[command(flatten)]
        budget: Budget,
    },
    /// Connected (n, m)-multigraphs, one per isomorphism class.
    Enumerate {
        #[arg(short, long)]
        n: usize,
        #[arg(short, long)]
        m: usize,
        /// Print only the number of graphs.
        #[arg(long)]
        count: bool,
        #[command(flatten)]
        budget: Budget,
    },
    /// Runs a named reproduction and prints PASS or FAIL.
    Counterexample { name: String },
}

#[derive(Args, Debug, Clone, Copy)]
struct Budget {
    /// Maximum number of search nodes.
    #[arg(long, default_value_t = relopt::verify::DEFAULT_CANDIDATE_BUDGET)]
    budget: usize,
    /// Maximum number of graphs in the corpus.
    #[arg(long, default_value_t = relopt::verify::DEFAULT_SURVIVOR_BUDGET)]
    survivors: usize,
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
    match commands::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
