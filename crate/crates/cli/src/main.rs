//! Command-line front end: build the constructed families, count
//! independent sets by size, analyze sequence shape, and rerun the
//! golden counterexample check.
//!
//! Exit codes: 0 success, 1 usage or parse errors, 2 resource caps,
//! 3 reproduction or unimodality-expectation mismatches.

mod commands;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use indseq::counting::CountingLimits;

#[derive(Parser)]
#[command(
    name = "indseq",
    version,
    about = "Exact independent set sequences: construct, count, analyze"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    output: OutputFormat,

    /// Vertex cap for the brute-force engine
    #[arg(long, global = true, env = "INDSEQ_BRUTE_CAP",
          default_value_t = CountingLimits::default().brute_force_cap)]
    brute_cap: usize,

    /// Vertex cap for the recurrence engine
    #[arg(long, global = true, env = "INDSEQ_RECURRENCE_CAP",
          default_value_t = CountingLimits::default().recurrence_cap)]
    recurrence_cap: usize,

    /// Memo table budget for the recurrence engine, in bytes
    #[arg(long, global = true, env = "INDSEQ_MEMO_BUDGET",
          default_value_t = CountingLimits::default().memo_budget_bytes)]
    memo_budget: usize,
}

impl Cli {
    fn limits(&self) -> CountingLimits {
        CountingLimits {
            brute_force_cap: self.brute_cap,
            recurrence_cap: self.recurrence_cap,
            memo_budget_bytes: self.memo_budget,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph from one of the two families and print it as graph6
    Construct {
        #[command(subcommand)]
        family: Family,
    },
    /// Exact counts of independent sets by size
    Sequence {
        #[command(flatten)]
        input: GraphInput,
        /// Restrict output to these sizes
        #[arg(long, value_name = "T,T,...")]
        only_t: Option<String>,
    },
    /// Shape report: unimodality, log-concavity, plateaus, dip witness
    Analyze {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Recompute the G(100, 159) counterexample and check its three golden counts
    ReproducePaper,
    /// Scan a range of a at the suggested b and report sequence shapes
    Search {
        /// Inclusive range of a, written LO..HI
        #[arg(long, value_name = "LO..HI")]
        a: String,
        /// Offset added to the suggested b
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        b_offset: i64,
    },
    /// Sample seeded random trees and check each sequence is unimodal
    Trees {
        /// Vertices per tree
        #[arg(long)]
        n: u64,
        /// Number of trees
        #[arg(long)]
        count: u64,
        /// Seed for the first tree; tree i uses seed + i
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum Family {
    /// G(a, b): independent block joined to a matched block pair
    Gab {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        /// Also emit an adjacency listing
        #[arg(long)]
        adjacency: bool,
    },
    /// Stacked construction with k upper blocks over a matched base
    Generalized {
        #[arg(long)]
        a: u64,
        /// Comma-separated block sizes, or from-balance with --k
        #[arg(long, value_name = "SIZES|from-balance")]
        parts: String,
        /// Number of upper blocks, only with --parts from-balance
        #[arg(long)]
        k: Option<usize>,
        /// Also emit an adjacency listing
        #[arg(long)]
        adjacency: bool,
    },
}

#[derive(Args)]
struct GraphInput {
    /// G(a, b) parameters
    #[arg(long, value_name = "A,B")]
    gab: Option<String>,
    /// Base block size of the stacked construction
    #[arg(long, value_name = "A")]
    generalized: Option<u64>,
    /// Upper block sizes: comma-separated, or from-balance with --k
    #[arg(long, value_name = "SIZES|from-balance")]
    parts: Option<String>,
    /// Number of upper blocks, only with --parts from-balance
    #[arg(long)]
    k: Option<usize>,
    /// graph6 input: a file path, or - for stdin
    #[arg(long, value_name = "FILE")]
    graph6: Option<String>,
    /// Counting engine
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    method: Method,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Closed form for families, recurrence for graph6 input
    Auto,
    Closed,
    Recurrence,
    Brute,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
    Csv,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
