//! `tourney`: generate tournaments, solve them exactly, count queries, play
//! adversary games and run seeded benchmark batches.
//!
//! Exit status is 0 on success, 2 when a query bound, correctness check or
//! top-cycle promise fails, and 3 on parse or configuration errors.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::{GameAlg, Input, Outcome, QueryParams};
use output::Format;
use tourney_core::adversary::{AdversaryKind, Branch};
use tourney_core::generate::GenKind;
use tourney_core::query::QueryAlgorithm;
use tourney_core::SolutionKind;

const EXIT_VIOLATION: u8 = 2;
const EXIT_CONFIG: u8 = 3;

#[derive(Parser)]
#[command(name = "tourney", version, about = "Tournament solutions and query-counted algorithms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a tournament file.
    Gen {
        /// random, regular, regular-flip or planted-tc.
        #[arg(long, default_value = "random")]
        kind: GenKind,
        #[arg(long)]
        n: usize,
        /// Top-cycle size for planted-tc.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute a solution exactly. Prints the members on one line unless a
    /// format is given.
    Solve {
        /// Tournament file; stdin when absent or `-`.
        file: Option<PathBuf>,
        #[arg(long)]
        solution: SolutionKind,
        /// Also print the lottery (markov or bipartisan) as exact fractions.
        #[arg(long)]
        lottery: bool,
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a query-counted algorithm on a file or a generated tournament.
    Query {
        /// Tournament file; when absent a tournament is generated from
        /// `--n`, `--seed` and `--kind`.
        file: Option<PathBuf>,
        #[command(flatten)]
        alg: AlgArgs,
        #[arg(long)]
        kind: Option<GenKind>,
        #[arg(long, required_unless_present = "file")]
        n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Play a reference algorithm against an adversary.
    Game {
        /// regular, bipartisan, uncovered, banks or topcycle.
        #[arg(long)]
        adversary: AdversaryKind,
        #[arg(long, value_enum, default_value = "exhaustive")]
        algorithm: GameAlg,
        #[arg(long)]
        n: usize,
        /// Promise for the top-cycle-k algorithm.
        #[arg(long)]
        k: Option<usize>,
        /// contain or omit the pivotal vertex (skipping algorithms).
        #[arg(long, default_value = "contain")]
        branch: Branch,
        /// Target solution; only the regular adversary takes one.
        #[arg(long)]
        solution: Option<SolutionKind>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded batch of query-counted runs: one row per trial and an
    /// aggregate row per size.
    Bench {
        #[command(flatten)]
        alg: AlgArgs,
        /// Sizes: `8`, `8,16,32`, `4..64` or `4..=64`.
        #[arg(long, value_parser = commands::parse_sizes)]
        n: std::vec::Vec<usize>,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long)]
        kind: Option<GenKind>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct AlgArgs {
    /// condorcet-winner, condorcet-non-losers, top-cycle-k or solution-k.
    #[arg(long)]
    algorithm: QueryAlgorithm,
    #[arg(long)]
    k: Option<usize>,
    /// Solution read off the top cycle by solution-k.
    #[arg(long)]
    solution: Option<SolutionKind>,
    #[arg(long)]
    cap: Option<usize>,
    /// Check that the returned set dominates the rest and fits the promise.
    #[arg(long)]
    verify: bool,
}

impl AlgArgs {
    fn params(&self) -> QueryParams {
        QueryParams {
            algorithm: self.algorithm,
            k: self.k,
            solution: self.solution,
            caps: commands::caps(self.cap),
            verify: self.verify,
        }
    }
}

fn run(cmd: Command) -> anyhow::Result<Outcome> {
    match cmd {
        Command::Gen { kind, n, k, seed, out } => commands::gen(kind, n, k, seed, out.as_deref()),
        Command::Solve { file, solution, lottery, cap, format, out } => {
            let t = commands::read_tournament(file.as_deref())?;
            commands::solve(&t, solution, lottery, &commands::caps(cap), format, out.as_deref())
        }
        Command::Query { file, alg, kind, n, seed, format, out } => {
            let input = match (file, n) {
                (Some(path), _) => Input::File(Some(path)),
                (None, Some(n)) => Input::Generated { kind, n, seed },
                (None, None) => unreachable!("clap requires --n without a file"),
            };
            commands::query(&alg.params(), input, format, out.as_deref())
        }
        Command::Game { adversary, algorithm, n, k, branch, solution, seed, cap, format, out } => {
            let caps = commands::caps(cap);
            commands::game(adversary, algorithm, n, k, branch, solution, seed, &caps, format, out.as_deref())
        }
        Command::Bench { alg, n, trials, kind, seed, format, out } => {
            commands::bench(&alg.params(), kind, &n, trials as usize, seed, format, out.as_deref())
        }
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    use tourney_core::Error;
    match err.downcast_ref::<Error>() {
        Some(Error::PromiseViolated(_) | Error::InconsistentAdversary(_)) => EXIT_VIOLATION,
        _ => EXIT_CONFIG,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_CONFIG) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Violation) => ExitCode::from(EXIT_VIOLATION),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
