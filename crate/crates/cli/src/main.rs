use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use tangle_cli::commands::{self, Options};
use tangle_cli::{criteria, CliError, CliResult, Outcome, Status};
use tangle_core::classify::{Coarsening, Selector};
use tangle_core::explore::ExploreBudget;

/// Crossing classification for tangle diagrams in .tdg files.
#[derive(Parser)]
#[command(name = "tdg", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    flags: Flags,
}

#[derive(Args)]
struct Flags {
    /// Append the universal index: exact-abelian, mod-kappa or mod-centralizer.
    #[arg(long, global = true)]
    coarsening: Option<String>,
    /// Most crossings a searched diagram may have.
    #[arg(long, global = true, default_value_t = ExploreBudget::default().max_crossings)]
    budget_crossings: usize,
    /// Longest word carried by an inserted second move.
    #[arg(long, global = true, default_value_t = ExploreBudget::default().max_word_len)]
    budget_word: usize,
    /// Deepest move sequence the search follows.
    #[arg(long, global = true, default_value_t = ExploreBudget::default().max_depth)]
    depth: usize,
    /// Exponent window for surface groups where the quotient tests search.
    #[arg(long, global = true)]
    bound: Option<u32>,
    /// One key=value record per line.
    #[arg(long, global = true)]
    machine: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Parse files and report their size or every rule they break.
    Validate {
        paths: Vec<PathBuf>,
    },
    /// Per-crossing types, homotopy values, tribes and phratries.
    Classify {
        path: PathBuf,
    },
    Tribes {
        path: PathBuf,
    },
    Phratries {
        path: PathBuf,
    },
    /// Index polynomial graded by universal, homotopy-only or component-only.
    Poly {
        path: PathBuf,
        #[arg(long, default_value = "universal")]
        selector: String,
    },
    /// Apply a move trace and check every step.
    Replay {
        path: PathBuf,
        trace: PathBuf,
    },
    /// Apply seeded random moves and check every step.
    Randomwalk {
        path: PathBuf,
        #[arg(long, default_value_t = 100)]
        steps: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Search move space and compare the crossing graph with the classifier.
    Explore {
        path: PathBuf,
    },
    /// Run the acceptance checks, or only those numbered.
    Selftest {
        only: Vec<u8>,
    },
}

fn options(flags: &Flags) -> CliResult<Options> {
    let coarsening = flags.coarsening.as_deref().map(str::parse::<Coarsening>).transpose()?;
    let budget = ExploreBudget {
        max_crossings: flags.budget_crossings,
        max_word_len: flags.budget_word,
        max_depth: flags.depth,
        ..ExploreBudget::default()
    };
    let color = std::env::var("TDG_COLOR").is_ok_and(|v| !v.is_empty() && v != "0");
    Ok(Options { coarsening, budget, bound: flags.bound, machine: flags.machine, color: color && !flags.machine })
}

fn selftest(only: &[u8], opts: &Options) -> Outcome {
    let numbers: Vec<u8> = if only.is_empty() { criteria::numbers().collect() } else { only.to_vec() };
    let mut text = String::new();
    let mut status = Status::Ok;
    for n in numbers {
        let Some(c) = criteria::run(n) else {
            text.push_str(&format!("no check numbered {n}\n"));
            status = Status::InputError;
            continue;
        };
        if !c.passed && status == Status::Ok {
            status = Status::VerificationFailed;
        }
        text.push_str(&c.line(opts.color));
        text.push('\n');
    }
    Outcome { text, status }
}

fn run(cli: &Cli) -> CliResult<Outcome> {
    let opts = options(&cli.flags)?;
    let load = |p: &Path| commands::load(p, &opts);
    match &cli.command {
        Command::Validate { paths } => {
            if paths.is_empty() {
                return Err(CliError::Usage("validate needs at least one path".into()));
            }
            let refs: Vec<&Path> = paths.iter().map(PathBuf::as_path).collect();
            Ok(commands::validate(&refs))
        }
        Command::Classify { path } => commands::classify(&load(path)?, &opts),
        Command::Tribes { path } => commands::tribes(&load(path)?, &opts),
        Command::Phratries { path } => commands::phratries(&load(path)?, &opts),
        Command::Poly { path, selector } => commands::poly(&load(path)?, selector.parse::<Selector>()?),
        Command::Replay { path, trace } => commands::replay(&load(path)?, &commands::read(trace)?),
        Command::Randomwalk { path, steps, seed } => commands::randomwalk(&load(path)?, *steps, *seed),
        Command::Explore { path } => commands::explore(&load(path)?, &opts),
        Command::Selftest { only } => Ok(selftest(only, &opts)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.status as u8)
        }
        Err(e) => {
            eprintln!("tdg: {e}");
            ExitCode::from(Status::InputError as u8)
        }
    }
}
