use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use specprime::checks::{all_checks, checks_for, run_check, RunConfig};
use specprime::dot::{export_dot, SpaceKind};
use specprime::{corpus, parse_input, run_job, seed_from_env, Error, JobSpec};
use specprime_core::sprime::DEFAULT_BRUTEFORCE_CAP;

/// Verify semigroup primes, their hull-kernel topology and the maps relating
/// them to the prime spectrum.
#[derive(Debug, Parser)]
#[command(name = "specprime", version)]
struct Cli {
    /// Largest ring whose semigroup primes are also found by exhaustive search.
    #[arg(long, global = true, default_value_t = DEFAULT_BRUTEFORCE_CAP)]
    bruteforce_cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run a job file and write its reports.
    Run { job: PathBuf },
    /// Print the Hasse diagram of one space of an input as DOT.
    Dot {
        #[arg(long)]
        space: SpaceKind,
        input: PathBuf,
        /// Write to this file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run checks on one input and print one JSON report per line.
    Check(CheckArgs),
    /// Print the default corpus job.
    Corpus {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List check names with the input kinds they apply to.
    Checks,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct CheckGroup {
    /// Every check that applies to the input.
    #[arg(long)]
    all: bool,
    /// A check to run; repeatable.
    #[arg(long = "check", value_name = "NAME")]
    check: Vec<String>,
}

#[derive(Debug, Args)]
struct CheckArgs {
    #[command(flatten)]
    which: CheckGroup,
    input: PathBuf,
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Error::io(path, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    let cfg = RunConfig { bruteforce_cap: cli.bruteforce_cap, seed: seed_from_env()? };
    match cli.command {
        Command::Run { job } => {
            let spec = JobSpec::load(&job)?;
            let outcome = run_job(&spec, &cfg)?;
            eprintln!(
                "{} reports, {} failed, {} files under {}",
                outcome.reports.len(),
                outcome.failures(),
                outcome.artifacts.len(),
                spec.output.display()
            );
            Ok(outcome.exit_code() as u8)
        }
        Command::Dot { space, input, out } => {
            let input = parse_input(&read(&input)?)?.build()?;
            emit(out.as_deref(), &export_dot(&input, space)?)?;
            Ok(0)
        }
        Command::Check(args) => {
            let input = parse_input(&read(&args.input)?)?.build()?;
            let names: Vec<&str> = if args.which.all {
                checks_for(input.kind()).to_vec()
            } else {
                let mut names = Vec::new();
                for n in &args.which.check {
                    let known =
                        all_checks().into_iter().find(|c| c == n).ok_or_else(|| Error::UnknownCheck(n.clone()))?;
                    if !checks_for(input.kind()).contains(&known) {
                        return Err(Error::Usage(format!("check {n} does not apply to a {:?} input", input.kind())));
                    }
                    names.push(known);
                }
                names
            };
            let mut failed = false;
            for name in names {
                let report = run_check(&input, name, &cfg).expect("applicability checked above");
                failed |= !report.passed();
                println!("{}", serde_json::to_string(&report).expect("reports serialize"));
            }
            Ok(if failed { 2 } else { 0 })
        }
        Command::Corpus { out } => {
            emit(out.as_deref(), &corpus::render(&corpus::default_job()))?;
            Ok(0)
        }
        Command::Checks => {
            use specprime::InputKind::*;
            for kind in [Ring, Poset, Hom, Profile, Ufd] {
                println!("{}: {}", serde_json::to_value(kind).unwrap().as_str().unwrap(), checks_for(kind).join(", "));
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
