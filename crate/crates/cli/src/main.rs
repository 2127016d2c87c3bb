//! `cayley` analyzes Cayley graphs of the symmetric group generated by
//! transposition sets: automorphism group orders, normality by two
//! criteria, structural lemma suites, exhaustive sweeps over all small
//! transposition graphs, and the line-graph automorphism correspondence.
//!
//! Exit codes: 0 success, 1 parse/usage error, 2 non-generating set,
//! 3 capacity exceeded, 4 lift failure, 5 lemma violations found.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cayley_cli::run::{self, AnalyzeOptions, MethodArg};
use cayley_cli::{parse_edge_list, DEFAULT_SEED, DEFAULT_SIGMAS};
use cayley_core::transgraph::TranspositionSet;
use cayley_core::Error as CoreError;

#[derive(Parser)]
#[command(name = "cayley")]
#[command(about = "Cayley graphs of symmetric groups over transposition generators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodFlag {
    FixNeighborhood,
    Conjugation,
    Both,
}

impl From<MethodFlag> for MethodArg {
    fn from(m: MethodFlag) -> Self {
        match m {
            MethodFlag::FixNeighborhood => MethodArg::FixNeighborhood,
            MethodFlag::Conjugation => MethodArg::Conjugation,
            MethodFlag::Both => MethodArg::Both,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis of one transposition set from an edge-list file
    Analyze {
        /// Edge-list file (first non-comment line n, then "i j" lines)
        path: PathBuf,
        /// Normality criterion (default: both for n >= 5, conjugation
        /// otherwise; fix-neighborhood needs n >= 5 and falls back to
        /// conjugation below that)
        #[arg(long, value_enum)]
        method: Option<MethodFlag>,
        /// Skip the structural lemma suites
        #[arg(long)]
        skip_lemmas: bool,
        /// Number of random base points for the lemma suites
        #[arg(long, default_value_t = DEFAULT_SIGMAS)]
        sigmas: usize,
        /// Seed for the base-point sampler
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Write the transposition graph as DOT here (and the Cayley
        /// graph next to it when n <= 4)
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Aligned table instead of JSON
        #[arg(long)]
        human: bool,
    },
    /// Analyze every connected transposition-graph class on n vertices
    Sweep {
        /// Number of vertices (3 to 6)
        n: usize,
        /// Worker threads (default: CAYLEY_JOBS or all cores)
        #[arg(long)]
        jobs: Option<usize>,
        /// Aligned table instead of JSON
        #[arg(long)]
        human: bool,
    },
    /// Run only the structural lemma suites
    Lemmas {
        path: PathBuf,
        /// Number of random base points besides the identity
        #[arg(long, default_value_t = DEFAULT_SIGMAS)]
        sigmas: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        human: bool,
    },
    /// List the automorphism correspondence between the transposition
    /// graph and its line graph (n >= 5)
    Lift {
        path: PathBuf,
        #[arg(long)]
        human: bool,
    },
}

fn exit_code_for(e: &CoreError) -> u8 {
    match e {
        CoreError::NotGenerating => 2,
        CoreError::Capacity { .. } => 3,
        CoreError::NotLiftable => 4,
        _ => 1,
    }
}

fn load_tset(path: &PathBuf) -> Result<TranspositionSet, u8> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", path.display());
        1u8
    })?;
    parse_edge_list(&text).map_err(|e| {
        eprintln!("error: {}: {e}", path.display());
        1u8
    })
}

fn emit<T: serde::Serialize>(value: &T, human: Option<String>) {
    match human {
        Some(text) => print!("{text}"),
        None => println!(
            "{}",
            serde_json::to_string_pretty(value).expect("reports serialize")
        ),
    }
}

fn jobs_default(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var("CAYLEY_JOBS")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(0)
}

fn run_command(cli: Cli) -> u8 {
    match cli.command {
        Command::Analyze {
            path,
            method,
            skip_lemmas,
            sigmas,
            seed,
            dot,
            human,
        } => {
            let tset = match load_tset(&path) {
                Ok(t) => t,
                Err(code) => return code,
            };
            let opts = AnalyzeOptions {
                method: method.map(MethodArg::from),
                skip_lemmas,
                sigmas,
                seed,
            };
            match run::analyze(&tset, &opts) {
                Ok(report) => {
                    if let Some(dot_path) = dot {
                        if let Err(e) = run::write_dot(&tset, &dot_path) {
                            eprintln!("error: cannot write {}: {e}", dot_path.display());
                            return 1;
                        }
                    }
                    emit(&report, human.then(|| run::render_analysis_human(&report)));
                    0
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    exit_code_for(&e)
                }
            }
        }
        Command::Sweep { n, jobs, human } => match run::sweep(n, jobs_default(jobs)) {
            Ok(summary) => {
                emit(&summary, human.then(|| run::render_sweep_human(&summary)));
                0
            }
            Err(e) => {
                eprintln!("error: {e}");
                exit_code_for(&e)
            }
        },
        Command::Lemmas {
            path,
            sigmas,
            seed,
            human,
        } => {
            let tset = match load_tset(&path) {
                Ok(t) => t,
                Err(code) => return code,
            };
            match run::lemmas(&tset, sigmas, seed) {
                Ok(report) => {
                    let pass = report.pass;
                    emit(&report, human.then(|| run::render_lemmas_human(&report)));
                    if pass {
                        0
                    } else {
                        5
                    }
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    exit_code_for(&e)
                }
            }
        }
        Command::Lift { path, human } => {
            let tset = match load_tset(&path) {
                Ok(t) => t,
                Err(code) => return code,
            };
            match run::lift(&tset) {
                Ok(report) => {
                    let ok = report.bijective;
                    emit(&report, human.then(|| run::render_lift_human(&report)));
                    if ok {
                        0
                    } else {
                        eprintln!("error: correspondence is not bijective");
                        4
                    }
                }
                Err(CoreError::NotGenerating) => {
                    eprintln!("error: transposition graph is not connected");
                    2
                }
                Err(CoreError::NotLiftable) => {
                    eprintln!("error: a line-graph automorphism has no lift");
                    4
                }
                Err(CoreError::Precondition(msg)) => {
                    eprintln!("error: {msg}");
                    4
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    exit_code_for(&e)
                }
            }
        }
    }
}

fn main() -> ExitCode {
    ExitCode::from(run_command(Cli::parse()))
}
