//! Command-line surface for the Cayley graph analyzer: input parsing,
//! JSON report types, and the drivers behind each subcommand.

pub mod parse;
pub mod report;
pub mod rng;
pub mod run;

pub use parse::{parse_edge_list, ParseError};
pub use run::{analyze, lemmas, lift, sweep, AnalyzeOptions, MethodArg};

/// Default seed for the deterministic base-point sampler.
pub const DEFAULT_SEED: u64 = 42;
/// Default number of random base points for the lemma suites.
pub const DEFAULT_SIGMAS: usize = 5;
