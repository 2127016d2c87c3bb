//! Cayley graphs of the symmetric group generated by transpositions.
//!
//! A set `T` of transpositions of `{1..n}` is at the same time the edge set
//! of a graph on `n` vertices (the transposition graph) and a candidate
//! generating set of the symmetric group. This crate builds the Cayley graph
//! `Cay(S_n, T)` explicitly at desk scale (`n <= 7`, best effort at 8),
//! computes its full automorphism group by orbit–stabilizer factorization,
//! decides normality by two independent criteria, and verifies the structural
//! facts that relate short cycles and complete bipartite subgraphs of the
//! Cayley graph to commutation patterns of the generators.
//!
//! The crate is `no_std` (with `alloc`); all IO, parsing and report
//! serialization live in the companion CLI crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod cayley;
pub mod graph;
pub mod perm;
pub mod structure;
pub mod symmetry;
pub mod transgraph;

mod error;

pub use error::{Error, Result};
