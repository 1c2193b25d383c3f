//! Exact independent set sequences of finite simple graphs.
//!
//! The crate builds the bipartite families studied here, counts independent
//! sets by size with three mutually checking engines (closed forms, a
//! memoized deletion recurrence, and brute-force enumeration), and analyzes
//! the shape of the resulting sequences: unimodality, log-concavity,
//! plateaus, and explicit dip witnesses. All counts are exact big integers.

pub mod analysis;
mod bitset;
pub mod counting;
mod error;
pub mod graph;
pub mod graph6;
pub mod polynomial;
pub mod sequence;

pub use bitset::VertexSet;
pub use error::{Error, Result};
