//! Exact desk-scale toolkit for graph divisibility.
//!
//! The crate turns two pieces of combinatorics into runnable, checkable
//! code:
//!
//! - a constructive division pipeline: detect k-simplicial vertices, build
//!   elimination orderings, convert an ordering into a partition of the
//!   vertex set into `k + 1` parts none of which contains a maximum clique,
//!   and color the graph with at most `(k+1)^(omega-1)` colors by recursing
//!   on the parts — with every certificate re-verified by independent
//!   oracles before it is emitted;
//! - exact small-instance oracles (maximum clique, chromatic number,
//!   perfectness, perfect divisibility, k-divisibility) plus a verifier and
//!   a stochastic searcher for K4-free low-independence graphs, the
//!   ingredients of the Ramsey-style counterexample argument.
//!
//! Everything is deterministic: identical inputs (and seeds) produce
//! byte-identical certificates.

pub mod divider;
pub mod evenhole;
pub mod formats;
pub mod graph;
pub mod oracles;
pub mod ramsey;
pub mod simplicial;

mod cycles;

pub use graph::{Graph, GraphError, VertexSet};
