//! Exact algorithms for Hamiltonian linkages, path covers and related problems on
//! graphs with bounded independence number.
//!
//! The central decider is [`solver::ham_linkage`]: given a graph with
//! independence number below `k` and terminal pairs, it decides whether the
//! pairs can be joined by vertex-disjoint paths covering every vertex. It runs
//! in polynomial time for fixed `k` and number of pairs. Brute-force oracles in
//! [`oracle`] cross-check everything on small inputs.

mod bits;
pub mod census;
pub mod connectivity;
pub mod constructor;
pub mod error;
pub mod graph;
pub mod labelling;
pub mod oracle;
pub mod par;
pub mod reductions;
pub mod scenarios;
pub mod solver;
pub mod structural;

pub use error::{Error, Result};
pub use graph::{parse_graph, Graph, VertexSet};
