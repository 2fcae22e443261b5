//! Degree-parity toolkit for graphs and digraphs.
//!
//! The crate decides and constructs out-degree parity 2-partitions of
//! digraphs through GF(2) linear systems, constructs the always-existing
//! degree-parity partitions of undirected graphs, and builds large induced
//! subgraphs realizing a prescribed per-vertex degree parity. Brute-force
//! oracles for everything live in [`oracle`]; seeded instance generators in
//! [`generate`].

pub mod digraph_parity;
pub mod gallai;
pub mod generate;
pub mod gf2;
pub mod graph;
pub mod io;
pub mod odd_subgraph;
pub mod oracle;
pub mod parity_subgraph;

pub use gf2::{BitMatrix, BitVector};
pub use graph::{Digraph, Graph, LabelFn, Partition};
