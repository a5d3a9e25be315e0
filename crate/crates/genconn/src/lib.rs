//! Exact computation of generalized (Steiner) connectivity for small graphs.
//!
//! The crate computes, by exhaustive search, the maximum number of pairwise
//! internally disjoint trees connecting a terminal set, packs edge-disjoint
//! spanning trees via the partition criterion and a constructive packer,
//! classifies the graphs whose k-terminal connectivity collapses to one tree,
//! and reproduces the extremal edge counts for those classes by isomorph-free
//! enumeration.

pub mod blocks;
pub mod canon;
pub mod ears;
pub mod error;
pub mod enumerate;
pub mod graph;
pub mod graph6;
pub mod packing;
pub mod sets;
pub mod steiner;

pub use blocks::{block_decomposition, bridges, BlockDecomposition, ComponentClass};
pub use canon::{canonical_form, canonical_labeling};
pub use error::{Error, Result};
pub use graph::Graph;
pub use graph6::{graph_from_graph6, graph_to_graph6, parse_graph6_lines};
pub use sets::{EdgeSet, VertexSet};
