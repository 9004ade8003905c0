//! Shortest paths over graphs stored as rows of bits.
//!
//! A graph of order `V` is a pair of row families: row `v` of the outgoing
//! family marks the successors of `v`, row `v` of the incoming family marks
//! its predecessors. Sets of vertices are [`EdgeForm`]s, and a search is a
//! sequence of whole-set steps: stepping a form forward ORs together the
//! outgoing rows of every vertex it contains.
//!
//! On top of the flat search ([`unvalued`], [`valued`]) sits a multilevel
//! one ([`hierarchy`]): the graph is repeatedly quotiented by grouping
//! vertices, candidate paths are found on a small quotient and refined back
//! down level by level.
//!
//! The crate is `no_std` and only needs `alloc`.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod error;
pub mod form;
pub mod graph;
pub mod hierarchy;
pub mod unvalued;
pub mod valued;

pub use error::{Error, Result};
pub use form::EdgeForm;
pub use graph::{Direction, Graph, Path, VertexId};
pub use hierarchy::{
    build_hierarchy, build_hierarchy_with, choose_start_level, hierarchical_shortest_path, pair_partition, refine_path,
    thicken, ConsecutivePairs, Hierarchy, Level, Partition, PartitionStrategy, SearchOptions, DEFAULT_BUDGET,
};
pub use unvalued::{
    enumerate_paths, format_path, meet_layers, shortest_path_length, shortest_paths, LayerMeet, QueryResult,
    DEFAULT_MAX_PATHS,
};
pub use valued::{
    hierarchical_weighted_path, min_cost_at_hops, rationalize_weights, shortest_weighted_path, thicken_valued,
    HopCostTable, RationalWeight, WeightedQueryResult,
};
