//! File formats and tooling around `bitpath-core`. The `bitpath` binary
//! wraps them.

pub mod bench;
pub mod edgelist;
pub mod generate;
pub mod hierfile;
pub mod verify;

pub use bench::{run_bench, run_scaling, BenchParams, BenchReport, QueryRecord};
pub use edgelist::{parse_edge_list, write_edge_list, EdgeList, ParseError, ParseErrorKind};
pub use generate::generate_modmul;
pub use hierfile::{read_hierarchy, write_hierarchy, HierarchyFileError};
pub use verify::{oracle_of, random_graph, random_instance, run_verify};
