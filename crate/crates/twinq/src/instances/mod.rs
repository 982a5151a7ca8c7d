//! Problem instances: graphs, set-cover systems, selections, generation,
//! and the JSON interchange format.
//!
//! Instances are immutable after construction and every constructor
//! validates the full set of type invariants, so downstream code can rely
//! on them without re-checking.

mod generate;
mod graph;
mod json;
mod selection;
mod setcover;

pub use generate::{random_regular_graph, REGULAR_GRAPH_RETRY_BUDGET};
pub use graph::Graph;
pub use json::{parse_instance, serialize_instance, Instance};
pub use selection::Selection;
pub use setcover::SetCoverInstance;
