//! k simple shortest paths between all vertex pairs, weight-ordered
//! enumeration of simple paths and cycles, k shortest simple cycles through
//! a vertex, and executable reductions from minimum-weight cycle and APSP.
//!
//! Vertex ids are dense `0..n`. Paths are compared by the total order
//! `(weight, edge count, vertex sequence)` everywhere, so every result is
//! deterministic.

pub mod apsisp;
pub mod cycles;
pub mod enumerate;
pub mod error;
pub mod exclude;
pub mod gen;
pub mod graph;
pub mod oracles;
pub mod path;
pub mod reductions;
pub mod split;
pub mod sssp;
pub mod testgraphs;
pub mod weight;

pub use apsisp::{apsisp, compute_apsisp, compute_q2, two_apsisp, ApsispConfig, PathTable};
pub use cycles::{k_avsisc, k_sisc, undirected_k_sisc, CycleSet};
pub use enumerate::{all_sisc, all_sisp, AllSisc, AllSisp};
pub use error::{Error, Result};
pub use graph::{Edge, EdgeId, Graph, GraphError, ParseError, VertexId};
pub use path::{Cycle, PathArena, PathId, PathRecord, SimplePath};
pub use reductions::{GadgetKind, GadgetQuery, GadgetResult, MinCycle};
pub use sssp::{sssp, ShortestPathTree};
pub use weight::{PathWeight, Weight};
