//! Exact edge-domination and matching invariants of small graphs.
//!
//! The crate decides whether a graph is well-edge-dominated (every minimal
//! edge dominating set is minimum), builds the named graphs and
//! parameterized families that arise in the study of that class, and checks
//! structural characterizations of it by exhaustive search over small
//! graphs.

pub mod canon;
pub mod census;
pub mod domination;
mod edge_index;
pub mod edgelist;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod matching;
pub mod verify;

pub use canon::{canonical_code, CanonicalCode};
pub use census::{enumerate, enumerate_connected, invariant_report, CensusFilter, InvariantReport};
pub use domination::{eds_certificate, is_wed, EdsCertificate};
pub use edge_index::MAX_EDGES;
pub use families::{FamilyId, FamilySpec};
pub use graph::{Edge, EdgeSet, Girth, Graph, GraphError};
pub use verify::{verify, TheoremId, TheoremVerdict};
