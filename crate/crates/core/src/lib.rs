//! Intrinsic linking for small graphs.
//!
//! Two independent deciders answer whether a graph is intrinsically linked:
//! a Petersen-family minor search ([`minors::is_il_minor`]) and a mod-2
//! linking-number system over a fixed book embedding
//! ([`linking::is_nil_linking`]). On top of them sit planarity and apex
//! classification, the maximal linklessly embeddable (maxnIL) census
//! machinery and file-level pipeline helpers used by the `linkless` CLI.

pub mod g6;
pub mod graph;
pub mod linking;
pub mod minors;
pub mod pipeline;
pub mod planarity;
pub mod search;

pub use graph::{DegreeProfile, Edge, Graph, GraphError, VertexSet, MAX_VERTICES};
