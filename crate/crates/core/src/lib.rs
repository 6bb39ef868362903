//! Exact k-quasiperfect domination for small simple connected graphs.
//!
//! A vertex set `S` is k-quasiperfect dominating when every vertex outside
//! `S` has between one and `k` neighbors in `S`. The crate computes the
//! minimum size of such sets for every `k` (the domination chain), generates
//! small graphs up to isomorphism, builds the standard graph families with
//! known parameters, and checks structural claims about the chain
//! exhaustively over small orders.

pub mod domination;
pub mod enumerate;
pub mod families;
pub mod graph;
pub mod par;
pub mod verify;

pub use graph::{Graph, GraphError, VertexSet};
pub use par::Exec;
