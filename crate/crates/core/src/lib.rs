//! Zero forcing and failed zero forcing on small simple graphs.
//!
//! Graphs have at most 62 vertices and store adjacency as `u64` bitsets.

pub mod canon;
pub mod enumerate;
pub mod forcing;
pub mod graph;
pub mod io;
pub mod structure;
pub mod verify;

pub use canon::{canonical_form, is_isomorphic, CanonicalForm};
pub use forcing::{
    closure, failed_zero_forcing_number, failed_zero_forcing_number_brute_force, min_fort,
    zero_forcing_number,
};
pub use graph::{Graph, GraphError, VertexSet, MAX_ORDER};
