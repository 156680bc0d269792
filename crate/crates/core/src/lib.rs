//! Perfect matchings, odd edge cuts and joins in bridgeless cubic graphs.
//!
//! Every search in this crate is exhaustive within an explicit budget and
//! returns data that can be re-checked independently: matchings as edge
//! sets, cuts as vertex sets, colourings as edge maps.

pub mod error;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod sets;
pub mod walk;
pub mod connectivity;
pub mod hamilton;
pub mod matchings;
pub mod cuts;
pub mod coloring;
pub mod caps;
pub mod fractional;
pub mod traceable;

pub use error::{Error, Result};
pub use graph::{
    boundary, bridges, build_graph, components_after_removal, is_bridgeless, Component,
    CubicGraph, EdgeId, GraphId, VertexId,
};
pub use sets::{EdgeSet, VertexSet};
pub use walk::Walk;
