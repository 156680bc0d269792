//! Matchings and joins built from a Hamiltonian path of a cubic graph with
//! chromatic index 4.
//!
//! The path is coloured alpha/beta along its edges, the alpha class is a
//! perfect matching, and its 2-factor has either no odd cycle (the graph is
//! 3-edge-colourable after all) or exactly two, one at each end of the path.
//! A chain of overlapping cycles links them, and three alpha-disjoint walks
//! from the first odd cycle to the last are read off an auxiliary graph.
//! The walks are then rerouted cycle by cycle until their alpha edges extend
//! to perfect matchings.

mod auxiliary;
mod gamma;
mod path_coloring;
mod reroute;
mod special;
mod theorem6;
mod walks;

pub use auxiliary::{build_auxiliary, is_crossing, AdditionalEdge, AuxiliaryGraph, HPath, HStep};
pub use gamma::{gamma_sequence, GammaSequence};
pub use path_coloring::{
    color_along_path, decompose, CycleInfo, Decomposition, OddPairDecomposition, PathColoring,
};
pub use reroute::{
    make_well_intersecting, reroute_pair, Frame, Reroute, RerouteBranch, WellBranch,
    WellIntersecting,
};
pub use special::{special_cases, SpecialRoute, SpecialWitness};
pub use theorem6::{
    theorem6_from_path, theorem6_pipeline, LemmaStep, MatchingRound, Theorem6Certificate,
    Theorem6Outcome,
};
pub use walks::{
    alpha_edges, alpha_points, derive_walks, intersection_profile, well_intersects, DerivedWalk,
    IntersectionProfile, WalkTriple,
};

use crate::coloring::EdgeColoring;
use crate::error::Result;
use crate::graph::CubicGraph;
use crate::walk::Walk;

/// Everything computed from the path up to the walk triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineState {
    pub colouring: PathColoring,
    pub decomposition: OddPairDecomposition,
    pub sequence: GammaSequence,
    pub auxiliary: AuxiliaryGraph,
    pub walks: WalkTriple,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Prepared {
    Escape(EdgeColoring),
    Ready(Box<PipelineState>),
}

pub fn prepare(g: &CubicGraph, path: &Walk) -> Result<Prepared> {
    let colouring = color_along_path(g, path)?;
    let decomposition = match decompose(g, &colouring)? {
        Decomposition::Colourable(c) => return Ok(Prepared::Escape(c)),
        Decomposition::OddPair(d) => d,
    };
    let sequence = gamma_sequence(&decomposition)?;
    let auxiliary = build_auxiliary(g, &colouring, &decomposition, &sequence)?;
    let walks = derive_walks(g, &colouring, &decomposition, &auxiliary)?;
    Ok(Prepared::Ready(Box::new(PipelineState {
        colouring,
        decomposition,
        sequence,
        auxiliary,
        walks,
    })))
}
