//! Sequences short or tame enough that two walks are already balanced, which
//! gives perfect matchings whose common intersection with the alpha class is
//! empty.

use crate::error::{Error, Result};
use crate::graph::CubicGraph;
use crate::matchings::{extend_balanced, is_balanced, Matching};
use crate::walk::Walk;

use super::auxiliary::is_crossing;
use super::theorem6::reroute_walk;
use super::walks::alpha_edges;
use super::PipelineState;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpecialRoute {
    /// The sequence is just the two odd cycles; all three walks qualify.
    TwoCycles,
    /// One inner cycle: the walk avoiding its max edge plus one rerouted walk.
    ThreeCycles,
    /// No inner cycle is crossing: the two walks built from the green
    /// segments of the path.
    NonCrossing,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialWitness {
    pub route: SpecialRoute,
    pub m_alpha: Matching,
    /// Three matchings for two cycles, two otherwise.
    pub matchings: Vec<Matching>,
    pub walks: Vec<Walk>,
    /// Non-crossing route: index of the walk holding the red segments.
    pub red_walk: Option<usize>,
}

impl SpecialWitness {
    /// `M_alpha ∩ M_i ∩ M_j` is empty for every pair.
    pub fn verify(&self, g: &CubicGraph) -> bool {
        let ms = &self.matchings;
        ms.iter().all(|m| g.is_perfect_matching(m.edges()))
            && (0..ms.len()).all(|a| {
                (a + 1..ms.len()).all(|b| {
                    self.m_alpha.intersection(&ms[a]).is_disjoint(&ms[b].intersection(&self.m_alpha))
                })
            })
    }
}

fn fail(detail: String) -> Error {
    Error::ConstructionError {
        stage: "special".into(),
        detail,
    }
}

fn matchings_for(g: &CubicGraph, st: &PipelineState, walks: &[Walk]) -> Result<Vec<Matching>> {
    let m = st.colouring.m_alpha();
    walks
        .iter()
        .enumerate()
        .map(|(i, w)| {
            let a = alpha_edges(g, &st.colouring, w);
            if !is_balanced(g, m, &a)? {
                return Err(fail(format!("walk {i} is not balanced")));
            }
            extend_balanced(g, m, &a)
        })
        .collect()
}

/// Which colour class (green even, red odd) each path edge's segment has,
/// segments being the pieces left after the removed boundary edges.
fn segment_parity(st: &PipelineState, index: usize) -> usize {
    st.auxiliary.cuts.iter().filter(|&&c| c < index).count() % 2
}

pub fn special_cases(g: &CubicGraph, st: &PipelineState) -> Result<Option<SpecialWitness>> {
    let h = st.sequence.h();
    let pc = &st.colouring;
    let original: Vec<Walk> = (0..3).map(|i| st.walks.walk(i).clone()).collect();
    let (route, walks, red_walk) = if h == 2 {
        (SpecialRoute::TwoCycles, original, None)
    } else if h == 3 {
        let top = [pc.vertex_at(st.sequence.max(2)), pc.vertex_at(st.sequence.max(2) + 1)];
        let avoiding: Vec<usize> =
            (0..3).filter(|&i| top.iter().all(|&v| !original[i].contains_vertex(v))).collect();
        let &[b] = avoiding.as_slice() else {
            return Err(fail(format!("{} walks avoid the max edge of the inner cycle", avoiding.len())));
        };
        let mut found = None;
        let mut last_err = None;
        for a in (0..3).filter(|&a| a != b) {
            match reroute_walk(g, st, a) {
                Ok((ws, _)) => {
                    found = Some(vec![ws[a].clone(), ws[b].clone()]);
                    break;
                }
                Err(e) => last_err = Some(e),
            }
        }
        let walks = found.ok_or_else(|| last_err.unwrap())?;
        (SpecialRoute::ThreeCycles, walks, None)
    } else if st.sequence.inner().all(|j| !is_crossing(pc, &st.sequence, &st.auxiliary, j)) {
        let uses = |i: usize, parity: usize| {
            let d = &st.walks.walks[i];
            let mut borrowed = g.empty_edges();
            for &a in &d.expanded {
                borrowed = borrowed.union(&st.auxiliary.additional[a].path.edge_set(g));
            }
            d.walk
                .edges()
                .iter()
                .filter(|&&e| !borrowed.contains(e))
                .filter_map(|&e| pc.path_index(g, e))
                .any(|x| segment_parity(st, x) == parity)
        };
        let reds: Vec<usize> = (0..3).filter(|&i| uses(i, 1)).collect();
        let &[red] = reds.as_slice() else {
            return Err(fail(format!("red segments spread over walks {reds:?}")));
        };
        let greens: Vec<Walk> = (0..3).filter(|&i| i != red).map(|i| original[i].clone()).collect();
        (SpecialRoute::NonCrossing, greens, Some(red))
    } else {
        return Ok(None);
    };
    let matchings = matchings_for(g, st, &walks)?;
    let w = SpecialWitness {
        route,
        m_alpha: pc.m_alpha().clone(),
        matchings,
        walks,
        red_walk,
    };
    if !w.verify(g) {
        return Err(fail(format!("{route:?}: triple intersections not empty")));
    }
    Ok(Some(w))
}
