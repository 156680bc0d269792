//! Three alpha-disjoint walks from the first odd cycle to the last, and the
//! well-intersection test against 2-factor cycles.

use crate::error::{invariant, Result};
use crate::graph::CubicGraph;
use crate::sets::EdgeSet;
use crate::walk::Walk;

use super::auxiliary::{AuxiliaryGraph, HStep};
use super::path_coloring::{CycleInfo, OddPairDecomposition, PathColoring};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedWalk {
    pub walk: Walk,
    /// Auxiliary component it came from.
    pub component: usize,
    /// Additional edges replaced by their paths, in walk order.
    pub expanded: Vec<usize>,
    /// The component visits the first odd cycle again after reaching the
    /// last one, so the walk stops at the first visit of the last cycle.
    pub trimmed_early: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkTriple {
    pub walks: [DerivedWalk; 3],
    /// Edge-count parity per walk. Expected odd; reported, not enforced.
    pub odd: [bool; 3],
}

impl WalkTriple {
    pub fn walk(&self, i: usize) -> &Walk {
        &self.walks[i].walk
    }

    /// Which walks expand an additional edge of sequence position `j`.
    pub fn through(&self, aux: &AuxiliaryGraph, j: usize) -> Vec<usize> {
        (0..3)
            .filter(|&i| self.walks[i].expanded.iter().any(|&a| aux.additional[a].j == j))
            .collect()
    }
}

/// Alpha edges traversed by a walk.
pub fn alpha_edges(g: &CubicGraph, pc: &PathColoring, w: &Walk) -> EdgeSet {
    g.edge_set(w.edges().iter().copied().filter(|&e| pc.is_alpha(e)))
}

pub fn cycle_edges(g: &CubicGraph, c: &CycleInfo) -> EdgeSet {
    c.walk.edge_set(g)
}

/// Checks the walk conditions shared by every stage of the construction:
/// starts on the first odd cycle, ends on the last, alpha end edges, no edge
/// of either odd cycle.
pub(crate) fn check_end_to_end(
    g: &CubicGraph,
    pc: &PathColoring,
    dec: &OddPairDecomposition,
    w: &Walk,
    label: &str,
) -> Result<()> {
    w.validate(g)?;
    invariant(!w.is_empty(), || format!("{label}: empty walk"))?;
    invariant(dec.cycle_of(w.start()) == 0, || format!("{label}: does not start on C_1"))?;
    invariant(dec.cycle_of(w.end()) == dec.last_index(), || {
        format!("{label}: does not end on C_k")
    })?;
    let ends = [w.edges()[0], *w.edges().last().unwrap()];
    invariant(ends.iter().all(|&e| pc.is_alpha(e)), || format!("{label}: end edge not alpha"))?;
    let odd_cycles = cycle_edges(g, dec.first()).union(&cycle_edges(g, dec.last()));
    invariant(w.edges().iter().all(|&e| !odd_cycles.contains(e)), || {
        format!("{label}: uses an edge of C_1 or C_k")
    })
}

pub fn derive_walks(
    g: &CubicGraph,
    pc: &PathColoring,
    dec: &OddPairDecomposition,
    aux: &AuxiliaryGraph,
) -> Result<WalkTriple> {
    let last = dec.last_index();
    let mut out = Vec::with_capacity(3);
    for (s, comp) in aux.components.iter().enumerate() {
        let vs = &comp.vertices;
        let f = vs.iter().position(|&v| dec.cycle_of(v) == last).unwrap();
        let q = (0..f).rev().find(|&i| dec.cycle_of(vs[i]) == 0).unwrap();
        let trimmed_early = vs[f..].iter().any(|&v| dec.cycle_of(v) == 0);
        let mut walk_vs = vec![vs[q]];
        let mut expanded = Vec::new();
        for (i, step) in comp.steps.iter().enumerate().take(f).skip(q) {
            match *step {
                HStep::Path(_) => walk_vs.push(vs[i + 1]),
                HStep::Additional(a) => {
                    let p = &aux.additional[a].path;
                    let p = if p.start() == vs[i] { p.clone() } else { p.reversed() };
                    walk_vs.extend_from_slice(&p.vertices()[1..]);
                    expanded.push(a);
                }
            }
        }
        let walk = Walk::from_vertices(g, &walk_vs)?;
        check_end_to_end(g, pc, dec, &walk, &format!("W_{}", s + 1))?;
        out.push(DerivedWalk {
            walk,
            component: s,
            expanded,
            trimmed_early,
        });
    }
    let alphas: Vec<EdgeSet> = out.iter().map(|d| alpha_edges(g, pc, &d.walk)).collect();
    for a in 0..3 {
        for b in a + 1..3 {
            invariant(alphas[a].is_disjoint(&alphas[b]), || {
                format!("W_{} and W_{} share an alpha edge", a + 1, b + 1)
            })?;
        }
    }
    let odd = [0, 1, 2].map(|i| out[i].walk.len() % 2 == 1);
    let walks: [DerivedWalk; 3] = out.try_into().unwrap();
    Ok(WalkTriple { walks, odd })
}

/// How a walk's alpha edges cut a 2-factor cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IntersectionProfile {
    /// No alpha edge of the walk ends on the cycle.
    Untouched,
    /// Every arc between cyclically consecutive alpha ends is odd.
    AllArcsOdd,
    /// All arcs odd except one, which is where the enumeration wraps.
    OpenArcsOdd,
    Fails,
}

/// Positions on the cycle of the alpha-edge ends of `w`, increasing.
pub fn alpha_points(g: &CubicGraph, pc: &PathColoring, w: &Walk, cycle: &CycleInfo) -> Vec<usize> {
    let alpha = alpha_edges(g, pc, w);
    let mut pts: Vec<usize> = cycle
        .ring()
        .iter()
        .enumerate()
        .filter(|(_, &v)| g.incident(v).iter().any(|&e| alpha.contains(e)))
        .map(|(i, _)| i)
        .collect();
    pts.sort_unstable();
    pts
}

pub fn intersection_profile(
    g: &CubicGraph,
    pc: &PathColoring,
    w: &Walk,
    cycle: &CycleInfo,
) -> IntersectionProfile {
    let pts = alpha_points(g, pc, w, cycle);
    if pts.is_empty() {
        return IntersectionProfile::Untouched;
    }
    let len = cycle.len();
    let even_arcs = (0..pts.len())
        .filter(|&i| {
            let next = pts[(i + 1) % pts.len()];
            let arc = (next + len - pts[i]) % len;
            // a single point closes on itself around the whole cycle
            let arc = if arc == 0 { len } else { arc };
            arc % 2 == 0
        })
        .count();
    match even_arcs {
        0 => IntersectionProfile::AllArcsOdd,
        1 => IntersectionProfile::OpenArcsOdd,
        _ => IntersectionProfile::Fails,
    }
}

/// Strict reading: every cyclic arc between consecutive alpha ends is odd,
/// the closing one included. This is what makes the alpha edges extendable
/// across the cycle.
pub fn well_intersects(g: &CubicGraph, pc: &PathColoring, w: &Walk, cycle: &CycleInfo) -> bool {
    matches!(
        intersection_profile(g, pc, w, cycle),
        IntersectionProfile::Untouched | IntersectionProfile::AllArcsOdd
    )
}

