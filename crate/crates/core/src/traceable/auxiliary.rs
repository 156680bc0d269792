//! The auxiliary graph: path edges minus the sequence's boundary edges, plus
//! one edge per half of every inner sequence cycle.

use crate::error::{invariant, Result};
use crate::graph::{CubicGraph, EdgeId, VertexId};
use crate::walk::Walk;

use super::gamma::GammaSequence;
use super::path_coloring::{OddPairDecomposition, PathColoring};

/// An edge of the auxiliary graph standing for an odd path of an inner
/// sequence cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdditionalEdge {
    /// Sequence position of the cycle.
    pub j: usize,
    /// The represented path, from its end at `min` or `min + 1` to its end at
    /// `max` or `max + 1`.
    pub path: Walk,
}

impl AdditionalEdge {
    pub fn ends(&self) -> (VertexId, VertexId) {
        (self.path.start(), self.path.end())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HStep {
    Path(EdgeId),
    Additional(usize),
}

/// A component of the auxiliary graph, oriented from its end in
/// `{1, max(first), max(first) + 1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HPath {
    pub vertices: Vec<VertexId>,
    pub steps: Vec<HStep>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuxiliaryGraph {
    /// Removed path-edge indices, increasing.
    pub cuts: Vec<usize>,
    pub additional: Vec<AdditionalEdge>,
    /// Sorted by the path position of the starting vertex.
    pub components: Vec<HPath>,
}

impl AuxiliaryGraph {
    /// The two additional edges of sequence position `j`, the one starting
    /// at `min(j)` first. Empty unless `j` is an inner position.
    pub fn additional_of(&self, j: usize) -> Vec<usize> {
        (0..self.additional.len()).filter(|&a| self.additional[a].j == j).collect()
    }
}

/// Splits an inner cycle at its min and max beta edges into the two paths
/// starting at `min` and at `min + 1`.
fn halves(
    g: &CubicGraph,
    pc: &PathColoring,
    dec: &OddPairDecomposition,
    seq: &GammaSequence,
    j: usize,
) -> Result<[Walk; 2]> {
    let cyc = dec.cycle(seq.get(j));
    let (lo, hi) = (seq.min(j), seq.max(j));
    let (e_lo, e_hi) = (pc.path_edge(lo), pc.path_edge(hi));
    let stops = [pc.vertex_at(hi), pc.vertex_at(hi + 1)];
    let mut out = Vec::with_capacity(2);
    for start in [pc.vertex_at(lo), pc.vertex_at(lo + 1)] {
        let mut vs = vec![start];
        let mut prev_edge = e_lo;
        let mut cur = start;
        while !(stops.contains(&cur) && vs.len() > 1) {
            let e = g
                .incident(cur)
                .iter()
                .copied()
                .find(|&e| e != prev_edge && !pc.is_alpha(e) && e != e_hi)
                .unwrap();
            cur = g.other_end(e, cur);
            prev_edge = e;
            vs.push(cur);
            invariant(cyc.contains(cur) && vs.len() <= cyc.len() + 1, || {
                format!("half of cycle {j} wanders off")
            })?;
        }
        let w = Walk::from_vertices(g, &vs)?;
        invariant(w.len() % 2 == 1, || format!("even half on cycle {j}"))?;
        out.push(w);
    }
    invariant(out[0].end() != out[1].end(), || format!("halves of {j} share an end"))?;
    Ok([out[0].clone(), out[1].clone()])
}

pub fn build_auxiliary(
    g: &CubicGraph,
    pc: &PathColoring,
    dec: &OddPairDecomposition,
    seq: &GammaSequence,
) -> Result<AuxiliaryGraph> {
    let h = seq.h();
    let n = pc.n();
    let mut cuts = vec![seq.max(1), seq.min(h)];
    let mut additional = Vec::new();
    for j in seq.inner() {
        cuts.push(seq.min(j));
        cuts.push(seq.max(j));
        for path in halves(g, pc, dec, seq, j)? {
            additional.push(AdditionalEdge { j, path });
        }
    }
    cuts.sort_unstable();
    invariant(cuts.windows(2).all(|w| w[0] < w[1]), || format!("repeated cut {cuts:?}"))?;

    // adjacency by vertex: (neighbour, step)
    let mut adj: Vec<Vec<(VertexId, HStep)>> = vec![Vec::new(); g.n()];
    for i in 1..n {
        if cuts.binary_search(&i).is_err() {
            let (u, v) = (pc.vertex_at(i), pc.vertex_at(i + 1));
            adj[u].push((v, HStep::Path(pc.path_edge(i))));
            adj[v].push((u, HStep::Path(pc.path_edge(i))));
        }
    }
    for (a, ae) in additional.iter().enumerate() {
        let (u, v) = ae.ends();
        adj[u].push((v, HStep::Additional(a)));
        adj[v].push((u, HStep::Additional(a)));
    }
    let leaves: Vec<usize> = {
        let mut l: Vec<usize> =
            (0..g.n()).filter(|&v| adj[v].len() == 1).map(|v| pc.position(v)).collect();
        l.sort_unstable();
        l
    };
    let mut want = vec![1, seq.max(1), seq.max(1) + 1, seq.min(h), seq.min(h) + 1, n];
    want.sort_unstable();
    invariant(leaves == want, || format!("degree-1 positions {leaves:?}, expected {want:?}"))?;
    invariant((0..g.n()).all(|v| (1..=2).contains(&adj[v].len())), || {
        "auxiliary degree outside 1..2".into()
    })?;

    let mut seen = vec![false; g.n()];
    let mut components = Vec::new();
    for start_pos in [1, seq.max(1), seq.max(1) + 1] {
        let start = pc.vertex_at(start_pos);
        invariant(!seen[start], || format!("two near ends share a component ({start_pos})"))?;
        let mut vertices = vec![start];
        let mut steps = Vec::new();
        seen[start] = true;
        let mut cur = start;
        let mut prev: Option<HStep> = None;
        while let Some(&(next, step)) = adj[cur].iter().find(|(_, s)| Some(*s) != prev) {
            steps.push(step);
            vertices.push(next);
            seen[next] = true;
            prev = Some(step);
            cur = next;
        }
        components.push(HPath { vertices, steps });
    }
    invariant(seen.iter().all(|&s| s), || "auxiliary graph has a cycle component".into())?;

    let far = [seq.min(h), seq.min(h) + 1, n];
    for (s, c) in components.iter().enumerate() {
        let end = pc.position(*c.vertices.last().unwrap());
        invariant(far.contains(&end), || format!("component {s} ends at position {end}"))?;
        invariant(c.steps.len() % 2 == 1, || format!("component {s} is even"))?;
        if h >= 3 {
            let top = c.vertices.iter().map(|&v| pc.position(v)).max().unwrap();
            invariant(top > seq.max(h - 2), || format!("component {s} stops at {top}"))?;
        }
    }
    Ok(AuxiliaryGraph {
        cuts,
        additional,
        components,
    })
}

/// Whether one half of an inner cycle joins `min` to `max`. False for the
/// two odd cycles, which are never split.
pub fn is_crossing(pc: &PathColoring, seq: &GammaSequence, aux: &AuxiliaryGraph, j: usize) -> bool {
    aux.additional_of(j).iter().any(|&a| {
        let (u, v) = aux.additional[a].ends();
        let mut ends = [pc.position(u), pc.position(v)];
        ends.sort_unstable();
        ends == [seq.min(j), seq.max(j)]
    })
}
