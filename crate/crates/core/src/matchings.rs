//! Perfect matchings, 2-factors, oddness and balanced sub-matchings.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::graph::{components_after_removal, CubicGraph, EdgeId, GraphId, VertexId};
use crate::sets::EdgeSet;
use crate::walk::Walk;

pub const DEFAULT_MATCHING_CAP: u64 = 10_000_000;

/// A matching tied to the graph it was built on.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matching {
    edges: EdgeSet,
    host: GraphId,
}

impl Matching {
    pub fn new(g: &CubicGraph, edges: EdgeSet) -> Result<Self> {
        if edges.universe() != g.m() || !g.is_matching(&edges) {
            return Err(Error::InvalidInput("edge set is not a matching".into()));
        }
        Ok(Matching { edges, host: g.id() })
    }

    pub fn perfect(g: &CubicGraph, edges: EdgeSet) -> Result<Self> {
        if edges.universe() != g.m() || !g.is_perfect_matching(&edges) {
            return Err(Error::NotPerfect);
        }
        Ok(Matching { edges, host: g.id() })
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.edges
    }

    pub fn into_edges(self) -> EdgeSet {
        self.edges
    }

    pub fn host(&self) -> GraphId {
        self.host
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.contains(e)
    }

    pub fn intersection(&self, other: &Matching) -> EdgeSet {
        self.edges.intersection(&other.edges)
    }

    fn check_host(&self, g: &CubicGraph) -> Result<()> {
        if self.host != g.id() {
            return Err(Error::InvalidInput(format!(
                "matching belongs to graph {}, not {}",
                self.host,
                g.id()
            )));
        }
        Ok(())
    }

    fn check_perfect(&self, g: &CubicGraph) -> Result<()> {
        self.check_host(g)?;
        if !g.is_perfect_matching(&self.edges) {
            return Err(Error::NotPerfect);
        }
        Ok(())
    }
}

impl PartialOrd for Matching {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Matching {
    fn cmp(&self, other: &Self) -> Ordering {
        self.edges.cmp_lex(&other.edges)
    }
}

/// All perfect matchings in lexicographic order of their edge lists.
pub fn enumerate_perfect_matchings(g: &CubicGraph, cap: u64) -> Result<Vec<Matching>> {
    fn go(
        g: &CubicGraph,
        covered: &mut [bool],
        chosen: &mut Vec<EdgeId>,
        out: &mut Vec<EdgeSet>,
        cap: u64,
    ) -> Result<()> {
        let Some(v) = covered.iter().position(|c| !c) else {
            if out.len() as u64 >= cap {
                return Err(Error::ResourceCap {
                    what: "perfect matchings",
                    limit: cap,
                });
            }
            out.push(g.edge_set(chosen.iter().copied()));
            return Ok(());
        };
        for &e in g.incident(v) {
            let w = g.other_end(e, v);
            if covered[w] {
                continue;
            }
            covered[v] = true;
            covered[w] = true;
            chosen.push(e);
            go(g, covered, chosen, out, cap)?;
            chosen.pop();
            covered[v] = false;
            covered[w] = false;
        }
        Ok(())
    }
    if cap == 0 {
        return Err(Error::InvalidInput("matching cap must be at least 1".into()));
    }
    let mut out = Vec::new();
    go(g, &mut vec![false; g.n()], &mut Vec::new(), &mut out, cap)?;
    let mut ms: Vec<Matching> = out
        .into_iter()
        .map(|edges| Matching { edges, host: g.id() })
        .collect();
    ms.sort();
    Ok(ms)
}

/// The cycles of `G - M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoFactor {
    pub cycles: Vec<Walk>,
    pub matching: Matching,
}

impl TwoFactor {
    pub fn odd_cycles(&self) -> impl Iterator<Item = &Walk> {
        self.cycles.iter().filter(|c| c.len() % 2 == 1)
    }

    pub fn odd_count(&self) -> usize {
        self.odd_cycles().count()
    }

    /// Index of the cycle through `v`.
    pub fn cycle_of(&self, v: VertexId) -> Option<usize> {
        self.cycles.iter().position(|c| c.contains_vertex(v))
    }
}

/// Traces one cycle of `G - M` from `start`, first stepping to the smaller
/// of its two neighbours off `M`.
pub(crate) fn trace_cycle(g: &CubicGraph, m: &EdgeSet, start: VertexId) -> Vec<VertexId> {
    let off = |v: VertexId| -> Vec<VertexId> {
        let mut nb: Vec<_> = g
            .incident(v)
            .iter()
            .filter(|e| !m.contains(**e))
            .map(|&e| g.other_end(e, v))
            .collect();
        nb.sort_unstable();
        nb
    };
    let mut cycle = vec![start];
    let mut prev = start;
    let mut cur = off(start)[0];
    while cur != start {
        cycle.push(cur);
        let next = off(cur).into_iter().find(|&w| w != prev).unwrap();
        prev = cur;
        cur = next;
    }
    cycle.push(start);
    cycle
}

pub fn two_factor(g: &CubicGraph, m: &Matching) -> Result<TwoFactor> {
    m.check_perfect(g)?;
    let mut seen = vec![false; g.n()];
    let mut cycles = Vec::new();
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        let vs = trace_cycle(g, m.edges(), s);
        for &v in &vs {
            seen[v] = true;
        }
        cycles.push(Walk::from_vertices(g, &vs)?);
    }
    Ok(TwoFactor {
        cycles,
        matching: m.clone(),
    })
}

pub fn oddness(g: &CubicGraph, cap: u64) -> Result<usize> {
    let ms = enumerate_perfect_matchings(g, cap)?;
    let mut best = None;
    for m in &ms {
        let k = two_factor(g, m)?.odd_count();
        best = Some(best.map_or(k, |b: usize| b.min(k)));
    }
    best.ok_or_else(|| Error::InvalidInput("graph has no perfect matching".into()))
}

/// Shape of one component of `G_M - V(A)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Piece {
    Path { edges: usize },
    Cycle { edges: usize },
}

impl Piece {
    pub fn is_admissible(self) -> bool {
        match self {
            Piece::Path { edges } => edges % 2 == 1,
            Piece::Cycle { edges } => edges % 2 == 0,
        }
    }
}

fn check_sub(g: &CubicGraph, m: &Matching, a: &EdgeSet) -> Result<()> {
    m.check_perfect(g)?;
    if a.universe() != g.m() || !a.is_subset(m.edges()) {
        return Err(Error::NotSubset);
    }
    Ok(())
}

/// Components of `G_M - V(A)`: each as its edge list, paths listed from one
/// end, cycles from their smallest vertex.
fn pieces(g: &CubicGraph, m: &Matching, a: &EdgeSet) -> Vec<(Piece, Vec<EdgeId>)> {
    let removed_vertices = g.covered(a);
    // keep only edges of G - M with both ends outside V(A)
    let mut removed = m.edges().clone();
    for v in removed_vertices.iter() {
        for &e in g.incident(v) {
            removed.insert(e);
        }
    }
    let mut out = Vec::new();
    for comp in components_after_removal(g, &removed) {
        if comp.vertices.len() == 1 && removed_vertices.contains(comp.vertices.first().unwrap()) {
            continue;
        }
        let nv = comp.vertices.len();
        let ne = comp.edges.len();
        // order the edges along the component
        let start = if ne == nv {
            comp.vertices.first().unwrap()
        } else {
            comp.vertices
                .iter()
                .find(|&v| comp.edges.iter().filter(|&&e| {
                    let (x, y) = g.endpoints(e);
                    x == v || y == v
                }).count() <= 1)
                .unwrap()
        };
        let mut ordered = Vec::with_capacity(ne);
        let mut used = vec![false; ne];
        let mut cur = start;
        loop {
            let next = (0..ne).filter(|&i| !used[i]).find(|&i| {
                let (x, y) = g.endpoints(comp.edges[i]);
                x == cur || y == cur
            });
            // on a cycle, leave via the smaller neighbour first
            let next = if ordered.is_empty() && ne == nv {
                (0..ne)
                    .filter(|&i| {
                        let (x, y) = g.endpoints(comp.edges[i]);
                        x == cur || y == cur
                    })
                    .min_by_key(|&i| g.other_end(comp.edges[i], cur))
            } else {
                next
            };
            let Some(i) = next else { break };
            used[i] = true;
            ordered.push(comp.edges[i]);
            cur = g.other_end(comp.edges[i], cur);
        }
        let piece = if ne == nv {
            Piece::Cycle { edges: ne }
        } else {
            Piece::Path { edges: ne }
        };
        out.push((piece, ordered));
    }
    out
}

/// Shapes of the components of `G_M - V(A)`, in order of smallest vertex.
pub fn balance_profile(g: &CubicGraph, m: &Matching, a: &EdgeSet) -> Result<Vec<Piece>> {
    check_sub(g, m, a)?;
    Ok(pieces(g, m, a).into_iter().map(|(p, _)| p).collect())
}

/// `A ⊆ M` is balanced when every component of `G_M - V(A)` is a path with
/// an odd number of edges or an even cycle. An isolated vertex is a path
/// with zero edges and so makes `A` unbalanced.
pub fn is_balanced(g: &CubicGraph, m: &Matching, a: &EdgeSet) -> Result<bool> {
    Ok(balance_profile(g, m, a)?.into_iter().all(Piece::is_admissible))
}

/// A perfect matching `M'` with `M ∩ M' = A`, built from `A` plus every
/// other edge of each component of `G_M - V(A)`.
pub fn extend_balanced(g: &CubicGraph, m: &Matching, a: &EdgeSet) -> Result<Matching> {
    check_sub(g, m, a)?;
    let mut out = a.clone();
    for (piece, edges) in pieces(g, m, a) {
        if !piece.is_admissible() {
            return Err(Error::NotBalanced);
        }
        for &e in edges.iter().step_by(2) {
            out.insert(e);
        }
    }
    let mp = Matching::perfect(g, out)?;
    crate::error::invariant(mp.intersection(m) == *a, || {
        "extension meets M outside A".into()
    })?;
    Ok(mp)
}

/// Three perfect matchings with empty common intersection. For each `M` in
/// enumeration order, looks for two other matchings whose intersections
/// with `M` are disjoint balanced `M`-matchings `A` and `B`.
pub fn fan_raspaud_search(
    g: &CubicGraph,
    cap: u64,
) -> Result<Option<(Matching, Matching, Matching)>> {
    let ms = enumerate_perfect_matchings(g, cap)?;
    for (x, m) in ms.iter().enumerate() {
        let others: Vec<&Matching> = ms
            .iter()
            .enumerate()
            .filter(|&(y, _)| y != x)
            .map(|(_, o)| o)
            .collect();
        for (i, &oa) in others.iter().enumerate() {
            let a = m.intersection(oa);
            for &ob in &others[i + 1..] {
                let b = m.intersection(ob);
                if !a.is_disjoint(&b) {
                    continue;
                }
                crate::error::invariant(
                    is_balanced(g, m, &a)? && is_balanced(g, m, &b)?,
                    || "intersection of two perfect matchings is not balanced".into(),
                )?;
                return Ok(Some((m.clone(), oa.clone(), ob.clone())));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn pms(g: &CubicGraph) -> Vec<Matching> {
        enumerate_perfect_matchings(g, DEFAULT_MATCHING_CAP).unwrap()
    }

    /// Every edge subset of size n/2 that is a perfect matching.
    fn brute_force_count(g: &CubicGraph) -> usize {
        let m = g.m();
        (0u64..1 << m)
            .filter(|mask| mask.count_ones() as usize == g.n() / 2)
            .filter(|mask| g.is_perfect_matching(&g.edge_set((0..m).filter(|e| mask >> e & 1 == 1))))
            .count()
    }

    #[test]
    fn matching_counts() {
        assert_eq!(pms(&generators::k4()).len(), 3);
        assert_eq!(pms(&generators::k33()).len(), 6);
        assert_eq!(pms(&generators::petersen()).len(), 6);
        for g in [generators::k4(), generators::k33(), generators::petersen(), generators::prism(3).unwrap()] {
            assert_eq!(pms(&g).len(), brute_force_count(&g));
        }
    }

    #[test]
    fn enumeration_is_sorted_and_capped() {
        let ms = pms(&generators::flower_snark(5).unwrap());
        assert!(ms.windows(2).all(|w| w[0] < w[1]));
        assert!(matches!(
            enumerate_perfect_matchings(&generators::petersen(), 5),
            Err(Error::ResourceCap { .. })
        ));
    }

    #[test]
    fn petersen_pairs_meet_in_one_edge() {
        let g = generators::petersen();
        let ms = pms(&g);
        for (i, a) in ms.iter().enumerate() {
            for b in &ms[i + 1..] {
                assert_eq!(a.intersection(b).len(), 1);
            }
        }
        for e in 0..g.m() {
            assert_eq!(ms.iter().filter(|m| m.contains(e)).count(), 2);
        }
    }

    #[test]
    fn two_factors() {
        let p = generators::petersen();
        for m in pms(&p) {
            let tf = two_factor(&p, &m).unwrap();
            assert_eq!(tf.cycles.iter().map(Walk::len).collect::<Vec<_>>(), vec![5, 5]);
            assert_eq!(tf.odd_count(), 2);
        }
        let k = generators::k4();
        for m in pms(&k) {
            let tf = two_factor(&k, &m).unwrap();
            assert_eq!(tf.cycles.len(), 1);
            assert_eq!(tf.cycles[0].len(), 4);
            assert_eq!(tf.cycles[0].start(), 0);
        }
        // K33: removing a perfect matching leaves a 2-regular bipartite
        // graph on 6 vertices, which can only be a hexagon
        let k33 = generators::k33();
        for m in pms(&k33) {
            let tf = two_factor(&k33, &m).unwrap();
            assert_eq!(tf.cycles.len(), 1);
            assert_eq!(tf.cycles[0].len(), 6);
        }
        let bad = k.edge_set([0]);
        assert!(matches!(Matching::perfect(&k, bad), Err(Error::NotPerfect)));
    }

    #[test]
    fn two_factor_cycle_orientation() {
        let g = generators::prism(3).unwrap();
        let rungs = g.edge_set([g.edge_between(0, 3).unwrap(), g.edge_between(1, 4).unwrap(), g.edge_between(2, 5).unwrap()]);
        let tf = two_factor(&g, &Matching::perfect(&g, rungs).unwrap()).unwrap();
        assert_eq!(tf.cycles[0].vertices(), &[0, 1, 2, 0]);
        assert_eq!(tf.cycles[1].vertices(), &[3, 4, 5, 3]);
    }

    #[test]
    fn oddness_values() {
        assert_eq!(oddness(&generators::k4(), DEFAULT_MATCHING_CAP).unwrap(), 0);
        assert_eq!(oddness(&generators::petersen(), DEFAULT_MATCHING_CAP).unwrap(), 2);
        assert_eq!(oddness(&generators::flower_snark(5).unwrap(), DEFAULT_MATCHING_CAP).unwrap(), 2);
        assert_eq!(oddness(&generators::prism(5).unwrap(), DEFAULT_MATCHING_CAP).unwrap(), 0);
    }

    /// `A` is balanced iff some perfect matching meets `M` exactly in `A`.
    fn brute_balanced(ms: &[Matching], m: &Matching, a: &EdgeSet) -> bool {
        ms.iter().any(|o| o.intersection(m) == *a)
    }

    #[test]
    fn petersen_balanced_sets() {
        // every edge lies in two matchings and distinct matchings share one
        // edge, so the balanced M-matchings are exactly the single edges
        // and M itself
        let g = generators::petersen();
        let ms = pms(&g);
        for m in &ms {
            assert!(!is_balanced(&g, m, &g.empty_edges()).unwrap());
            for e in m.edges().iter() {
                let a = g.edge_set([e]);
                assert!(is_balanced(&g, m, &a).unwrap());
                let mp = extend_balanced(&g, m, &a).unwrap();
                assert_eq!(mp.intersection(m), a);
            }
            let edges = m.edges().to_vec();
            for i in 0..5 {
                for j in i + 1..5 {
                    for k in j + 1..5 {
                        let a = g.edge_set([edges[i], edges[j], edges[k]]);
                        assert!(!is_balanced(&g, m, &a).unwrap());
                    }
                }
            }
            assert_eq!(extend_balanced(&g, m, m.edges()).unwrap(), *m);
        }
    }

    #[test]
    fn balanced_matches_oracle_on_small_graphs() {
        let mut graphs = vec![generators::k4(), generators::k33(), generators::petersen()];
        graphs.push(generators::prism(4).unwrap());
        graphs.push(generators::moebius_ladder(5).unwrap());
        for g in &graphs {
            let ms = pms(g);
            for m in &ms {
                let edges = m.edges().to_vec();
                for mask in 0u32..1 << edges.len() {
                    let a = g.edge_set((0..edges.len()).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]));
                    let fast = is_balanced(g, m, &a).unwrap();
                    assert_eq!(fast, brute_balanced(&ms, m, &a));
                    if fast {
                        let mp = extend_balanced(g, m, &a).unwrap();
                        assert_eq!(mp.intersection(m), a);
                        assert!(is_balanced(g, &mp, &a).unwrap());
                    }
                }
            }
        }
    }

    /// On each cycle of `G_M`, consecutive ends of `A` are at odd distance,
    /// and cycles missed by `A` are even.
    fn cycle_arc_rule(g: &CubicGraph, m: &Matching, a: &EdgeSet) -> bool {
        let ends = g.covered(a);
        two_factor(g, m).unwrap().cycles.iter().all(|c| {
            let vs = &c.vertices()[..c.len()];
            let marks: Vec<usize> = (0..vs.len()).filter(|&i| ends.contains(vs[i])).collect();
            if marks.is_empty() {
                return vs.len() % 2 == 0;
            }
            (0..marks.len()).all(|i| {
                let next = marks[(i + 1) % marks.len()];
                let d = (next + vs.len() - marks[i]) % vs.len();
                let d = if d == 0 { vs.len() } else { d };
                d % 2 == 1
            })
        })
    }

    #[test]
    fn arc_rule_is_equivalent() {
        for g in [generators::petersen(), generators::prism(5).unwrap(), generators::random_bridgeless(10, 4).unwrap()] {
            for m in pms(&g) {
                let edges = m.edges().to_vec();
                for mask in 0u32..1 << edges.len() {
                    let a = g.edge_set((0..edges.len()).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]));
                    assert_eq!(is_balanced(&g, &m, &a).unwrap(), cycle_arc_rule(&g, &m, &a));
                }
            }
        }
    }

    #[test]
    fn subset_check() {
        let g = generators::k4();
        let ms = pms(&g);
        let other = ms[1].edges().clone();
        assert!(matches!(is_balanced(&g, &ms[0], &other), Err(Error::NotSubset)));
        assert!(matches!(
            extend_balanced(&generators::petersen(), &pms(&generators::petersen())[0], &generators::petersen().empty_edges()),
            Err(Error::NotBalanced)
        ));
    }

    #[test]
    fn fan_raspaud_examples() {
        let k = generators::k4();
        let (a, b, c) = fan_raspaud_search(&k, DEFAULT_MATCHING_CAP).unwrap().unwrap();
        assert!(a.intersection(&b).is_empty() && b.intersection(&c).is_empty());
        assert!(a.intersection(&c).is_empty());
        let p = generators::petersen();
        let (a, b, c) = fan_raspaud_search(&p, DEFAULT_MATCHING_CAP).unwrap().unwrap();
        assert!(a.intersection(&b).intersection(c.edges()).is_empty());
    }
}
