//! Cyclic edge connectivity by induced-cycle enumeration and unit max-flow.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{boundary, components_after_removal, CubicGraph, VertexId};
use crate::sets::{EdgeSet, VertexSet};

pub const DEFAULT_CYCLE_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CyclicConnectivity {
    /// A minimum cycle-separating cut `δ(side)`.
    Finite {
        size: usize,
        side: VertexSet,
        cut: EdgeSet,
    },
    /// No two vertex-disjoint cycles exist.
    Unbounded,
}

impl CyclicConnectivity {
    pub fn value(&self) -> Option<usize> {
        match self {
            CyclicConnectivity::Finite { size, .. } => Some(*size),
            CyclicConnectivity::Unbounded => None,
        }
    }
}

/// All chordless cycles, each as a vertex list starting at its smallest
/// vertex, its second vertex smaller than its last.
pub fn induced_cycles(g: &CubicGraph, cap: u64) -> Result<Vec<Vec<VertexId>>> {
    let n = g.n();
    let mut out = Vec::new();
    let mut on_path = vec![false; n];
    for s in 0..n {
        let mut path = vec![s];
        on_path[s] = true;
        // explicit DFS stack of neighbour cursors
        let mut cursor = vec![0usize];
        while let Some(slot) = cursor.last_mut() {
            let u = *path.last().unwrap();
            if *slot == 3 {
                cursor.pop();
                on_path[u] = false;
                path.pop();
                continue;
            }
            let w = g.neighbors(u)[*slot];
            *slot += 1;
            if w == s {
                if path.len() >= 3 && path[1] < u {
                    out.push(path.clone());
                    if out.len() as u64 > cap {
                        return Err(Error::ResourceCap {
                            what: "induced cycles",
                            limit: cap,
                        });
                    }
                }
                continue;
            }
            if w < s || on_path[w] {
                continue;
            }
            // a path end adjacent to s may only close the cycle
            if path.len() >= 3 && g.neighbors(u).contains(&s) {
                continue;
            }
            // w may touch s (it then closes next) but no other path vertex
            let chord = g
                .neighbors(w)
                .iter()
                .any(|&x| x != u && x != s && on_path[x]);
            if chord {
                continue;
            }
            path.push(w);
            on_path[w] = true;
            cursor.push(0);
        }
    }
    Ok(out)
}

/// Unit-capacity max-flow between the contracted vertex sets `sources` and
/// `sinks`. Stops as soon as the flow reaches `limit`, returning `None`.
/// Otherwise returns the source side of a minimum cut.
fn min_cut_below(
    g: &CubicGraph,
    sources: &VertexSet,
    sinks: &VertexSet,
    limit: usize,
) -> Option<(usize, VertexSet)> {
    let n = g.n();
    // flow on edge e, oriented from its smaller to its larger endpoint
    let mut flow = vec![0i8; g.m()];
    let residual = |flow: &[i8], e: usize, from: VertexId| -> bool {
        let (a, _) = g.endpoints(e);
        let f = if from == a { flow[e] } else { -flow[e] };
        f < 1
    };
    let mut value = 0;
    loop {
        let mut parent: Vec<Option<usize>> = vec![None; n];
        let mut seen = sources.clone();
        let mut queue: VecDeque<VertexId> = sources.iter().collect();
        let mut hit = None;
        'bfs: while let Some(u) = queue.pop_front() {
            for &e in g.incident(u) {
                let w = g.other_end(e, u);
                if seen.contains(w) || !residual(&flow, e, u) {
                    continue;
                }
                seen.insert(w);
                parent[w] = Some(e);
                if sinks.contains(w) {
                    hit = Some(w);
                    break 'bfs;
                }
                queue.push_back(w);
            }
        }
        let Some(mut v) = hit else {
            return Some((value, seen));
        };
        while let Some(e) = parent[v] {
            let u = g.other_end(e, v);
            let (a, _) = g.endpoints(e);
            flow[e] += if u == a { 1 } else { -1 };
            v = u;
        }
        value += 1;
        if value >= limit {
            return None;
        }
    }
}

fn has_cycle_outside(g: &CubicGraph, x: &VertexSet) -> bool {
    // removing δX and the edges inside X leaves V - X plus isolated vertices
    let removed = g.induced_edges(x).union(&boundary(g, x));
    components_after_removal(g, &removed)
        .iter()
        .any(|c| !c.vertices.is_subset(x) && c.has_cycle())
}

pub fn cyclic_edge_connectivity(g: &CubicGraph, cycle_cap: u64) -> Result<CyclicConnectivity> {
    let cycles = induced_cycles(g, cycle_cap)?;
    let sets: Vec<VertexSet> = cycles.iter().map(|c| g.vertex_set(c.iter().copied())).collect();

    let mut best: Option<(usize, VertexSet)> = None;
    for s in &sets {
        // an induced cycle has exactly one edge leaving each vertex
        if best.as_ref().is_some_and(|(b, _)| s.len() >= *b) {
            continue;
        }
        if has_cycle_outside(g, s) {
            best = Some((s.len(), s.clone()));
        }
    }
    let Some(mut best) = best else {
        return Ok(CyclicConnectivity::Unbounded);
    };
    for (i, a) in sets.iter().enumerate() {
        for b in &sets[i + 1..] {
            if !a.is_disjoint(b) {
                continue;
            }
            if let Some((value, side)) = min_cut_below(g, a, b, best.0) {
                best = (value, side);
            }
        }
    }
    let (size, side) = best;
    let cut = boundary(g, &side);
    debug_assert_eq!(cut.len(), size);
    Ok(CyclicConnectivity::Finite { size, side, cut })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn subset_has_cycle(g: &CubicGraph, x: &VertexSet) -> bool {
        let inside = g.induced_edges(x);
        let removed = inside.complement();
        components_after_removal(g, &removed)
            .iter()
            .any(|c| c.vertices.is_subset(x) && c.has_cycle())
    }

    /// Minimum `|δX|` over all `X` such that both sides induce a cycle.
    fn brute_force(g: &CubicGraph) -> Option<usize> {
        let n = g.n();
        let mut best = None;
        for mask in 1u64..(1 << (n - 1)) {
            let x = g.vertex_set((0..n).filter(|v| mask >> v & 1 == 1));
            let y = x.complement();
            if subset_has_cycle(g, &x) && subset_has_cycle(g, &y) {
                let c = boundary(g, &x).len();
                if best.is_none_or(|b| c < b) {
                    best = Some(c);
                }
            }
        }
        best
    }

    fn check(g: &CubicGraph) -> Option<usize> {
        let r = cyclic_edge_connectivity(g, DEFAULT_CYCLE_CAP).unwrap();
        if let CyclicConnectivity::Finite { size, side, cut } = &r {
            assert_eq!(cut.len(), *size);
            assert!(subset_has_cycle(g, side));
            assert!(subset_has_cycle(g, &side.complement()));
        }
        r.value()
    }

    #[test]
    fn named_values() {
        assert_eq!(check(&generators::k4()), None);
        assert_eq!(check(&generators::prism(3).unwrap()), Some(3));
        assert_eq!(check(&generators::petersen()), Some(5));
        assert_eq!(check(&generators::k33()), None);
        assert_eq!(check(&generators::flower_snark(5).unwrap()), Some(5));
    }

    #[test]
    fn agrees_with_subset_search() {
        let mut graphs = vec![
            generators::k4(),
            generators::k33(),
            generators::petersen(),
            generators::bridged_pair(),
        ];
        for m in 3..=7 {
            graphs.push(generators::prism(m).unwrap());
            graphs.push(generators::moebius_ladder(m).unwrap());
        }
        for m in 5..=7 {
            graphs.push(generators::generalized_petersen(m, 2).unwrap());
        }
        for seed in 0..20 {
            graphs.push(generators::random_bridgeless(12, seed).unwrap());
            graphs.push(generators::random_bridgeless(14, seed).unwrap());
        }
        for g in &graphs {
            assert_eq!(check(g), brute_force(g), "{g:?}");
        }
    }

    #[test]
    fn induced_cycle_counts() {
        // K4: four triangles, and the three 4-cycles all have chords
        assert_eq!(induced_cycles(&generators::k4(), 100).unwrap().len(), 4);
        // Petersen: twelve 5-cycles and ten 6-cycles are induced
        let p = induced_cycles(&generators::petersen(), 1000).unwrap();
        assert_eq!(p.iter().filter(|c| c.len() == 5).count(), 12);
        assert_eq!(p.iter().filter(|c| c.len() == 6).count(), 10);
        assert!(matches!(
            induced_cycles(&generators::petersen(), 3),
            Err(Error::ResourceCap { .. })
        ));
    }
}
