//! Immutable cubic graphs and their basic structural queries.

use std::collections::VecDeque;
use std::fmt;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::sets::{EdgeSet, VertexSet};

pub type VertexId = usize;
pub type EdgeId = usize;

/// Content hash of a graph's canonical edge list.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphId(pub u64);

impl fmt::Debug for GraphId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GraphId({:016x})", self.0)
    }
}

impl fmt::Display for GraphId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:016x}", self.0)
    }
}

/// A connected simple 3-regular graph. Edges are numbered by their sorted
/// `(min, max)` endpoint pairs.
#[derive(Clone, PartialEq, Eq)]
pub struct CubicGraph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    incidence: Vec<[EdgeId; 3]>,
    neighbors: Vec<[VertexId; 3]>,
    id: GraphId,
}

impl fmt::Debug for CubicGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CubicGraph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

/// Validates `pairs` as a connected simple cubic graph on `0..n`.
pub fn build_graph(n: usize, pairs: &[(VertexId, VertexId)]) -> Result<CubicGraph> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::InvalidInput(format!(
            "a cubic graph needs an even order >= 4, got {n}"
        )));
    }
    let mut edges = Vec::with_capacity(pairs.len());
    for &(u, v) in pairs {
        if u >= n || v >= n {
            return Err(Error::InvalidInput(format!("pair ({u}, {v}) out of range 0..{n}")));
        }
        if u == v {
            return Err(Error::NotSimple(format!("loop at vertex {u}")));
        }
        edges.push((u.min(v), u.max(v)));
    }
    edges.sort_unstable();
    if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::NotSimple(format!(
            "parallel edges between {} and {}",
            w[0].0, w[0].1
        )));
    }
    let mut inc: Vec<Vec<EdgeId>> = vec![Vec::with_capacity(3); n];
    for (e, &(u, v)) in edges.iter().enumerate() {
        inc[u].push(e);
        inc[v].push(e);
    }
    if let Some((v, list)) = inc.iter().enumerate().find(|(_, l)| l.len() != 3) {
        return Err(Error::NotCubic {
            vertex: v,
            degree: list.len(),
        });
    }
    let incidence: Vec<[EdgeId; 3]> = inc.iter().map(|l| [l[0], l[1], l[2]]).collect();
    let neighbors = incidence
        .iter()
        .enumerate()
        .map(|(v, es)| {
            let mut nb = es.map(|e| {
                let (a, b) = edges[e];
                if a == v {
                    b
                } else {
                    a
                }
            });
            nb.sort_unstable();
            nb
        })
        .collect();

    let mut hasher = Sha256::new();
    hasher.update((n as u64).to_le_bytes());
    for &(u, v) in &edges {
        hasher.update((u as u32).to_le_bytes());
        hasher.update((v as u32).to_le_bytes());
    }
    let digest = hasher.finalize();
    let mut head = [0u8; 8];
    head.copy_from_slice(&digest[..8]);

    let g = CubicGraph {
        n,
        edges,
        incidence,
        neighbors,
        id: GraphId(u64::from_le_bytes(head)),
    };
    if components_after_removal(&g, &g.empty_edges()).len() != 1 {
        return Err(Error::Disconnected);
    }
    Ok(g)
}

impl CubicGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn id(&self) -> GraphId {
        self.id
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    /// Incident edge identifiers in ascending order.
    pub fn incident(&self, v: VertexId) -> &[EdgeId; 3] {
        &self.incidence[v]
    }

    /// Neighbours in ascending order.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId; 3] {
        &self.neighbors[v]
    }

    pub fn other_end(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        debug_assert!(a == v || b == v);
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        if u >= self.n || v >= self.n {
            return None;
        }
        self.incidence[u]
            .iter()
            .copied()
            .find(|&e| self.other_end(e, u) == v)
    }

    pub fn empty_edges(&self) -> EdgeSet {
        EdgeSet::new(self.m())
    }

    pub fn all_edges(&self) -> EdgeSet {
        EdgeSet::full(self.m())
    }

    pub fn empty_vertices(&self) -> VertexSet {
        VertexSet::new(self.n)
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edge_set(&self, ids: impl IntoIterator<Item = EdgeId>) -> EdgeSet {
        EdgeSet::from_ids(self.m(), ids)
    }

    pub fn vertex_set(&self, ids: impl IntoIterator<Item = VertexId>) -> VertexSet {
        VertexSet::from_ids(self.n, ids)
    }

    /// Vertices covered by the edges of `set`.
    pub fn covered(&self, set: &EdgeSet) -> VertexSet {
        let mut out = self.empty_vertices();
        for e in set.iter() {
            let (u, v) = self.edges[e];
            out.insert(u);
            out.insert(v);
        }
        out
    }

    /// Degree of every vertex in the spanning subgraph `(V, set)`.
    pub fn degrees_in(&self, set: &EdgeSet) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in set.iter() {
            let (u, v) = self.edges[e];
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// True when `set` touches every vertex exactly once.
    pub fn is_perfect_matching(&self, set: &EdgeSet) -> bool {
        set.universe() == self.m() && self.degrees_in(set).iter().all(|&d| d == 1)
    }

    pub fn is_matching(&self, set: &EdgeSet) -> bool {
        set.universe() == self.m() && self.degrees_in(set).iter().all(|&d| d <= 1)
    }

    /// Edges with both ends in `x`.
    pub fn induced_edges(&self, x: &VertexSet) -> EdgeSet {
        self.edge_set(
            self.edges
                .iter()
                .enumerate()
                .filter(|(_, &(u, v))| x.contains(u) && x.contains(v))
                .map(|(e, _)| e),
        )
    }

    /// Girth by BFS from every vertex.
    pub fn girth(&self) -> usize {
        let mut best = usize::MAX;
        for s in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in self.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        best
    }
}

/// `δX`: the edges with exactly one end in `x`.
pub fn boundary(g: &CubicGraph, x: &VertexSet) -> EdgeSet {
    g.edge_set(
        g.edges()
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| x.contains(u) != x.contains(v))
            .map(|(e, _)| e),
    )
}

/// One connected piece of `(V, E - removed)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub vertices: VertexSet,
    pub edges: Vec<EdgeId>,
}

impl Component {
    pub fn has_cycle(&self) -> bool {
        self.edges.len() >= self.vertices.len()
    }
}

/// Connected components of `(V, E - removed)`, ordered by smallest vertex.
pub fn components_after_removal(g: &CubicGraph, removed: &EdgeSet) -> Vec<Component> {
    let n = g.n();
    let mut comp = vec![usize::MAX; n];
    let mut out: Vec<Component> = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let idx = out.len();
        let mut vertices = g.empty_vertices();
        let mut stack = vec![s];
        comp[s] = idx;
        vertices.insert(s);
        while let Some(u) = stack.pop() {
            for &e in g.incident(u) {
                if removed.contains(e) {
                    continue;
                }
                let w = g.other_end(e, u);
                if comp[w] == usize::MAX {
                    comp[w] = idx;
                    vertices.insert(w);
                    stack.push(w);
                }
            }
        }
        out.push(Component {
            vertices,
            edges: Vec::new(),
        });
    }
    for (e, &(u, _)) in g.edges().iter().enumerate() {
        if !removed.contains(e) {
            out[comp[u]].edges.push(e);
        }
    }
    out
}

/// Edges whose removal disconnects `g` (low-link DFS).
pub fn bridges(g: &CubicGraph) -> EdgeSet {
    let n = g.n();
    let mut order = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut out = g.empty_edges();
    let mut counter = 0;
    // (vertex, edge used to enter it, next incidence slot)
    let mut stack: Vec<(VertexId, Option<EdgeId>, usize)> = Vec::new();
    for root in 0..n {
        if order[root] != usize::MAX {
            continue;
        }
        order[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push((root, None, 0));
        while let Some(&mut (u, via, ref mut slot)) = stack.last_mut() {
            if *slot < 3 {
                let e = g.incident(u)[*slot];
                *slot += 1;
                if Some(e) == via {
                    continue;
                }
                let w = g.other_end(e, u);
                if order[w] == usize::MAX {
                    order[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push((w, Some(e), 0));
                } else {
                    low[u] = low[u].min(order[w]);
                }
            } else {
                stack.pop();
                if let (Some(e), Some(&(p, _, _))) = (via, stack.last()) {
                    low[p] = low[p].min(low[u]);
                    if low[u] > order[p] {
                        out.insert(e);
                    }
                }
            }
        }
    }
    out
}

pub fn is_bridgeless(g: &CubicGraph) -> bool {
    bridges(g).is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn k4() -> CubicGraph {
        generators::k4()
    }

    #[test]
    fn k4_builds_with_six_edges() {
        let g = k4();
        assert_eq!(g.m(), 6);
        assert_eq!(g.edges()[0], (0, 1));
        assert_eq!(g.edges()[5], (2, 3));
    }

    #[test]
    fn missing_edge_is_not_cubic() {
        let err = build_graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap_err();
        assert!(matches!(err, Error::NotCubic { .. }));
    }

    #[test]
    fn loops_and_parallels_rejected() {
        assert!(matches!(
            build_graph(4, &[(0, 0), (0, 2)]).unwrap_err(),
            Error::NotSimple(_)
        ));
        assert!(matches!(
            build_graph(4, &[(0, 1), (1, 0)]).unwrap_err(),
            Error::NotSimple(_)
        ));
    }

    #[test]
    fn two_k4_are_disconnected() {
        let mut pairs = Vec::new();
        for off in [0, 4] {
            for a in 0..4 {
                for b in a + 1..4 {
                    pairs.push((a + off, b + off));
                }
            }
        }
        assert_eq!(build_graph(8, &pairs).unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn boundary_examples() {
        let g = k4();
        let x = g.vertex_set([0]);
        assert_eq!(boundary(&g, &x).to_vec(), g.incident(0).to_vec());
        assert!(boundary(&g, &g.empty_vertices()).is_empty());

        let p = generators::petersen();
        let outer = p.vertex_set(0..5);
        let spokes: Vec<_> = (0..5).map(|i| p.edge_between(i, i + 5).unwrap()).collect();
        let mut spokes_sorted = spokes.clone();
        spokes_sorted.sort();
        assert_eq!(boundary(&p, &outer).to_vec(), spokes_sorted);
    }

    #[test]
    fn components_examples() {
        let g = k4();
        assert_eq!(components_after_removal(&g, &g.empty_edges()).len(), 1);
        // {01, 23} is a perfect matching of K4
        let m = g.edge_set([0, 5]);
        let comps = components_after_removal(&g, &m);
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].edges.len(), 4);
    }

    #[test]
    fn bridge_between_two_gadgets() {
        // two (K4 minus an edge) gadgets, each closed by a degree-2 vertex,
        // joined through those vertices by a single edge
        let g = generators::bridged_pair();
        let b = bridges(&g);
        assert_eq!(b.len(), 1);
        let e = b.first().unwrap();
        assert_eq!(components_after_removal(&g, &b).len(), 2);
        // every other edge lies on a cycle
        for f in 0..g.m() {
            if f != e {
                assert_eq!(components_after_removal(&g, &g.edge_set([f])).len(), 1);
            }
        }
    }

    #[test]
    fn known_graphs_are_bridgeless() {
        assert!(is_bridgeless(&k4()));
        assert!(is_bridgeless(&generators::petersen()));
    }

    #[test]
    fn girth_values() {
        assert_eq!(k4().girth(), 3);
        assert_eq!(generators::petersen().girth(), 5);
        assert_eq!(generators::k33().girth(), 4);
    }
}
