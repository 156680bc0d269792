//! Colouring along a Hamiltonian path and the resulting 2-factor.

use crate::coloring::{coloring_from_pm, Colour, EdgeColoring};
use crate::error::{invariant, Error, Result};
use crate::graph::{CubicGraph, EdgeId, VertexId};
use crate::hamilton::is_hamiltonian_path;
use crate::matchings::{trace_cycle, Matching};
use crate::walk::Walk;

/// Path edges alternate alpha/beta from the first one, chords are gamma
/// except one delta chord at each end of the path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathColoring {
    path: Walk,
    /// 1-based position of each vertex on the path.
    pos: Vec<usize>,
    colouring: EdgeColoring,
    m_alpha: Matching,
    deltas: [EdgeId; 2],
}

impl PathColoring {
    pub fn path(&self) -> &Walk {
        &self.path
    }

    pub fn n(&self) -> usize {
        self.pos.len()
    }

    pub fn position(&self, v: VertexId) -> usize {
        self.pos[v]
    }

    /// Vertex at 1-based position `p`.
    pub fn vertex_at(&self, p: usize) -> VertexId {
        self.path.vertices()[p - 1]
    }

    /// `e_i`, joining positions `i` and `i + 1`.
    pub fn path_edge(&self, i: usize) -> EdgeId {
        self.path.edges()[i - 1]
    }

    /// Index `i` if `e` is the path edge `e_i`.
    pub fn path_index(&self, g: &CubicGraph, e: EdgeId) -> Option<usize> {
        let (u, v) = g.endpoints(e);
        let (a, b) = (self.pos[u].min(self.pos[v]), self.pos[u].max(self.pos[v]));
        (b == a + 1).then_some(a)
    }

    pub fn colour(&self, e: EdgeId) -> Colour {
        self.colouring.colour(e)
    }

    pub fn colouring(&self) -> &EdgeColoring {
        &self.colouring
    }

    pub fn m_alpha(&self) -> &Matching {
        &self.m_alpha
    }

    pub fn deltas(&self) -> [EdgeId; 2] {
        self.deltas
    }

    pub fn is_alpha(&self, e: EdgeId) -> bool {
        self.colouring.colour(e) == Colour::Alpha
    }

    fn check(&self, g: &CubicGraph) -> Result<()> {
        let n = self.n();
        for i in 1..n {
            let want = if i % 2 == 1 { Colour::Alpha } else { Colour::Beta };
            invariant(self.colour(self.path_edge(i)) == want, || {
                format!("path edge {i} is not {want}")
            })?;
        }
        let deltas: Vec<_> = (0..g.m()).filter(|&e| self.colour(e) == Colour::Delta).collect();
        invariant(deltas.len() == 2, || format!("{} delta edges", deltas.len()))?;
        let ends = [self.vertex_at(1), self.vertex_at(n)];
        for (k, &e) in self.deltas.iter().enumerate() {
            let (u, v) = g.endpoints(e);
            invariant(u == ends[k] || v == ends[k], || {
                "delta edge not at its path end".into()
            })?;
        }
        invariant(g.is_perfect_matching(self.m_alpha.edges()), || {
            "alpha class is not a perfect matching".into()
        })
    }
}

/// The chord at `end` whose other endpoint is nearest along the path to
/// `end`: smallest position at the first vertex, largest at the last.
fn delta_chord(g: &CubicGraph, pos: &[usize], end: VertexId, first: bool) -> EdgeId {
    let chords = g.incident(end).iter().copied().filter(|&e| {
        let w = g.other_end(e, end);
        pos[w].abs_diff(pos[end]) != 1
    });
    let key = |e: &EdgeId| pos[g.other_end(*e, end)];
    if first {
        chords.min_by_key(key).unwrap()
    } else {
        chords.max_by_key(key).unwrap()
    }
}

pub fn color_along_path(g: &CubicGraph, path: &Walk) -> Result<PathColoring> {
    if !is_hamiltonian_path(g, path) {
        return Err(Error::NotHamiltonian);
    }
    let n = g.n();
    let mut pos = vec![0; n];
    for (i, &v) in path.vertices().iter().enumerate() {
        pos[v] = i + 1;
    }
    let mut colours = vec![Colour::Gamma; g.m()];
    for (i, &e) in path.edges().iter().enumerate() {
        colours[e] = if i % 2 == 0 { Colour::Alpha } else { Colour::Beta };
    }
    let deltas = [
        delta_chord(g, &pos, path.start(), true),
        delta_chord(g, &pos, path.end(), false),
    ];
    for &e in &deltas {
        colours[e] = Colour::Delta;
    }
    let colouring = EdgeColoring::new(colours);
    let m_alpha = Matching::perfect(g, colouring.class(Colour::Alpha))?;
    let pc = PathColoring {
        path: path.clone(),
        pos,
        colouring,
        m_alpha,
        deltas,
    };
    pc.check(g)?;
    Ok(pc)
}

/// A cycle of the 2-factor left by the alpha class, with the smallest and
/// largest index of a path edge on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleInfo {
    /// Closed walk starting at the vertex of smallest path position.
    pub walk: Walk,
    pub min: usize,
    pub max: usize,
}

impl CycleInfo {
    pub fn len(&self) -> usize {
        self.walk.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walk.is_empty()
    }

    pub fn is_odd(&self) -> bool {
        self.len() % 2 == 1
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.walk.contains_vertex(v)
    }

    /// Index of `v` on the closed walk.
    pub fn index_of(&self, v: VertexId) -> Option<usize> {
        self.walk.position(v)
    }

    /// Vertices of the cycle in walk order, without the repeated start.
    pub fn ring(&self) -> &[VertexId] {
        &self.walk.vertices()[..self.len()]
    }
}

/// The 2-factor of the alpha class when it has exactly two odd cycles: the
/// one through the first path vertex comes first, the one through the last
/// comes last, the even cycles sit between ordered by `min`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddPairDecomposition {
    cycles: Vec<CycleInfo>,
    cycle_of: Vec<usize>,
}

impl OddPairDecomposition {
    pub fn cycles(&self) -> &[CycleInfo] {
        &self.cycles
    }

    pub fn k(&self) -> usize {
        self.cycles.len()
    }

    pub fn cycle(&self, i: usize) -> &CycleInfo {
        &self.cycles[i]
    }

    /// Index of the cycle through `v`.
    pub fn cycle_of(&self, v: VertexId) -> usize {
        self.cycle_of[v]
    }

    pub fn first(&self) -> &CycleInfo {
        &self.cycles[0]
    }

    pub fn last(&self) -> &CycleInfo {
        &self.cycles[self.cycles.len() - 1]
    }

    pub fn last_index(&self) -> usize {
        self.cycles.len() - 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decomposition {
    /// All cycles even: the alpha class extends to a proper colouring.
    Colourable(EdgeColoring),
    OddPair(OddPairDecomposition),
}

pub fn decompose(g: &CubicGraph, pc: &PathColoring) -> Result<Decomposition> {
    let m = pc.m_alpha().edges();
    let n = pc.n();
    let mut seen = vec![false; g.n()];
    let mut raw = Vec::new();
    for p in 1..=n {
        let s = pc.vertex_at(p);
        if seen[s] {
            continue;
        }
        let vs = trace_cycle(g, m, s);
        for &v in &vs {
            seen[v] = true;
        }
        let walk = Walk::from_vertices(g, &vs)?;
        let idx: Vec<usize> = walk.edges().iter().filter_map(|&e| pc.path_index(g, e)).collect();
        invariant(!idx.is_empty(), || format!("cycle through {s} has no path edge"))?;
        for &i in &idx {
            invariant(i % 2 == 0, || format!("alpha path edge {i} on a cycle"))?;
        }
        raw.push(CycleInfo {
            min: *idx.iter().min().unwrap(),
            max: *idx.iter().max().unwrap(),
            walk,
        });
    }
    let odd: Vec<usize> = (0..raw.len()).filter(|&i| raw[i].is_odd()).collect();
    if odd.is_empty() {
        return Ok(Decomposition::Colourable(coloring_from_pm(g, pc.m_alpha())?));
    }
    let (first, last) = (pc.vertex_at(1), pc.vertex_at(n));
    let c1 = raw.iter().position(|c| c.contains(first)).unwrap();
    let ck = raw.iter().position(|c| c.contains(last)).unwrap();
    invariant(odd.len() == 2 && odd.contains(&c1) && odd.contains(&ck) && c1 != ck, || {
        format!("unexpected odd cycles {odd:?} (path ends on cycles {c1} and {ck})")
    })?;
    let mut middle: Vec<CycleInfo> = raw
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != c1 && *i != ck)
        .map(|(_, c)| c.clone())
        .collect();
    middle.sort_by_key(|c| c.min);
    let mut cycles = vec![raw[c1].clone()];
    cycles.extend(middle);
    cycles.push(raw[ck].clone());
    let mut cycle_of = vec![usize::MAX; g.n()];
    for (i, c) in cycles.iter().enumerate() {
        invariant(c.min % 2 == 0 && c.max % 2 == 0, || "odd min or max index".into())?;
        invariant((c.min == c.max) == (c.len() == 3), || {
            format!("cycle {i}: min == max must mean a triangle")
        })?;
        for &v in c.ring() {
            cycle_of[v] = i;
        }
    }
    for v in 0..g.n() {
        if v == first || v == last {
            continue;
        }
        let on_cycle: Vec<_> = g
            .incident(v)
            .iter()
            .filter(|&&e| !pc.is_alpha(e))
            .map(|&e| pc.colour(e))
            .collect();
        invariant(on_cycle.contains(&Colour::Beta) && on_cycle.len() == 2, || {
            format!("vertex {v} lacks one beta edge and one chord on its cycle")
        })?;
    }
    Ok(Decomposition::OddPair(OddPairDecomposition { cycles, cycle_of }))
}
