//! Walks: vertex/edge sequences with first-occurrence order, sub-walks and
//! concatenation at a shared vertex.

use crate::error::{Error, Result};
use crate::graph::{CubicGraph, EdgeId, VertexId};
use crate::sets::EdgeSet;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Walk {
    vertices: Vec<VertexId>,
    edges: Vec<EdgeId>,
}

impl Walk {
    pub fn single(v: VertexId) -> Self {
        Walk {
            vertices: vec![v],
            edges: Vec::new(),
        }
    }

    /// Builds a walk from its vertex sequence, looking up each edge.
    pub fn from_vertices(g: &CubicGraph, vertices: &[VertexId]) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidInput("empty walk".into()));
        }
        let mut edges = Vec::with_capacity(vertices.len() - 1);
        for w in vertices.windows(2) {
            let e = g.edge_between(w[0], w[1]).ok_or_else(|| {
                Error::InvalidInput(format!("{} and {} are not adjacent", w[0], w[1]))
            })?;
            edges.push(e);
        }
        Ok(Walk {
            vertices: vertices.to_vec(),
            edges,
        })
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn start(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn end(&self) -> VertexId {
        *self.vertices.last().unwrap()
    }

    pub fn is_closed(&self) -> bool {
        self.start() == self.end() && !self.is_empty()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edges.contains(&e)
    }

    /// Index of the first occurrence of `v`; this is the walk order `≺`.
    pub fn position(&self, v: VertexId) -> Option<usize> {
        self.vertices.iter().position(|&u| u == v)
    }

    pub fn precedes(&self, z: VertexId, t: VertexId) -> bool {
        matches!((self.position(z), self.position(t)), (Some(a), Some(b)) if a < b)
    }

    /// Sub-walk between vertex indices `from..=to`.
    pub fn slice(&self, from: usize, to: usize) -> Walk {
        assert!(from <= to && to < self.vertices.len());
        Walk {
            vertices: self.vertices[from..=to].to_vec(),
            edges: self.edges[from..to].to_vec(),
        }
    }

    /// `W(z, t)`: from the first occurrence of `z` to the first occurrence of
    /// `t` after it. `z == t` gives the trivial walk.
    pub fn subwalk(&self, z: VertexId, t: VertexId) -> Option<Walk> {
        let a = self.position(z)?;
        let b = a + self.vertices[a..].iter().position(|&u| u == t)?;
        Some(self.slice(a, b))
    }

    /// Suffix starting at the first occurrence of `z`.
    pub fn suffix_from(&self, z: VertexId) -> Option<Walk> {
        let a = self.position(z)?;
        Some(self.slice(a, self.vertices.len() - 1))
    }

    /// Prefix ending at the first occurrence of `z`.
    pub fn prefix_to(&self, z: VertexId) -> Option<Walk> {
        let b = self.position(z)?;
        Some(self.slice(0, b))
    }

    pub fn reversed(&self) -> Walk {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        let mut edges = self.edges.clone();
        edges.reverse();
        Walk { vertices, edges }
    }

    /// `W + W'`, joined at `self.end() == other.start()`.
    pub fn concat(&self, other: &Walk) -> Result<Walk> {
        if self.end() != other.start() {
            return Err(Error::InvariantViolation(format!(
                "cannot concatenate walk ending at {} with walk starting at {}",
                self.end(),
                other.start()
            )));
        }
        let mut out = self.clone();
        out.vertices.extend_from_slice(&other.vertices[1..]);
        out.edges.extend_from_slice(&other.edges);
        Ok(out)
    }

    pub fn edge_set(&self, g: &CubicGraph) -> EdgeSet {
        g.edge_set(self.edges.iter().copied())
    }

    /// Edges traversed an odd number of times.
    pub fn edge_parity_set(&self, g: &CubicGraph) -> EdgeSet {
        let mut s = g.empty_edges();
        for &e in &self.edges {
            s.toggle(e);
        }
        s
    }

    pub fn is_path(&self) -> bool {
        let mut seen = self.vertices.clone();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    /// Checks that each edge joins its neighbouring vertices.
    pub fn validate(&self, g: &CubicGraph) -> Result<()> {
        if self.vertices.len() != self.edges.len() + 1 {
            return Err(Error::InvariantViolation("walk length mismatch".into()));
        }
        for (i, &e) in self.edges.iter().enumerate() {
            let (a, b) = g.endpoints(e);
            let (u, v) = (self.vertices[i], self.vertices[i + 1]);
            if !((a == u && b == v) || (a == v && b == u)) {
                return Err(Error::InvariantViolation(format!(
                    "edge {e} does not join {u} and {v}"
                )));
            }
        }
        Ok(())
    }
}
