//! Hamiltonian paths by depth-first search with feasibility pruning.
//!
//! Pruning only discards branches that provably cannot be completed, so the
//! first path found is the same as for plain DFS: starts ascending, then
//! neighbours ascending.

use crate::error::{Error, Result};
use crate::graph::{CubicGraph, VertexId};
use crate::walk::Walk;

pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

struct Search<'g> {
    g: &'g CubicGraph,
    visited: Vec<bool>,
    path: Vec<VertexId>,
    nodes: u64,
    budget: u64,
    close_to: Option<VertexId>,
}

impl Search<'_> {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::ResourceCap {
                what: "Hamiltonian search nodes",
                limit: self.budget,
            });
        }
        Ok(())
    }

    /// Can the unvisited vertices still be covered by a path continuing
    /// from `end`? Checks connectivity and counts forced path ends.
    fn feasible(&self, end: VertexId) -> bool {
        let g = self.g;
        let n = g.n();
        let remaining = n - self.path.len();
        if remaining == 0 {
            return true;
        }
        let mut forced_ends = 0;
        let mut start = None;
        for v in 0..n {
            if self.visited[v] {
                continue;
            }
            let free = g.neighbors(v).iter().filter(|&&w| !self.visited[w]).count();
            let touches_end = g.neighbors(v).contains(&end);
            let closes = self.close_to.is_some_and(|c| g.neighbors(v).contains(&c));
            let avail = free + touches_end as usize;
            if avail == 0 {
                return false;
            }
            if avail == 1 && !(self.close_to.is_some() && closes) {
                forced_ends += 1;
            }
            if touches_end && start.is_none() {
                start = Some(v);
            }
        }
        if forced_ends > 1 || start.is_none() {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![start.unwrap()];
        seen[start.unwrap()] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if !self.visited[w] && !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == remaining
    }

    fn extend(&mut self) -> Result<bool> {
        self.tick()?;
        let g = self.g;
        let u = *self.path.last().unwrap();
        if self.path.len() == g.n() {
            return Ok(match self.close_to {
                Some(c) => g.neighbors(u).contains(&c),
                None => true,
            });
        }
        if !self.feasible(u) {
            return Ok(false);
        }
        for &w in g.neighbors(u) {
            if self.visited[w] {
                continue;
            }
            self.visited[w] = true;
            self.path.push(w);
            if self.extend()? {
                return Ok(true);
            }
            self.path.pop();
            self.visited[w] = false;
        }
        Ok(false)
    }
}

fn search(g: &CubicGraph, budget: u64, cycle: bool) -> Result<Option<Walk>> {
    let mut s = Search {
        g,
        visited: vec![false; g.n()],
        path: Vec::with_capacity(g.n()),
        nodes: 0,
        budget,
        close_to: None,
    };
    let starts = if cycle { 0..1 } else { 0..g.n() };
    for start in starts {
        s.visited[start] = true;
        s.path.push(start);
        if cycle {
            s.close_to = Some(start);
        }
        if s.extend()? {
            return Walk::from_vertices(g, &s.path).map(Some);
        }
        s.path.pop();
        s.visited[start] = false;
    }
    Ok(None)
}

/// First Hamiltonian path in (start, neighbour) ascending DFS order.
pub fn find_hamiltonian_path(g: &CubicGraph, node_budget: u64) -> Result<Option<Walk>> {
    search(g, node_budget, false)
}

/// A Hamiltonian path from vertex 0 whose ends are adjacent, as a path
/// (the closing edge is not repeated).
pub fn find_hamiltonian_cycle(g: &CubicGraph, node_budget: u64) -> Result<Option<Walk>> {
    search(g, node_budget, true)
}

pub fn is_hamiltonian_path(g: &CubicGraph, w: &Walk) -> bool {
    w.vertices().len() == g.n() && w.is_path() && w.validate(g).is_ok()
}
