//! Odd edge cuts inside edge sets, joins, and the two-matching witnesses
//! built on them.

use std::collections::VecDeque;

use crate::error::{invariant, Result};
use crate::graph::{boundary, components_after_removal, CubicGraph, EdgeId, VertexId};
use crate::matchings::{enumerate_perfect_matchings, Matching};
use crate::sets::{EdgeSet, VertexSet};

/// An odd vertex set `side` with `cut = δ(side)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutCertificate {
    pub side: VertexSet,
    pub cut: EdgeSet,
    /// Both `side` and its complement induce connected subgraphs.
    pub minimal: bool,
}

impl CutCertificate {
    /// Re-derives the cut from `side` and checks it lies in `s`.
    pub fn verify(&self, g: &CubicGraph, s: &EdgeSet) -> bool {
        self.side.is_odd()
            && boundary(g, &self.side) == self.cut
            && self.cut.is_odd()
            && self.cut.is_subset(s)
            && (!self.minimal || both_sides_connected(g, &self.side))
    }
}

fn induces_connected(g: &CubicGraph, x: &VertexSet) -> bool {
    let Some(s) = x.first() else { return false };
    let mut seen = g.empty_vertices();
    seen.insert(s);
    let mut stack = vec![s];
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if x.contains(w) && seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen.len() == x.len()
}

pub fn both_sides_connected(g: &CubicGraph, x: &VertexSet) -> bool {
    induces_connected(g, x) && induces_connected(g, &x.complement())
}

/// An odd set `X` with `δX ⊆ S`, if any. Such an `X` exists exactly when
/// some component of `(V, E - S)` has odd order. The first odd component
/// `K` is returned when its complement is connected; otherwise an odd
/// component `L` of `G - K` is returned. `L` is connected, and `V - L` is
/// connected through `K`, so the certificate is always minimal.
pub fn odd_cut_inside(g: &CubicGraph, s: &EdgeSet) -> Option<CutCertificate> {
    let comps = components_after_removal(g, s);
    let k = comps.into_iter().find(|c| c.vertices.is_odd())?.vertices;
    let side = if induces_connected(g, &k.complement()) {
        k
    } else {
        // components of G - K: remove every edge touching K
        let mut removed = g.empty_edges();
        for v in k.iter() {
            for &e in g.incident(v) {
                removed.insert(e);
            }
        }
        components_after_removal(g, &removed)
            .into_iter()
            .map(|c| c.vertices)
            .find(|c| c.is_disjoint(&k) && c.is_odd())
            .expect("odd complement of an odd set in an even graph has an odd part")
    };
    let cut = boundary(g, &side);
    let minimal = both_sides_connected(g, &side);
    Some(CutCertificate { side, cut, minimal })
}

/// Every vertex has odd degree in `(V, J)`.
pub fn is_join(g: &CubicGraph, j: &EdgeSet) -> bool {
    g.degrees_in(j).iter().all(|d| d % 2 == 1)
}

/// A join disjoint from `S`, if one exists. Writes `E - J = S ∪ F` with
/// `F ⊆ E - S` correcting the parity of `S`: `F` is the T-join, for `T` the
/// odd-degree vertices of `S`, carried by BFS spanning trees of the
/// components of `(V, E - S)` (lowest edge identifiers first).
pub fn join_avoiding(g: &CubicGraph, s: &EdgeSet) -> Option<EdgeSet> {
    let n = g.n();
    let odd_in_s: Vec<bool> = g.degrees_in(s).iter().map(|d| d % 2 == 1).collect();
    let mut parent: Vec<Option<EdgeId>> = vec![None; n];
    let mut seen = vec![false; n];
    let mut fix = g.empty_edges();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut order: Vec<VertexId> = vec![root];
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let mut inc = *g.incident(u);
            inc.sort_unstable();
            for e in inc {
                if s.contains(e) {
                    continue;
                }
                let w = g.other_end(e, u);
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(e);
                    order.push(w);
                    queue.push_back(w);
                }
            }
        }
        // subtree parities, leaves first
        let mut carry: Vec<bool> = vec![false; n];
        for &v in &order {
            carry[v] = odd_in_s[v];
        }
        for &v in order.iter().rev() {
            if let Some(e) = parent[v] {
                if carry[v] {
                    fix.insert(e);
                    let p = g.other_end(e, v);
                    carry[p] = !carry[p];
                }
            }
        }
        if carry[root] {
            return None;
        }
    }
    let even = s.union(&fix);
    let j = even.complement();
    debug_assert!(is_join(g, &j));
    Some(j)
}

/// Two perfect matchings whose intersection contains no odd cut.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MsWitness {
    pub m1: Matching,
    pub m2: Matching,
    pub intersection: EdgeSet,
}

/// Over all pairs `i <= j` of the enumeration ordered by
/// `(|M_i ∩ M_j|, i, j)`, the first pair whose intersection contains no
/// odd cut. `None` would refute the two-matching conjecture for `g`.
pub fn ms_witness(g: &CubicGraph, cap: u64) -> Result<Option<MsWitness>> {
    let ms = enumerate_perfect_matchings(g, cap)?;
    let mut pairs: Vec<(usize, usize, usize)> = Vec::new();
    for i in 0..ms.len() {
        for j in i..ms.len() {
            pairs.push((ms[i].edges().intersection_len(ms[j].edges()), i, j));
        }
    }
    pairs.sort_unstable();
    for (_, i, j) in pairs {
        let inter = ms[i].intersection(&ms[j]);
        if odd_cut_inside(g, &inter).is_none() {
            return Ok(Some(MsWitness {
                m1: ms[i].clone(),
                m2: ms[j].clone(),
                intersection: inter,
            }));
        }
    }
    Ok(None)
}

/// Two perfect matchings and a join with empty common intersection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KrWitness {
    pub m1: Matching,
    pub m2: Matching,
    pub join: EdgeSet,
}

/// Built from [`ms_witness`]: the join avoids `M1 ∩ M2`. When the two
/// matchings are disjoint, `M1` itself is used as the join.
pub fn kr_witness(g: &CubicGraph, cap: u64) -> Result<Option<KrWitness>> {
    let Some(ms) = ms_witness(g, cap)? else {
        return Ok(None);
    };
    let join = if ms.intersection.is_empty() {
        ms.m1.edges().clone()
    } else {
        join_avoiding(g, &ms.intersection).ok_or_else(|| {
            crate::error::Error::InvariantViolation(
                "no join avoids an intersection free of odd cuts".into(),
            )
        })?
    };
    invariant(is_join(g, &join) && join.is_disjoint(&ms.intersection), || {
        "join check failed".into()
    })?;
    Ok(Some(KrWitness {
        m1: ms.m1,
        m2: ms.m2,
        join,
    }))
}
