//! Three perfect matchings meeting the alpha class in sets free of odd cuts,
//! each with two joins avoiding that intersection.

use std::collections::BTreeSet;

use crate::coloring::EdgeColoring;
use crate::cuts::{is_join, odd_cut_inside};
use crate::error::{Error, Result};
use crate::graph::{CubicGraph, VertexId};
use crate::hamilton::{find_hamiltonian_path, DEFAULT_NODE_BUDGET};
use crate::matchings::{extend_balanced, is_balanced, Matching};
use crate::sets::EdgeSet;
use crate::walk::Walk;

use super::reroute::{
    make_well_intersecting, reroute_pair, Frame, Reroute, RerouteBranch, WellBranch, WellIntersecting,
};
use super::walks::{alpha_edges, check_end_to_end, intersection_profile, IntersectionProfile};
use super::path_coloring::CycleInfo;
use super::{prepare, PipelineState, Prepared};

fn fail(stage: &str, detail: String) -> Error {
    Error::ConstructionError {
        stage: stage.into(),
        detail,
    }
}

/// One application of the rerouting pair on an inner cycle, with its inputs
/// so that every conclusion can be re-checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaStep {
    pub j: usize,
    /// Index in the triple of the walk rerouted alongside.
    pub partner: usize,
    pub q: Walk,
    pub q_prime: Walk,
    pub reroute: Reroute,
    pub well: WellIntersecting,
    /// The walk still well-intersects the cycle once its tail is reattached.
    pub well_after_reattach: bool,
}

impl LemmaStep {
    pub fn reroute_branch(&self) -> RerouteBranch {
        self.reroute.branch
    }

    pub fn well_branch(&self) -> WellBranch {
        self.well.branch
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingRound {
    /// Which of the three walks was processed.
    pub walk: usize,
    /// The processed walk `S_i` and the two partners, as left by the loop.
    pub walks: [Walk; 3],
    pub alpha: EdgeSet,
    pub matching: Matching,
    /// Joins closed through each partner, in partner order.
    pub joins: [EdgeSet; 2],
    pub steps: Vec<LemmaStep>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem6Certificate {
    pub path: Walk,
    pub m_alpha: Matching,
    pub h: usize,
    pub rounds: Vec<MatchingRound>,
}

impl Theorem6Certificate {
    /// Re-checks every claim from the stored sets alone.
    pub fn verify(&self, g: &CubicGraph) -> bool {
        self.rounds.iter().all(|r| {
            let inter = self.m_alpha.intersection(&r.matching);
            g.is_perfect_matching(r.matching.edges())
                && odd_cut_inside(g, &inter).is_none()
                && r.joins.iter().all(|j| is_join(g, j) && inter.is_disjoint(j))
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Theorem6Outcome {
    Escape(EdgeColoring),
    Certified(Box<Theorem6Certificate>),
}

/// Cycle path from `from` to `to` along ring order.
fn cycle_arc(c: &CycleInfo, from: VertexId, to: VertexId) -> Vec<VertexId> {
    let ring = c.ring();
    let s = ring.iter().position(|&v| v == from).unwrap();
    let mut out = vec![from];
    let mut i = s;
    while ring[i] != to {
        i = (i + 1) % ring.len();
        out.push(ring[i]);
    }
    out
}

/// Edges used an odd number of times by the closed walk
/// `s`, then around the last odd cycle, back along `other`, then around the
/// first odd cycle.
fn even_subgraph(g: &CubicGraph, st: &PipelineState, s: &Walk, other: &Walk) -> Result<EdgeSet> {
    let dec = &st.decomposition;
    let far = Walk::from_vertices(g, &cycle_arc(dec.last(), s.end(), other.end()))?;
    let near = Walk::from_vertices(g, &cycle_arc(dec.first(), other.start(), s.start()))?;
    let closed = s.concat(&far)?.concat(&other.reversed())?.concat(&near)?;
    Ok(closed.edge_parity_set(g))
}

fn failing_cycles(g: &CubicGraph, st: &PipelineState, w: &Walk) -> Vec<(usize, IntersectionProfile)> {
    let dec = &st.decomposition;
    (0..dec.k())
        .map(|c| (c, intersection_profile(g, &st.colouring, w, dec.cycle(c))))
        .filter(|&(c, p)| {
            let odd = dec.cycle(c).is_odd();
            match p {
                IntersectionProfile::AllArcsOdd => false,
                IntersectionProfile::Untouched => odd,
                _ => true,
            }
        })
        .collect()
}

/// Runs the cycle-by-cycle rerouting for walk `i` and returns the final
/// walks with the steps taken.
pub(crate) fn reroute_walk(
    g: &CubicGraph,
    st: &PipelineState,
    i: usize,
) -> Result<([Walk; 3], Vec<LemmaStep>)> {
    let f = Frame {
        g,
        pc: &st.colouring,
        dec: &st.decomposition,
        seq: &st.sequence,
    };
    let mut walks = [0, 1, 2].map(|s| st.walks.walk(s).clone());
    let mut done = BTreeSet::new();
    let mut steps = Vec::new();
    loop {
        let ends = |j: usize| [f.pc.vertex_at(f.seq.max(j)), f.pc.vertex_at(f.seq.max(j) + 1)];
        let next = f
            .seq
            .inner()
            .filter(|j| !done.contains(j))
            .filter_map(|j| ends(j).iter().filter_map(|&v| walks[i].position(v)).min().map(|p| (p, j)))
            .min();
        let Some((_, j)) = next else { break };
        let [top, top1] = ends(j);
        let mine: Vec<_> = [top, top1].into_iter().filter(|&v| walks[i].contains_vertex(v)).collect();
        let others: Vec<usize> = (0..3)
            .filter(|&o| o != i)
            .filter(|&o| [top, top1].iter().any(|&v| walks[o].contains_vertex(v)))
            .collect();
        let partner = match others.as_slice() {
            [o] => *o,
            [a, b] => {
                let takes_other = |o: usize| [top, top1].iter().any(|&v| !mine.contains(&v) && walks[o].contains_vertex(v));
                if takes_other(*a) { *a } else { *b }
            }
            _ => return Err(fail("theorem6", format!("walk {i}: no partner through cycle {j}"))),
        };
        let rr = reroute_pair(&f, &walks[i], &walks[partner], j)?;
        let wi = make_well_intersecting(&f, &rr)?;
        let (r, rp) = (&rr.r, &rr.r_prime);
        let head = r.prefix_to(rr.x_j).unwrap();
        let head_p = rp.prefix_to(rr.x_prime_j).unwrap();
        let tail = r.slice(rr.target_at.0, r.len());
        let tail_p = rp.slice(rr.target_at.1, rp.len());
        let (new_s, new_p) = if wi.crossed {
            (head.concat(&wi.s)?.concat(&tail_p)?, head_p.concat(&wi.s_prime)?.concat(&tail)?)
        } else {
            (head.concat(&wi.s)?.concat(&tail)?, head_p.concat(&wi.s_prime)?.concat(&tail_p)?)
        };
        check_end_to_end(g, f.pc, f.dec, &new_s, "S")?;
        check_end_to_end(g, f.pc, f.dec, &new_p, "partner")?;
        let mut next = walks.clone();
        next[i] = new_s.clone();
        next[partner] = new_p.clone();
        let alphas: Vec<EdgeSet> = next.iter().map(|w| alpha_edges(g, f.pc, w)).collect();
        for a in 0..3 {
            for b in a + 1..3 {
                if !alphas[a].is_disjoint(&alphas[b]) {
                    return Err(fail("theorem6", format!("walks {a} and {b} share an alpha edge after cycle {j}")));
                }
            }
        }
        let cyc = f.dec.cycle(f.seq.get(j));
        let well_after_reattach = super::walks::well_intersects(g, f.pc, &new_s, cyc);
        let (q, q_prime) = (walks[i].clone(), walks[partner].clone());
        walks[i] = new_s;
        walks[partner] = new_p;
        steps.push(LemmaStep {
            j,
            partner,
            q,
            q_prime,
            reroute: rr,
            well: wi,
            well_after_reattach,
        });
        done.insert(j);
    }
    Ok((walks, steps))
}

fn round(g: &CubicGraph, st: &PipelineState, i: usize) -> Result<MatchingRound> {
    let (walks, steps) = reroute_walk(g, st, i)?;
    let s = &walks[i];
    let alpha = alpha_edges(g, &st.colouring, s);
    let m_alpha = st.colouring.m_alpha();
    if !is_balanced(g, m_alpha, &alpha)? {
        return Err(fail(
            "theorem6",
            format!("walk {i}: alpha edges not balanced; cycles {:?}; steps {steps:?}", failing_cycles(g, st, s)),
        ));
    }
    let matching = extend_balanced(g, m_alpha, &alpha)?;
    if m_alpha.intersection(&matching) != alpha {
        return Err(fail("theorem6", format!("walk {i}: extension meets the alpha class elsewhere")));
    }
    if let Some(cut) = odd_cut_inside(g, &alpha) {
        return Err(fail("theorem6", format!("walk {i}: odd cut {:?} inside", cut.cut.to_vec())));
    }
    let partners: Vec<usize> = (0..3).filter(|&o| o != i).collect();
    let mut joins = Vec::with_capacity(2);
    for &o in &partners {
        let even = even_subgraph(g, st, s, &walks[o])?;
        let join = even.complement();
        if !is_join(g, &join) || !alpha.is_disjoint(&join) {
            return Err(fail("theorem6", format!("walk {i}: join through walk {o} fails")));
        }
        joins.push(join);
    }
    Ok(MatchingRound {
        walk: i,
        walks,
        alpha,
        matching,
        joins: joins.try_into().unwrap(),
        steps,
    })
}

/// Runs the construction along a given Hamiltonian path.
pub fn theorem6_from_path(g: &CubicGraph, path: &Walk) -> Result<Theorem6Outcome> {
    let st = match prepare(g, path)? {
        Prepared::Escape(c) => return Ok(Theorem6Outcome::Escape(c)),
        Prepared::Ready(st) => st,
    };
    let rounds = (0..3).map(|i| round(g, &st, i)).collect::<Result<Vec<_>>>()?;
    let cert = Theorem6Certificate {
        path: path.clone(),
        m_alpha: st.colouring.m_alpha().clone(),
        h: st.sequence.h(),
        rounds,
    };
    if !cert.verify(g) {
        return Err(fail("theorem6", "certificate failed re-verification".into()));
    }
    Ok(Theorem6Outcome::Certified(Box::new(cert)))
}

/// Finds a Hamiltonian path and runs the construction along it.
pub fn theorem6_pipeline(g: &CubicGraph) -> Result<Theorem6Outcome> {
    if !crate::graph::is_bridgeless(g) {
        return Err(Error::InvalidInput("graph has a bridge".into()));
    }
    let path = find_hamiltonian_path(g, DEFAULT_NODE_BUDGET)?.ok_or(Error::NotHamiltonian)?;
    theorem6_from_path(g, &path)
}
