//! Rerouting two walks through an inner sequence cycle so that one of them
//! crosses it along a gamma-chain and then well-intersects it.

use crate::coloring::Colour;
use crate::error::{invariant, Error, Result};
use crate::graph::{CubicGraph, VertexId};
use crate::walk::Walk;

use super::gamma::GammaSequence;
use super::path_coloring::{OddPairDecomposition, PathColoring};
use super::walks::{alpha_edges, check_end_to_end, well_intersects};

/// Shared read-only inputs of the rerouting steps.
#[derive(Debug, Clone, Copy)]
pub struct Frame<'a> {
    pub g: &'a CubicGraph,
    pub pc: &'a PathColoring,
    pub dec: &'a OddPairDecomposition,
    pub seq: &'a GammaSequence,
}

fn stage_err(stage: &str, detail: String) -> Error {
    Error::ConstructionError {
        stage: stage.into(),
        detail,
    }
}

fn ensure(ok: bool, stage: &str, detail: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(stage_err(stage, detail()))
    }
}

/// An inner sequence cycle opened at its max beta edge: `line` runs along the
/// cycle from the vertex at position `max` to the one at `max + 1`.
struct OpenCycle {
    line: Vec<VertexId>,
    ring: Vec<VertexId>,
}

impl OpenCycle {
    fn new(f: &Frame<'_>, j: usize) -> Self {
        let cyc = f.dec.cycle(f.seq.get(j));
        let ring = cyc.ring().to_vec();
        let top = f.pc.vertex_at(f.seq.max(j));
        let next = f.pc.vertex_at(f.seq.max(j) + 1);
        let len = ring.len();
        let at = ring.iter().position(|&v| v == top).unwrap();
        // walk away from `next`
        let step = if ring[(at + 1) % len] == next { len - 1 } else { 1 };
        let line = (0..len).map(|i| ring[(at + i * step) % len]).collect();
        OpenCycle { line, ring }
    }

    fn index(&self, v: VertexId) -> Option<usize> {
        self.line.iter().position(|&u| u == v)
    }

    fn contains(&self, v: VertexId) -> bool {
        self.ring.contains(&v)
    }

    /// Sub-line between two line indices, from `a` to `b`.
    fn segment(&self, a: usize, b: usize) -> Vec<VertexId> {
        if a <= b {
            self.line[a..=b].to_vec()
        } else {
            self.line[b..=a].iter().rev().copied().collect()
        }
    }

    fn last(&self) -> usize {
        self.line.len() - 1
    }

    /// Cycle path from `from` to `to` that avoids `avoid`.
    fn arc_avoiding(&self, from: VertexId, to: VertexId, avoid: VertexId) -> Option<Vec<VertexId>> {
        let len = self.ring.len();
        let s = self.ring.iter().position(|&v| v == from)?;
        for step in [1, len - 1] {
            let mut vs = vec![from];
            let mut i = s;
            while self.ring[i] != to {
                i = (i + step) % len;
                vs.push(self.ring[i]);
            }
            if !vs.contains(&avoid) {
                return Some(vs);
            }
        }
        None
    }
}

/// How the two walks were rebuilt around the gamma-chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RerouteBranch {
    /// The first walk already follows the gamma-chain; both kept.
    NoSwap,
    /// The first walk kept, its partner rebuilt through the other end of
    /// the max edge.
    NoSwapPartnerRebuilt,
    /// Both rebuilt; each continues along its own former suffix.
    Rebuilt,
    /// Both rebuilt; suffixes exchanged.
    Swap,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reroute {
    pub j: usize,
    pub r: Walk,
    pub r_prime: Walk,
    pub branch: RerouteBranch,
    pub x_j: VertexId,
    pub x_prime_j: VertexId,
    pub y_j: VertexId,
    pub y_prime_j: VertexId,
    /// Walk indices of `y_j` on `r` and `y'_j` on `r_prime`.
    pub y_at: (usize, usize),
    /// Sequence positions reached next by `r` and `r_prime`.
    pub sigma: (usize, usize),
    /// Walk indices on `r` and `r_prime` of their first vertex in the cycle
    /// of position `sigma` after `y_j`, resp. `y'_j`.
    pub target_at: (usize, usize),
}

impl Reroute {
    pub fn target(&self) -> VertexId {
        self.r.vertices()[self.target_at.0]
    }

    pub fn target_prime(&self) -> VertexId {
        self.r_prime.vertices()[self.target_at.1]
    }
}

fn first_on(w: &Walk, oc: &OpenCycle) -> Option<usize> {
    w.vertices().iter().position(|&v| oc.contains(v))
}

fn occurrence_after(w: &Walk, v: VertexId, from: usize) -> Option<usize> {
    w.vertices()[from..].iter().position(|&u| u == v).map(|i| i + from)
}

fn suffix(w: &Walk, at: usize) -> Walk {
    w.slice(at, w.len())
}

/// Next sequence position met by `w` after index `from`: the smallest inner
/// position beyond `j` with an end of its max edge on the rest of the walk,
/// else the last cycle. Returns the position and the index of the first
/// vertex of that cycle after `from`.
fn sigma(f: &Frame<'_>, w: &Walk, from: usize, j: usize) -> Result<(usize, usize)> {
    let h = f.seq.h();
    let rest = &w.vertices()[from..];
    let s = (j + 1..h)
        .find(|&t| {
            let ends = [f.pc.vertex_at(f.seq.max(t)), f.pc.vertex_at(f.seq.max(t) + 1)];
            rest.iter().any(|v| ends.contains(v))
        })
        .unwrap_or(h);
    let cyc = f.dec.cycle(f.seq.get(s));
    let at = rest.iter().position(|&v| cyc.contains(v)).ok_or_else(|| {
        stage_err("reroute", format!("walk never reaches sequence cycle {s}"))
    })?;
    Ok((s, at + from))
}

fn is_cycle_path(f: &Frame<'_>, oc: &OpenCycle, w: &Walk) -> bool {
    w.is_path() && w.vertices().iter().all(|&v| oc.contains(v)) && w.edges().iter().all(|&e| !f.pc.is_alpha(e))
}

fn is_gamma_chain(f: &Frame<'_>, w: &Walk) -> bool {
    w.len() % 2 == 1
        && f.pc.colour(w.edges()[0]) == Colour::Gamma
        && f.pc.colour(*w.edges().last().unwrap()) == Colour::Gamma
}

/// Builds `R`, `R'` from `Q`, `Q'` around inner sequence position `j` and
/// checks the five conclusions plus alpha-disjointness.
pub fn reroute_pair(f: &Frame<'_>, q: &Walk, q_prime: &Walk, j: usize) -> Result<Reroute> {
    let g = f.g;
    let oc = OpenCycle::new(f, j);
    let xi = first_on(q, &oc).ok_or_else(|| stage_err("reroute", format!("Q misses cycle {j}")))?;
    let xpi = first_on(q_prime, &oc)
        .ok_or_else(|| stage_err("reroute", format!("Q' misses cycle {j}")))?;
    let (x_j, x_prime_j) = (q.vertices()[xi], q_prime.vertices()[xpi]);
    let t = oc.index(x_j).unwrap();
    // the odd one of line[..=t] and line[t..]
    let chain = if t % 2 == 1 { oc.segment(t, 0) } else { oc.segment(t, oc.last()) };
    let y_j = *chain.last().unwrap();
    let y_prime_j = if y_j == oc.line[0] { oc.line[oc.last()] } else { oc.line[0] };
    let p = Walk::from_vertices(g, &chain)?;
    ensure(is_gamma_chain(f, &p), "reroute", || format!("odd arc at {j} is not a gamma-chain"))?;

    let follows = q.vertices().len() > xi + p.len() && q.slice(xi, xi + p.len()) == p;
    let partner_ok = |r2: &Walk| -> Option<usize> {
        let yi = occurrence_after(r2, y_prime_j, xpi)?;
        let mid = r2.slice(xpi, yi);
        is_cycle_path(f, &oc, &mid).then_some(yi)
    };
    let rebuild_prime = |tail_from: &Walk, tail_at: usize| -> Result<Walk> {
        let xp_idx = oc.index(x_prime_j).unwrap();
        let yp_idx = oc.index(y_prime_j).unwrap();
        let pp = Walk::from_vertices(g, &oc.segment(xp_idx, yp_idx))?;
        q_prime.prefix_to(x_prime_j).unwrap().concat(&pp)?.concat(&suffix(tail_from, tail_at))
    };

    let (r, r_prime, branch, ry, rpy) = if follows {
        let ry = xi + p.len();
        if let Some(yi) = partner_ok(q_prime) {
            (q.clone(), q_prime.clone(), RerouteBranch::NoSwap, ry, yi)
        } else {
            let at = occurrence_after(q_prime, y_prime_j, xpi).ok_or_else(|| {
                stage_err("reroute", format!("neither walk can take y'_{j} after Q keeps the chain"))
            })?;
            let rp = rebuild_prime(q_prime, at)?;
            let rpy = rp.len() - (q_prime.len() - at);
            (q.clone(), rp, RerouteBranch::NoSwapPartnerRebuilt, ry, rpy)
        }
    } else {
        // tails: whichever walk passes y_j feeds R, the other feeds R'
        let in_q = occurrence_after(q, y_j, xi);
        let in_qp = occurrence_after(q_prime, y_j, xpi);
        let (tail, tail_at, other, swap) = match (in_qp, in_q) {
            (Some(a), _) => (q_prime, a, q, true),
            (None, Some(a)) => (q, a, q_prime, false),
            (None, None) => {
                return Err(stage_err("reroute", format!("no walk reaches y_{j} after the cycle")))
            }
        };
        let other_from = if swap { xi } else { xpi };
        let ot_at = occurrence_after(other, y_prime_j, other_from).ok_or_else(|| {
            stage_err("reroute", format!("the other walk misses y'_{j}"))
        })?;
        let r = q.prefix_to(x_j).unwrap().concat(&p)?.concat(&suffix(tail, tail_at))?;
        let rp = rebuild_prime(other, ot_at)?;
        let ry = xi + p.len();
        let rpy = rp.len() - (other.len() - ot_at);
        let branch = if swap { RerouteBranch::Swap } else { RerouteBranch::Rebuilt };
        (r, rp, branch, ry, rpy)
    };

    // conclusions
    ensure(
        r.prefix_to(x_j) == q.prefix_to(x_j) && r_prime.prefix_to(x_prime_j) == q_prime.prefix_to(x_prime_j),
        "reroute",
        || format!("prefixes changed at {j}"),
    )?;
    ensure(
        r.vertices()[ry] == y_j && r_prime.vertices()[rpy] == y_prime_j,
        "reroute",
        || format!("max edge ends misplaced at {j}"),
    )?;
    let (rs, rps) = (suffix(&r, ry), suffix(&r_prime, rpy));
    let feeds = |w: &Walk, v: VertexId, tail: &Walk| {
        (0..w.vertices().len()).any(|i| w.vertices()[i] == v && suffix(w, i) == *tail)
    };
    let kept = feeds(q, y_j, &rs) && feeds(q_prime, y_prime_j, &rps);
    let swapped = feeds(q_prime, y_j, &rs) && feeds(q, y_prime_j, &rps);
    ensure(kept || swapped, "reroute", || format!("suffixes at {j} come from neither walk"))?;
    let (mid, mid_p) = (r.slice(xi, ry), r_prime.slice(xpi, rpy));
    ensure(is_cycle_path(f, &oc, &mid) && is_cycle_path(f, &oc, &mid_p), "reroute", || {
        format!("middle parts at {j} leave the cycle")
    })?;
    ensure(is_gamma_chain(f, &mid), "reroute", || format!("R misses the gamma-chain at {j}"))?;
    ensure(alpha_edges(g, f.pc, &r).is_disjoint(&alpha_edges(g, f.pc, &r_prime)), "reroute", || {
        format!("R and R' share an alpha edge at {j}")
    })?;
    check_end_to_end(g, f.pc, f.dec, &r, "R")?;
    check_end_to_end(g, f.pc, f.dec, &r_prime, "R'")?;

    let (s, ts) = sigma(f, &r, ry, j)?;
    let (sp, tsp) = sigma(f, &r_prime, rpy, j)?;
    let h = f.seq.h();
    let want_ok = if j + 2 <= h {
        let mut pair = [s, sp];
        pair.sort_unstable();
        pair == [j + 1, j + 2]
    } else {
        s == h && sp == h
    };
    ensure(want_ok, "reroute", || format!("next positions after {j} are {s} and {sp}"))?;
    Ok(Reroute {
        j,
        r,
        r_prime,
        branch,
        x_j,
        x_prime_j,
        y_j,
        y_prime_j,
        y_at: (ry, rpy),
        sigma: (s, sp),
        target_at: (ts, tsp),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WellBranch {
    /// The walk after `y_j` never uses the beta-chain.
    Disjoint,
    /// It does, stepping towards `y_j` on the farthest such edge.
    TowardsEnd,
    /// It does, stepping away from `y_j`.
    AwayFromEnd,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WellIntersecting {
    pub s: Walk,
    pub s_prime: Walk,
    pub branch: WellBranch,
    /// The beta-chain edge picked, in walk order.
    pub ab: Option<(VertexId, VertexId)>,
    /// `s` ends at the target of `r_prime` rather than that of `r`.
    pub crossed: bool,
}

/// Trims and splices `R`, `R'` between the cycle and their next sequence
/// targets so that the first piece well-intersects the cycle.
pub fn make_well_intersecting(f: &Frame<'_>, rr: &Reroute) -> Result<WellIntersecting> {
    let g = f.g;
    let j = rr.j;
    let oc = OpenCycle::new(f, j);
    let (r, rp) = (&rr.r, &rr.r_prime);
    let xi = r.position(rr.x_j).unwrap();
    let xpi = rp.position(rr.x_prime_j).unwrap();
    let (ry, rpy) = rr.y_at;
    let (tz, tzp) = rr.target_at;

    // beta-chain from y_j across the max edge back to x_j
    let t = oc.index(rr.x_j).unwrap();
    let mut chain = vec![rr.y_j];
    if oc.line[0] == rr.y_j {
        chain.extend(oc.segment(oc.last(), t));
    } else {
        chain.extend(oc.segment(0, t));
    }
    let chain_at = |v: VertexId| chain.iter().position(|&u| u == v);
    let on_chain = |u: VertexId, v: VertexId| match (chain_at(u), chain_at(v)) {
        (Some(a), Some(b)) => a.abs_diff(b) == 1,
        _ => false,
    };

    let vs = r.vertices();
    let mut pick: Option<(usize, usize)> = None; // (walk index of a, chain index of a)
    for i in ry..tz {
        if on_chain(vs[i], vs[i + 1]) {
            let ca = chain_at(vs[i]).unwrap();
            if pick.is_none_or(|(_, best)| ca > best) {
                pick = Some((i, ca));
            }
        }
    }
    let prefix_end = r.slice(xi, ry);
    let (s, s_prime, branch, ab, crossed) = match pick {
        None => (r.slice(xi, tz), rp.slice(xpi, tzp), WellBranch::Disjoint, None, false),
        Some((ia, ca)) => {
            let (a, b) = (vs[ia], vs[ia + 1]);
            let cb = chain_at(b).unwrap();
            if cb < ca {
                let back = Walk::from_vertices(g, &chain[..=cb])?;
                let s = prefix_end.concat(&back)?.concat(&r.slice(ia + 1, tz))?;
                (s, rp.slice(xpi, tzp), WellBranch::TowardsEnd, Some((a, b)), false)
            } else {
                let to_a = r.slice(ry, ia);
                let mut back: Vec<VertexId> = chain[1..=ca].to_vec();
                back.reverse();
                let back = Walk::from_vertices(g, &back)?;
                let s = prefix_end
                    .concat(&to_a)?
                    .concat(&back)?
                    .concat(&rp.slice(rpy, tzp))?;
                let arc = oc.arc_avoiding(rr.x_prime_j, b, a).ok_or_else(|| {
                    stage_err("well-intersect", format!("no arc from x'_{j} to b avoiding a"))
                })?;
                let sp = Walk::from_vertices(g, &arc)?.concat(&r.slice(ia + 1, tz))?;
                (s, sp, WellBranch::AwayFromEnd, Some((a, b)), true)
            }
        }
    };

    let (z, zp) = (rr.target(), rr.target_prime());
    ensure(s.start() == rr.x_j && s_prime.start() == rr.x_prime_j, "well-intersect", || {
        format!("S, S' start elsewhere at {j}")
    })?;
    let ends_ok = if crossed {
        s.end() == zp && s_prime.end() == z
    } else {
        s.end() == z && s_prime.end() == zp
    };
    ensure(ends_ok && z != zp, "well-intersect", || format!("S, S' end elsewhere at {j}"))?;
    let allowed = |v: &VertexId| {
        r.slice(xi, tz).contains_vertex(*v) || rp.slice(xpi, tzp).contains_vertex(*v) || oc.contains(*v)
    };
    ensure(s.vertices().iter().chain(s_prime.vertices()).all(allowed), "well-intersect", || {
        format!("S, S' leave their allowed region at {j}")
    })?;
    ensure(alpha_edges(g, f.pc, &s).is_disjoint(&alpha_edges(g, f.pc, &s_prime)), "well-intersect", || {
        format!("S and S' share an alpha edge at {j}")
    })?;
    let lead = r.prefix_to(rr.x_j).unwrap().concat(&s)?;
    ensure(
        well_intersects(g, f.pc, &lead, f.dec.cycle(f.seq.get(j))),
        "well-intersect",
        || format!("S does not well-intersect cycle {j} ({branch:?})"),
    )?;
    invariant(s.validate(g).is_ok() && s_prime.validate(g).is_ok(), || "bad splice".into())?;
    Ok(WellIntersecting {
        s,
        s_prime,
        branch,
        ab,
        crossed,
    })
}
