//! Runs the library's searches and constructions for one graph and turns
//! their results into report sections.

use matchcert::caps::Caps;
use matchcert::coloring::{pm_without_odd_cut, three_edge_coloring, Colour, EdgeColoring};
use matchcert::connectivity::{cyclic_edge_connectivity, CyclicConnectivity};
use matchcert::cuts::{kr_witness, ms_witness, MsWitness};
use matchcert::fractional::{theorem3_check, theorem45_check, LemmaRoute};
use matchcert::hamilton::find_hamiltonian_path;
use matchcert::matchings::{enumerate_perfect_matchings, fan_raspaud_search, oddness};
use matchcert::traceable::{
    prepare, special_cases, theorem6_from_path, Prepared, Theorem6Outcome,
};
use matchcert::{is_bridgeless, CubicGraph, Error};

use crate::report::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckKind {
    Invariants,
    Ms,
    Kr,
    Fr,
    Thm1,
    Thm3,
    Thm45,
    Traceable,
}

impl CheckKind {
    pub const ALL: [CheckKind; 8] = [
        CheckKind::Invariants,
        CheckKind::Ms,
        CheckKind::Kr,
        CheckKind::Fr,
        CheckKind::Thm1,
        CheckKind::Thm3,
        CheckKind::Thm45,
        CheckKind::Traceable,
    ];
}

fn from_error<T>(e: Error) -> Check<T> {
    let reason = e.to_string();
    match e {
        Error::ResourceCap { .. } | Error::TooLarge { .. } => Check::Capped { reason },
        Error::InvalidInput(_) | Error::NotHamiltonian => Check::Skipped { reason },
        _ => Check::Fail { reason },
    }
}

fn lift<T>(r: matchcert::Result<Check<T>>) -> Check<T> {
    r.unwrap_or_else(from_error)
}

fn classes(g: &CubicGraph, c: &EdgeColoring) -> [EdgeList; 3] {
    Colour::PROPER.map(|k| EdgeList::new(g, &c.class(k)))
}

fn pair_cert(g: &CubicGraph, w: &MsWitness) -> PairCert {
    PairCert {
        m1: EdgeList::new(g, w.m1.edges()),
        m2: EdgeList::new(g, w.m2.edges()),
        intersection: EdgeList::new(g, &w.intersection),
    }
}

pub fn invariants(g: &CubicGraph, caps: &Caps) -> Check<Invariants> {
    lift((|| {
        let pms = enumerate_perfect_matchings(g, caps.matchings)?.len();
        let colouring = three_edge_coloring(g, caps.nodes)?;
        let (k, cut, side) = match cyclic_edge_connectivity(g, caps.cycles)? {
            CyclicConnectivity::Finite { size, side, cut } => {
                (Some(size), Some(EdgeList::new(g, &cut)), Some(vertex_list(&side)))
            }
            CyclicConnectivity::Unbounded => (None, None, None),
        };
        Ok(Check::Pass {
            cert: Invariants {
                bridgeless: is_bridgeless(g),
                girth: g.girth(),
                perfect_matchings: pms,
                chromatic_index: if colouring.is_some() { 3 } else { 4 },
                oddness: oddness(g, caps.matchings)?,
                cyclic_connectivity: k,
                cyclic_cut: cut,
                cyclic_side: side,
                colouring: colouring.map(|c| classes(g, &c)),
            },
        })
    })())
}

pub fn ms(g: &CubicGraph, caps: &Caps) -> Check<PairCert> {
    lift(ms_witness(g, caps.matchings).map(|w| match w {
        Some(w) => Check::Pass { cert: pair_cert(g, &w) },
        None => Check::Fail {
            reason: "every pair of perfect matchings meets in a set containing an odd cut".into(),
        },
    }))
}

pub fn kr(g: &CubicGraph, caps: &Caps) -> Check<JoinCert> {
    lift(kr_witness(g, caps.matchings).map(|w| match w {
        Some(w) => Check::Pass {
            cert: JoinCert {
                m1: EdgeList::new(g, w.m1.edges()),
                m2: EdgeList::new(g, w.m2.edges()),
                join: EdgeList::new(g, &w.join),
            },
        },
        None => Check::Fail {
            reason: "no two perfect matchings and a join with empty common intersection".into(),
        },
    }))
}

pub fn fr(g: &CubicGraph, caps: &Caps) -> Check<TripleCert> {
    lift(fan_raspaud_search(g, caps.matchings).map(|w| match w {
        Some((a, b, c)) => Check::Pass {
            cert: TripleCert {
                m1: EdgeList::new(g, a.edges()),
                m2: EdgeList::new(g, b.edges()),
                m3: EdgeList::new(g, c.edges()),
            },
        },
        None => Check::Fail {
            reason: "no three perfect matchings with empty common intersection".into(),
        },
    }))
}

pub fn thm1(g: &CubicGraph, caps: &Caps) -> Check<ColourabilityCert> {
    lift((|| {
        let colouring = three_edge_coloring(g, caps.nodes)?;
        let m = pm_without_odd_cut(g, caps.matchings)?;
        let cert = ColourabilityCert {
            colourable: colouring.is_some(),
            colouring: colouring.as_ref().map(|c| classes(g, c)),
            matching: m.as_ref().map(|m| EdgeList::new(g, m.edges())),
        };
        Ok(if colouring.is_some() == m.is_some() {
            Check::Pass { cert }
        } else {
            Check::Fail {
                reason: format!(
                    "colourable: {}, matching without odd cut: {}",
                    colouring.is_some(),
                    m.is_some()
                ),
            }
        })
    })())
}

pub fn thm3(g: &CubicGraph, caps: &Caps) -> Check<SmallPairCert> {
    lift(theorem3_check(g, caps).map(|r| Check::Pass {
        cert: SmallPairCert {
            m: EdgeList::new(g, r.m.edges()),
            m_prime: EdgeList::new(g, r.m_prime.edges()),
            intersection: EdgeList::new(g, &r.intersection),
            three_cuts: r.three_cuts,
            bound: r.bound,
        },
    }))
}

pub fn thm45(g: &CubicGraph, caps: &Caps) -> Check<PairOrCutCert> {
    lift((|| {
        let r = theorem45_check(g, caps)?;
        if !r.applicable() {
            return Ok(Check::Skipped {
                reason: "cyclic connectivity below 3 or unbounded".into(),
            });
        }
        // cut witnesses come one per matching, in enumeration order
        let ms = if r.cut_alternative {
            enumerate_perfect_matchings(g, caps.matchings)?
        } else {
            Vec::new()
        };
        let cut_witnesses = ms
            .iter()
            .zip(&r.cut_witnesses)
            .map(|(m, c)| CutWitness {
                matching: EdgeList::new(g, m.edges()),
                side: vertex_list(&c.side),
                cut: EdgeList::new(g, &c.cut),
            })
            .collect();
        let weight_route = match &r.lemma_route {
            LemmaRoute::NotRun(why) => format!("not run: {why}"),
            LemmaRoute::Checked {
                considered,
                not_fractional,
                within_bound,
            } => format!(
                "{considered} matchings considered, {not_fractional} gave weights outside the polytope, {within_bound} selections within the pair bound"
            ),
        };
        let cert = PairOrCutCert {
            k: r.k,
            s: r.s,
            pair_bound: r.pair_bound.map(|x| x.to_string()),
            single_bound: r.single_bound.map(|x| x.to_string()),
            min_pair_intersection: r.min_pair_intersection,
            min_pair: r
                .min_pair
                .as_ref()
                .map(|(a, b)| [EdgeList::new(g, a.edges()), EdgeList::new(g, b.edges())]),
            pair_alternative: r.pair_alternative,
            cut_alternative: r.cut_alternative,
            cut_witnesses,
            order_threshold: r.order_threshold,
            two_matching_claim_applies: r.two_matching_claim_applies,
            ms_witness: r.ms_witness.as_ref().map(|w| pair_cert(g, w)),
            weight_route,
        };
        Ok(if r.holds() {
            Check::Pass { cert }
        } else {
            Check::Fail {
                reason: "neither the pair nor the cut alternative holds".into(),
            }
        })
    })())
}

const JOIN_NOTE: &str = "joins are complements of the even subgraph traced by each closed walk";
const SPLICE_NOTE: &str = "splices run from y_j to the first vertex of the next sequence cycle";

pub fn traceable(g: &CubicGraph, caps: &Caps) -> Check<TraceableCert> {
    lift((|| {
        if !is_bridgeless(g) {
            return Ok(Check::Skipped {
                reason: "graph has a bridge".into(),
            });
        }
        let Some(path) = find_hamiltonian_path(g, caps.nodes)? else {
            return Ok(Check::Skipped {
                reason: "graph has no Hamiltonian path".into(),
            });
        };
        let order = path.vertices().to_vec();
        let cert = match theorem6_from_path(g, &path)? {
            Theorem6Outcome::Escape(c) => TraceableCert::Escape {
                path: order,
                colouring: classes(g, &c),
            },
            Theorem6Outcome::Certified(cert) => {
                let special = match prepare(g, &path)? {
                    Prepared::Ready(st) => special_cases(g, &st)?.map(|w| SpecialCert {
                        route: format!("{:?}", w.route),
                        matchings: w.matchings.iter().map(|m| EdgeList::new(g, m.edges())).collect(),
                        red_walk: w.red_walk,
                    }),
                    Prepared::Escape(_) => None,
                };
                let rounds: Vec<RoundCert> = cert
                    .rounds
                    .iter()
                    .map(|r| RoundCert {
                        walk: r.walk,
                        walk_vertices: r.walks[r.walk].vertices().to_vec(),
                        matching: EdgeList::new(g, r.matching.edges()),
                        alpha: EdgeList::new(g, &r.alpha),
                        joins: [EdgeList::new(g, &r.joins[0]), EdgeList::new(g, &r.joins[1])],
                        steps: r
                            .steps
                            .iter()
                            .map(|s| StepSummary {
                                j: s.j,
                                partner: s.partner,
                                reroute: format!("{:?}", s.reroute_branch()),
                                splice: format!("{:?}", s.well_branch()),
                                crossed: s.well.crossed,
                            })
                            .collect(),
                    })
                    .collect();
                let mut notes = vec![JOIN_NOTE.to_string()];
                if rounds.iter().any(|r| !r.steps.is_empty()) {
                    notes.push(SPLICE_NOTE.to_string());
                }
                TraceableCert::Certified {
                    path: order,
                    m_alpha: EdgeList::new(g, cert.m_alpha.edges()),
                    h: cert.h,
                    rounds,
                    special,
                    notes,
                }
            }
        };
        Ok(Check::Pass { cert })
    })())
}
