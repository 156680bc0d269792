//! Acceptance suite. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line whatever happens to the
//! others. Exits non-zero if any criterion fails or overruns its budget.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use matchcert::caps::Caps;
use matchcert::coloring::{chromatic_index, pm_without_odd_cut, three_edge_coloring};
use matchcert::connectivity::cyclic_edge_connectivity;
use matchcert::cuts::{join_avoiding, ms_witness, odd_cut_inside};
use matchcert::fractional::{theorem3_check, theorem45_check};
use matchcert::generators::{flower_snark, petersen, prism};
use matchcert::graph6::parse_graph6;
use matchcert::hamilton::{find_hamiltonian_path, DEFAULT_NODE_BUDGET};
use matchcert::matchings::{enumerate_perfect_matchings, is_balanced, oddness, DEFAULT_MATCHING_CAP};
use matchcert::traceable::{
    prepare, special_cases, theorem6_from_path, theorem6_pipeline, well_intersects, Prepared,
    RerouteBranch, SpecialRoute, Theorem6Outcome, WellBranch,
};
use matchcert::{CubicGraph, EdgeSet, Walk};
use matchcert_cli::catalog::{builtin, CatalogEntry};
use matchcert_cli::checks::CheckKind;
use matchcert_cli::evaluate;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, u64, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn catalog() -> Vec<CatalogEntry> {
    builtin(0).expect("built-in catalog generates")
}

// Oracles by direct counting, independent of the library's search code.

fn degrees(g: &CubicGraph, s: &EdgeSet) -> Vec<usize> {
    let mut d = vec![0; g.n()];
    for e in s.iter() {
        let (u, v) = g.endpoints(e);
        d[u] += 1;
        d[v] += 1;
    }
    d
}

fn is_perfect_matching(g: &CubicGraph, s: &EdgeSet) -> bool {
    degrees(g, s).iter().all(|&d| d == 1)
}

fn is_join(g: &CubicGraph, s: &EdgeSet) -> bool {
    degrees(g, s).iter().all(|&d| d % 2 == 1)
}

/// Some odd vertex set has its whole boundary inside `s` exactly when
/// `G - s` has a component of odd order.
fn has_odd_cut_inside(g: &CubicGraph, s: &EdgeSet) -> bool {
    let mut label: Vec<usize> = (0..g.n()).collect();
    let mut changed = true;
    while changed {
        changed = false;
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            if !s.contains(e) && label[u] != label[v] {
                let m = label[u].min(label[v]);
                label[u] = m;
                label[v] = m;
                changed = true;
            }
        }
    }
    let mut size = vec![0usize; g.n()];
    for &l in &label {
        size[l] += 1;
    }
    size.iter().any(|&k| k % 2 == 1)
}

/// Every perfect matching, found by trying all edge subsets of size n/2.
fn brute_perfect_matchings(g: &CubicGraph) -> Vec<EdgeSet> {
    let m = g.m();
    (0u64..1 << m)
        .filter(|mask| mask.count_ones() as usize == g.n() / 2)
        .map(|mask| g.edge_set((0..m).filter(|e| mask >> e & 1 == 1)))
        .filter(|s| is_perfect_matching(g, s))
        .collect()
}

fn petersen_baseline() -> Outcome {
    let g = petersen();
    let ms = enumerate_perfect_matchings(&g, DEFAULT_MATCHING_CAP).map_err(|e| e.to_string())?;
    ensure(ms.len() == 6, || format!("{} perfect matchings", ms.len()))?;
    ensure(brute_perfect_matchings(&g).len() == 6, || "brute force disagrees".into())?;
    let mut min = usize::MAX;
    for i in 0..ms.len() {
        for j in i + 1..ms.len() {
            let k = ms[i].intersection(&ms[j]).len();
            ensure(k == 1, || format!("pair ({i}, {j}) meets in {k} edges"))?;
            min = min.min(k);
        }
    }
    ensure(min == g.n() / 10, || format!("min pair intersection {min}"))?;
    let chi = chromatic_index(&g, Caps::default().nodes).map_err(|e| e.to_string())?;
    ensure(chi == 4, || format!("chromatic index {chi}"))?;
    let odd = oddness(&g, DEFAULT_MATCHING_CAP).map_err(|e| e.to_string())?;
    ensure(odd == 2, || format!("oddness {odd}"))?;
    let k = cyclic_edge_connectivity(&g, Caps::default().cycles).map_err(|e| e.to_string())?.value();
    ensure(k == Some(5), || format!("cyclic connectivity {k:?}"))?;
    Ok("6 matchings, all pairs meet in 1 edge = n/10, chromatic index 4, oddness 2, cyclic connectivity 5".into())
}

fn colouring_equivalence() -> Outcome {
    let caps = Caps::default();
    let entries = catalog();
    let mut colourable = 0;
    for e in &entries {
        let g = &e.graph;
        let c = three_edge_coloring(g, caps.nodes).map_err(|x| format!("{}: {x}", e.id))?;
        let m = pm_without_odd_cut(g, caps.matchings).map_err(|x| format!("{}: {x}", e.id))?;
        ensure(c.is_some() == m.is_some(), || format!("{}: colourable {} but matching {}", e.id, c.is_some(), m.is_some()))?;
        if let Some(c) = &c {
            ensure(c.is_proper(g), || format!("{}: colouring not proper", e.id))?;
            colourable += 1;
        }
        if let Some(m) = &m {
            ensure(!has_odd_cut_inside(g, m.edges()), || format!("{}: matching has an odd cut", e.id))?;
        }
    }
    Ok(format!("{} graphs, {colourable} colourable, zero exceptions", entries.len()))
}

fn small_intersection() -> Outcome {
    let caps = Caps::default();
    let entries = catalog();
    for e in &entries {
        let g = &e.graph;
        let r = theorem3_check(g, &caps).map_err(|x| format!("{}: {x}", e.id))?;
        let inter = r.m.intersection(&r.m_prime);
        ensure(r.m != r.m_prime && inter == r.intersection, || format!("{}: bad pair", e.id))?;
        ensure(inter.len() <= g.n() / 10, || format!("{}: |M ∩ M'| = {}", e.id, inter.len()))?;
        ensure(!has_odd_cut_inside(g, &inter), || format!("{}: odd cut inside", e.id))?;
        let rec = evaluate(e, &[CheckKind::Thm3], &caps, false);
        ensure(rec.verification_errors.is_empty(), || format!("{}: {:?}", e.id, rec.verification_errors))?;
    }
    Ok(format!("{} graphs, every pair within n/10 and free of odd cuts", entries.len()))
}

fn petersen_cut_alternative() -> Outcome {
    let g = petersen();
    let r = theorem45_check(&g, &Caps::default()).map_err(|e| e.to_string())?;
    ensure(r.k == Some(5) && r.s == Some(7), || format!("k = {:?}, s = {:?}", r.k, r.s))?;
    let bound = r.pair_bound.ok_or("no pair bound")?;
    ensure(bound.to_string() == "5/7", || format!("pair bound {bound}"))?;
    let ms = enumerate_perfect_matchings(&g, DEFAULT_MATCHING_CAP).map_err(|e| e.to_string())?;
    // |M ∩ M'| <= 10/14 compared exactly: size * denom <= numer
    for i in 0..ms.len() {
        for j in i + 1..ms.len() {
            let k = ms[i].intersection(&ms[j]).len() as i64;
            ensure(k * bound.denom() > *bound.numer(), || format!("pair ({i}, {j}) within the bound"))?;
        }
    }
    ensure(!r.pair_alternative, || "pair alternative claimed".into())?;
    ensure(r.cut_alternative && r.cut_witnesses.len() == 6, || "cut alternative missing".into())?;
    for (m, c) in ms.iter().zip(&r.cut_witnesses) {
        ensure(c.cut.len() == 5 && c.side.is_odd(), || "witness is not an odd 5-cut".into())?;
        ensure(matchcert::boundary(&g, &c.side) == c.cut && c.cut.is_subset(m.edges()), || {
            "witness cut is not inside its matching".into()
        })?;
    }
    Ok("k = 5, s = 7, all 6 matchings contain an odd 5-cut, no pair within 10/14".into())
}

fn two_matchings_below_threshold() -> Outcome {
    let caps = Caps::default();
    let mut applied = 0;
    for e in catalog() {
        let g = &e.graph;
        let Some(k) = cyclic_edge_connectivity(g, caps.cycles).map_err(|x| x.to_string())?.value() else {
            continue;
        };
        let t = 2 * (2 * (k / 2) + 3) * (2 * (k / 2) + 1);
        if k < 4 || g.n() >= t {
            continue;
        }
        let w = ms_witness(g, caps.matchings).map_err(|x| x.to_string())?.ok_or_else(|| format!("{}: no witness", e.id))?;
        ensure(is_perfect_matching(g, w.m1.edges()) && is_perfect_matching(g, w.m2.edges()), || {
            format!("{}: not perfect", e.id)
        })?;
        ensure(!has_odd_cut_inside(g, &w.m1.intersection(&w.m2)), || format!("{}: odd cut", e.id))?;
        applied += 1;
    }
    ensure(applied > 0, || "no catalog graph qualifies".into())?;
    Ok(format!("{applied} graphs with k >= 4 below the order threshold, all with a witness"))
}

fn balanced_oracle() -> Outcome {
    let mut graphs = 0;
    let mut checked = 0u64;
    for e in catalog().into_iter().filter(|e| e.graph.n() <= 10) {
        let g = &e.graph;
        let all = brute_perfect_matchings(g);
        for m in enumerate_perfect_matchings(g, DEFAULT_MATCHING_CAP).map_err(|x| x.to_string())? {
            let ids = m.edges().to_vec();
            let realized: BTreeSet<Vec<usize>> = all.iter().map(|o| o.intersection(m.edges()).to_vec()).collect();
            for mask in 0u32..1 << ids.len() {
                let a = g.edge_set(ids.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x));
                let claim = is_balanced(g, &m, &a).map_err(|x| x.to_string())?;
                ensure(claim == realized.contains(&a.to_vec()), || {
                    format!("{}: disagreement on {:?}", e.id, a.to_vec())
                })?;
                checked += 1;
            }
        }
        graphs += 1;
    }
    Ok(format!("{graphs} graphs, {checked} (M, A) pairs, zero disagreements"))
}

fn cut_join_duality() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut with_cut, mut with_join) = (0, 0);
    let mut graphs = 0;
    for e in catalog().into_iter().filter(|e| e.graph.n() <= 14) {
        let g = &e.graph;
        for _ in 0..50 {
            let p: f64 = rng.gen_range(0.1..0.9);
            let s = g.edge_set((0..g.m()).filter(|_| rng.gen_bool(p)));
            let cut = odd_cut_inside(g, &s);
            let join = join_avoiding(g, &s);
            ensure(cut.is_none() == join.is_some(), || format!("{}: duality fails on {:?}", e.id, s.to_vec()))?;
            ensure(cut.is_some() == has_odd_cut_inside(g, &s), || format!("{}: cut oracle disagrees", e.id))?;
            match (cut, join) {
                (Some(c), _) => {
                    ensure(c.side.is_odd() && matchcert::boundary(g, &c.side) == c.cut && c.cut.is_subset(&s), || {
                        format!("{}: bad cut certificate", e.id)
                    })?;
                    with_cut += 1;
                }
                (None, Some(j)) => {
                    ensure(is_join(g, &j) && j.is_disjoint(&s), || format!("{}: bad join", e.id))?;
                    with_join += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        graphs += 1;
    }
    ensure(with_cut > 0 && with_join > 0, || "only one side of the duality was exercised".into())?;
    Ok(format!("{graphs} graphs x 50 sets: {with_cut} with an odd cut, {with_join} with an avoiding join"))
}

fn traceable_end_to_end() -> Outcome {
    let caps = Caps::default();
    for (name, g) in [("petersen", petersen()), ("flower_snark(5)", flower_snark(5).unwrap())] {
        let cert = match theorem6_pipeline(&g).map_err(|e| format!("{name}: {e}"))? {
            Theorem6Outcome::Certified(c) => c,
            Theorem6Outcome::Escape(_) => return Err(format!("{name} escaped")),
        };
        ensure(is_perfect_matching(&g, cert.m_alpha.edges()), || format!("{name}: M_alpha"))?;
        ensure(cert.rounds.len() == 3, || format!("{name}: {} rounds", cert.rounds.len()))?;
        for r in &cert.rounds {
            let inter = cert.m_alpha.intersection(&r.matching);
            ensure(is_perfect_matching(&g, r.matching.edges()), || format!("{name}: M_{}", r.walk))?;
            ensure(!has_odd_cut_inside(&g, &inter), || format!("{name}: odd cut in round {}", r.walk))?;
            for j in &r.joins {
                ensure(is_join(&g, j), || format!("{name}: join of round {} fails parity", r.walk))?;
                ensure(inter.is_disjoint(j), || format!("{name}: M_alpha ∩ M_{} ∩ J not empty", r.walk))?;
            }
        }
        let entry = CatalogEntry {
            id: name.into(),
            source: name.into(),
            graph: g.clone(),
        };
        let rec = evaluate(&entry, &[CheckKind::Traceable], &caps, false);
        ensure(rec.verification_errors.is_empty(), || format!("{name}: {:?}", rec.verification_errors))?;
    }
    let p = prism(3).unwrap();
    match theorem6_pipeline(&p).map_err(|e| e.to_string())? {
        Theorem6Outcome::Escape(c) => ensure(c.is_proper(&p), || "prism colouring not proper".into())?,
        Theorem6Outcome::Certified(_) => return Err("prism did not escape".into()),
    }
    Ok("Petersen and J5 certified and re-verified, prism escapes with a proper colouring".into())
}

fn petersen_two_cycles() -> Outcome {
    let g = petersen();
    let path = find_hamiltonian_path(&g, DEFAULT_NODE_BUDGET).map_err(|e| e.to_string())?.ok_or("no path")?;
    let Prepared::Ready(st) = prepare(&g, &path).map_err(|e| e.to_string())? else {
        return Err("Petersen escaped".into());
    };
    ensure(st.sequence.h() == 2, || format!("h = {}", st.sequence.h()))?;
    let w = special_cases(&g, &st).map_err(|e| e.to_string())?.ok_or("no special witness")?;
    ensure(w.route == SpecialRoute::TwoCycles && w.matchings.len() == 3, || format!("{:?}", w.route))?;
    let ma = st.colouring.m_alpha();
    for a in 0..3 {
        ensure(is_perfect_matching(&g, w.matchings[a].edges()), || format!("M_{a} not perfect"))?;
        for b in a + 1..3 {
            let triple = ma.intersection(&w.matchings[a]).intersection(w.matchings[b].edges());
            ensure(triple.is_empty(), || format!("M_alpha ∩ M_{a} ∩ M_{b} = {:?}", triple.to_vec()))?;
        }
    }
    Ok("h = 2, M_alpha ∩ M_i ∩ M_j empty for all three pairs".into())
}

fn branch_coverage() -> Outcome {
    let text = include_str!("../../core/tests/fixtures/traceable.txt");
    let mut reroutes = BTreeSet::new();
    let mut splices = BTreeSet::new();
    let mut steps = 0;
    for line in text.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()) {
        let cols: Vec<&str> = line.split('\t').collect();
        let g = parse_graph6(cols[1]).map_err(|e| e.to_string())?;
        let order: Vec<usize> = if cols[2] == "identity" {
            (0..g.n()).collect()
        } else {
            cols[2].split(',').map(|x| x.parse().unwrap()).collect()
        };
        let path = Walk::from_vertices(&g, &order).map_err(|e| e.to_string())?;
        let Prepared::Ready(st) = prepare(&g, &path).map_err(|e| e.to_string())? else {
            return Err(format!("{} escaped", cols[0]));
        };
        let cert = match theorem6_from_path(&g, &path).map_err(|e| format!("{}: {e}", cols[0]))? {
            Theorem6Outcome::Certified(c) => c,
            Theorem6Outcome::Escape(_) => return Err(format!("{} escaped", cols[0])),
        };
        ensure(cert.verify(&g), || format!("{}: certificate", cols[0]))?;
        let pc = &st.colouring;
        for s in cert.rounds.iter().flat_map(|r| &r.steps) {
            let rr = &s.reroute;
            let cyc = st.decomposition.cycle(st.sequence.get(s.j));
            let top = st.sequence.max(s.j);
            let ends: BTreeSet<usize> = [pc.vertex_at(top), pc.vertex_at(top + 1)].into();
            // prefixes kept, one end of the max edge on each walk
            ensure(rr.r.prefix_to(rr.x_j) == s.q.prefix_to(rr.x_j), || "prefix of R changed".into())?;
            ensure(rr.r_prime.prefix_to(rr.x_prime_j) == s.q_prime.prefix_to(rr.x_prime_j), || {
                "prefix of R' changed".into()
            })?;
            ensure(ends == [rr.y_j, rr.y_prime_j].into(), || "y ends are not the max edge".into())?;
            // suffixes after y come from the inputs, swapped or not
            let tail = |w: &Walk, at: usize| w.slice(at, w.len());
            let ends_with = |w: &Walk, t: &Walk| w.len() >= t.len() && tail(w, w.len() - t.len()) == *t;
            let (rs, rps) = (tail(&rr.r, rr.y_at.0), tail(&rr.r_prime, rr.y_at.1));
            ensure(
                (ends_with(&s.q, &rs) && ends_with(&s.q_prime, &rps)) || (ends_with(&s.q_prime, &rs) && ends_with(&s.q, &rps)),
                || "suffixes do not come from Q, Q'".into(),
            )?;
            // the middles stay in the cycle, R's is a gamma-chain
            let xi = rr.r.position(rr.x_j).unwrap();
            let mid = rr.r.slice(xi, rr.y_at.0);
            ensure(mid.vertices().iter().all(|&v| cyc.contains(v)) && mid.len() % 2 == 1, || "middle of R".into())?;
            // the spliced walk well-intersects the cycle
            let joined = rr.r.prefix_to(rr.x_j).unwrap().concat(&s.well.s).map_err(|e| e.to_string())?;
            ensure(well_intersects(&g, pc, &joined, cyc), || "S does not well-intersect".into())?;
            reroutes.insert(format!("{:?}", s.reroute_branch()));
            splices.insert(format!("{:?}", s.well_branch()));
            steps += 1;
        }
    }
    let want_reroute = [RerouteBranch::NoSwap, RerouteBranch::Swap, RerouteBranch::Rebuilt, RerouteBranch::NoSwapPartnerRebuilt];
    for b in want_reroute {
        ensure(reroutes.contains(&format!("{b:?}")), || format!("rerouting branch {b:?} never taken"))?;
    }
    for b in [WellBranch::Disjoint, WellBranch::TowardsEnd, WellBranch::AwayFromEnd] {
        ensure(splices.contains(&format!("{b:?}")), || format!("splicing branch {b:?} never taken"))?;
    }
    Ok(format!("{steps} steps; rerouting {reroutes:?}; splicing {splices:?}"))
}

fn sweep_determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_matchcert");
    let dir = std::env::temp_dir();
    let tag = std::process::id();
    let mut outputs = Vec::new();
    for jobs in [1, 4] {
        let out = dir.join(format!("matchcert-acceptance-{tag}-{jobs}.jsonl"));
        let status = Command::new(bin)
            .args(["sweep", "--builtin", "--jobs", &jobs.to_string(), "--out"])
            .arg(&out)
            .status()
            .map_err(|e| e.to_string())?;
        ensure(status.code() == Some(0), || format!("sweep --jobs {jobs} exited with {status}"))?;
        outputs.push(std::fs::read(&out).map_err(|e| e.to_string())?);
        let _ = std::fs::remove_file(&out);
    }
    ensure(!outputs[0].is_empty() && outputs[0] == outputs[1], || "reports differ".into())?;
    let lines = outputs[0].iter().filter(|&&b| b == b'\n').count();
    Ok(format!("--jobs 1 and --jobs 4 reports byte-identical ({lines} records)"))
}

fn main() {
    let criteria: [Criterion; 11] = [
        (1, "Petersen baseline", 5, petersen_baseline),
        (2, "colourability vs odd-cut-free matching", 120, colouring_equivalence),
        (3, "small pair intersection", 120, small_intersection),
        (4, "Petersen cut alternative", 1, petersen_cut_alternative),
        (5, "two matchings below the order threshold", 120, two_matchings_below_threshold),
        (6, "balanced matching oracle", 300, balanced_oracle),
        (7, "odd cut / join duality", 120, cut_join_duality),
        (8, "traceable construction end to end", 30, traceable_end_to_end),
        (9, "two-cycle sequence on Petersen", 5, petersen_two_cycles),
        (10, "rerouting branch coverage", 60, branch_coverage),
        (11, "sweep determinism", 120, sweep_determinism),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (n, name, limit, f) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(_) if took > Duration::from_secs(limit) => Err(format!("took {took:.2?}, limit {limit} s")),
            o => o,
        };
        match outcome {
            Ok(detail) => println!("criterion {n:>2} PASS {name} ({took:.2?}): {detail}"),
            Err(why) => {
                failed += 1;
                println!("criterion {n:>2} FAIL {name} ({took:.2?}): {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 11 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
