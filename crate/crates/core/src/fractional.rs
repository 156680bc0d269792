//! Fractional perfect matchings with exact rational weights, selection of a
//! perfect matching beating a weight vector, and the small-order bound
//! checkers built on them.

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::caps::Caps;
use crate::connectivity::{cyclic_edge_connectivity, CyclicConnectivity};
use crate::cuts::{ms_witness, odd_cut_inside, CutCertificate, MsWitness};
use crate::error::{invariant, Error, Result};
use crate::graph::{boundary, components_after_removal, is_bridgeless, CubicGraph, GraphId};
use crate::matchings::{enumerate_perfect_matchings, Matching};
use crate::sets::{EdgeSet, VertexSet};

pub const DEFAULT_ODDSET_CAP: usize = 16;

/// One exact weight per edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionalWeights {
    w: Vec<Rational64>,
    host: GraphId,
}

impl FractionalWeights {
    pub fn new(g: &CubicGraph, w: Vec<Rational64>) -> Result<Self> {
        if w.len() != g.m() {
            return Err(Error::InvalidInput(format!(
                "{} weights for {} edges",
                w.len(),
                g.m()
            )));
        }
        Ok(FractionalWeights { w, host: g.id() })
    }

    pub fn uniform(g: &CubicGraph, x: Rational64) -> Self {
        FractionalWeights {
            w: vec![x; g.m()],
            host: g.id(),
        }
    }

    /// `on` for edges of `m`, `off` elsewhere.
    pub fn two_valued(g: &CubicGraph, m: &Matching, on: Rational64, off: Rational64) -> Self {
        FractionalWeights {
            w: (0..g.m()).map(|e| if m.contains(e) { on } else { off }).collect(),
            host: g.id(),
        }
    }

    pub fn get(&self, e: usize) -> Rational64 {
        self.w[e]
    }

    pub fn values(&self) -> &[Rational64] {
        &self.w
    }

    /// `w(A)`.
    pub fn weight(&self, a: &EdgeSet) -> Rational64 {
        a.iter().map(|e| self.w[e]).sum()
    }

    fn check_host(&self, g: &CubicGraph) -> Result<()> {
        if self.host != g.id() {
            return Err(Error::InvalidInput("weights belong to another graph".into()));
        }
        Ok(())
    }

    fn bounds_and_vertex_sums(&self, g: &CubicGraph) -> bool {
        let zero = Rational64::zero();
        let one = Rational64::one();
        self.w.iter().all(|&x| x >= zero && x <= one)
            && (0..g.n()).all(|v| g.incident(v).iter().map(|&e| self.w[e]).sum::<Rational64>() == one)
    }
}

/// A linear objective over edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObjectiveVector {
    c: Vec<Rational64>,
}

impl ObjectiveVector {
    pub fn new(c: Vec<Rational64>) -> Self {
        ObjectiveVector { c }
    }

    pub fn ones(g: &CubicGraph) -> Self {
        ObjectiveVector {
            c: vec![Rational64::one(); g.m()],
        }
    }

    /// `1 - χ^M`: counts edges outside `m`.
    pub fn outside(g: &CubicGraph, m: &Matching) -> Self {
        ObjectiveVector {
            c: (0..g.m())
                .map(|e| if m.contains(e) { Rational64::zero() } else { Rational64::one() })
                .collect(),
        }
    }

    pub fn dot_set(&self, a: &EdgeSet) -> Rational64 {
        a.iter().map(|e| self.c[e]).sum()
    }

    pub fn dot_weights(&self, w: &FractionalWeights) -> Rational64 {
        self.c.iter().zip(w.values()).map(|(a, b)| a * b).sum()
    }
}

/// Vertex sets as bit masks, for exhaustive odd-set enumeration.
struct MaskGraph {
    n: usize,
    adj: Vec<u64>,
    edges: Vec<(usize, usize)>,
}

impl MaskGraph {
    fn new(g: &CubicGraph) -> Self {
        MaskGraph {
            n: g.n(),
            adj: (0..g.n())
                .map(|v| g.neighbors(v).iter().fold(0u64, |acc, &w| acc | 1 << w))
                .collect(),
            edges: g.edges().to_vec(),
        }
    }

    fn connected(&self, mask: u64) -> bool {
        if mask == 0 {
            return false;
        }
        let mut seen = mask & mask.wrapping_neg();
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = self.adj[v] & mask & !seen;
            seen |= new;
            frontier |= new;
        }
        seen == mask
    }

    fn crossing(&self, mask: u64) -> impl Iterator<Item = usize> + '_ {
        self.edges
            .iter()
            .enumerate()
            .filter(move |(_, &(u, v))| (mask >> u & 1) != (mask >> v & 1))
            .map(|(e, _)| e)
    }

    /// Odd sets `X` not containing vertex 0 (each bipartition once), with
    /// both `X` and its complement connected when `bonds_only`.
    fn odd_sets(&self, bonds_only: bool) -> impl Iterator<Item = u64> + '_ {
        let full = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        (0u64..1 << (self.n - 1))
            .map(|k| k << 1)
            .filter(|x| x.count_ones() % 2 == 1)
            .filter(move |&x| !bonds_only || (self.connected(x) && self.connected(full & !x)))
    }
}

fn mask_to_set(g: &CubicGraph, mask: u64) -> VertexSet {
    g.vertex_set((0..g.n()).filter(|v| mask >> v & 1 == 1))
}

fn check_oddset_cap(g: &CubicGraph, cap: usize) -> Result<()> {
    if g.n() > cap || g.n() > 62 {
        return Err(Error::TooLarge {
            n: g.n(),
            cap: cap.min(62),
        });
    }
    Ok(())
}

/// Bounds, unit vertex sums, and `w(δX) >= 1` for every odd `X`. Only odd
/// sets with both sides connected are enumerated: any odd cut splits into
/// boundaries of such sets, one of which is odd and no heavier.
pub fn is_fractional_pm(g: &CubicGraph, w: &FractionalWeights, oddset_cap: usize) -> Result<bool> {
    w.check_host(g)?;
    if !w.bounds_and_vertex_sums(g) {
        return Ok(false);
    }
    check_oddset_cap(g, oddset_cap)?;
    let mg = MaskGraph::new(g);
    let one = Rational64::one();
    let ok = mg
        .odd_sets(true)
        .all(|x| mg.crossing(x).map(|e| w.get(e)).sum::<Rational64>() >= one);
    Ok(ok)
}

/// Structural evidence for weights that are constant on a perfect matching
/// and constant off it, used when odd sets are too many to enumerate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniformCertificate {
    pub matching: Matching,
    /// Cyclic edge connectivity of the host, as computed by the caller.
    pub cyclic_connectivity: usize,
}

/// Like [`is_fractional_pm`] for two-valued weights `a` on `M`, `b` off
/// `M`. A non-trivial odd cut either has a tree on one side (size `t + 2`
/// for `t >= 3` odd vertices, so at least 5) or cycles on both sides (at
/// least `k`, hence at least `2⌊k/2⌋ + 1`). Each feasible (size, edges in
/// `M`) pattern is checked arithmetically; cuts lying entirely inside `M`
/// are searched for directly. Returns an error when the certificate cannot
/// settle a pattern.
pub fn is_fractional_pm_certified(
    g: &CubicGraph,
    w: &FractionalWeights,
    cert: &UniformCertificate,
) -> Result<bool> {
    w.check_host(g)?;
    let m = &cert.matching;
    if m.host() != g.id() || !g.is_perfect_matching(m.edges()) {
        return Err(Error::NotPerfect);
    }
    let Some(a) = m.edges().first().map(|e| w.get(e)) else {
        return Err(Error::NotPerfect);
    };
    let Some(b) = m.edges().complement().first().map(|e| w.get(e)) else {
        return Err(Error::NotPerfect);
    };
    let two_valued = (0..g.m()).all(|e| w.get(e) == if m.contains(e) { a } else { b });
    if !two_valued {
        return Err(Error::InvalidInput("weights are not constant on and off the matching".into()));
    }
    if !w.bounds_and_vertex_sums(g) {
        return Ok(false);
    }
    let k = cert.cyclic_connectivity;
    if k < 3 {
        return Err(Error::InvalidInput("certificate needs cyclic connectivity >= 3".into()));
    }
    let lower = (2 * (k / 2) + 1).min(5);
    let one = Rational64::one();
    let floor = a.min(b);
    if floor.is_zero() && b.is_zero() {
        return Err(Error::InvalidInput("weights vanish off the matching".into()));
    }
    let half = g.n() / 2;
    let mut size = lower;
    while size <= g.m() {
        let cap_reached = !floor.is_zero() && floor * Rational64::from_integer(size as i64) >= one;
        if cap_reached {
            break;
        }
        for inside in (1..=size.min(half)).step_by(2) {
            let total = a * Rational64::from_integer(inside as i64)
                + b * Rational64::from_integer((size - inside) as i64);
            if total >= one {
                continue;
            }
            if inside < size {
                return Err(Error::InvalidInput(format!(
                    "certificate cannot exclude odd cuts of size {size} with {inside} matching edges"
                )));
            }
            if odd_bond_inside(g, m.edges(), size)?.is_some() {
                return Ok(false);
            }
        }
        size += 2;
    }
    Ok(true)
}

/// If `c` is a bond (removal leaves exactly two components, every edge of
/// `c` between them), the side containing the smallest vertex.
pub fn bond_side(g: &CubicGraph, c: &EdgeSet) -> Option<VertexSet> {
    let comps = components_after_removal(g, c);
    if comps.len() != 2 {
        return None;
    }
    let side = comps.into_iter().next().unwrap().vertices;
    (boundary(g, &side) == *c).then_some(side)
}

const COMBINATION_CAP: u64 = 50_000_000;

/// First `size`-subset of `m` (in lexicographic order) that is an odd bond.
pub fn odd_bond_inside(g: &CubicGraph, m: &EdgeSet, size: usize) -> Result<Option<CutCertificate>> {
    let edges = m.to_vec();
    if size == 0 || size > edges.len() {
        return Ok(None);
    }
    if odd_cut_inside(g, m).is_none() {
        return Ok(None);
    }
    let mut idx: Vec<usize> = (0..size).collect();
    let mut count = 0u64;
    loop {
        count += 1;
        if count > COMBINATION_CAP {
            return Err(Error::ResourceCap {
                what: "edge subsets searched for odd cuts",
                limit: COMBINATION_CAP,
            });
        }
        let c = g.edge_set(idx.iter().map(|&i| edges[i]));
        if let Some(side) = bond_side(g, &c) {
            if side.is_odd() {
                return Ok(Some(CutCertificate {
                    side,
                    cut: c,
                    minimal: true,
                }));
            }
        }
        // next combination
        let mut i = size;
        loop {
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
            if idx[i] != i + edges.len() - size {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Odd bonds `δX` with `w(δX) = 1`.
pub fn tight_odd_cuts(g: &CubicGraph, w: &FractionalWeights, oddset_cap: usize) -> Result<Vec<EdgeSet>> {
    w.check_host(g)?;
    check_oddset_cap(g, oddset_cap)?;
    let mg = MaskGraph::new(g);
    let one = Rational64::one();
    let tight = mg
        .odd_sets(true)
        .filter(|&x| mg.crossing(x).map(|e| w.get(e)).sum::<Rational64>() == one)
        .map(|x| boundary(g, &mask_to_set(g, x)))
        .collect();
    Ok(tight)
}

/// A perfect matching maximizing `c·χ^M` among those meeting every tight
/// odd cut of `w` in exactly one edge; ties go to the lexicographically
/// smallest. Such a matching always satisfies `c·χ^M >= c·w` because `w` is
/// a convex combination of perfect matchings, each meeting every tight odd
/// cut exactly once.
pub fn polytope_select(
    g: &CubicGraph,
    w: &FractionalWeights,
    c: &ObjectiveVector,
    caps: &Caps,
) -> Result<Matching> {
    if !is_fractional_pm(g, w, caps.oddsets)? {
        return Err(Error::InvalidInput("weights are not a fractional perfect matching".into()));
    }
    let tight = tight_odd_cuts(g, w, caps.oddsets)?;
    let mut best: Option<(Rational64, Matching)> = None;
    for m in enumerate_perfect_matchings(g, caps.matchings)? {
        if !tight.iter().all(|t| t.intersection_len(m.edges()) == 1) {
            continue;
        }
        let value = c.dot_set(m.edges());
        if best.as_ref().is_none_or(|(v, _)| value > *v) {
            best = Some((value, m));
        }
    }
    let (value, m) = best.ok_or(Error::NoFeasibleMatching)?;
    let target = c.dot_weights(w);
    invariant(value >= target, || {
        format!("selected matching scores {value}, below the weight vector's {target}")
    })?;
    Ok(m)
}

/// Inclusion-minimal 3-edge cuts, trivial ones included.
pub fn three_edge_cuts(g: &CubicGraph) -> Vec<EdgeSet> {
    let m = g.m();
    let mut out = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                let s = g.edge_set([a, b, c]);
                if bond_side(g, &s).is_some() {
                    out.push(s);
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem3Report {
    pub m: Matching,
    pub m_prime: Matching,
    pub intersection: EdgeSet,
    pub three_cuts: usize,
    /// `⌊n/10⌋`.
    pub bound: usize,
}

/// Among perfect matchings meeting every 3-edge cut in one edge, and any
/// other perfect matching, the pair with smallest intersection
/// (ties by enumeration order). Fails with `BoundViolated` if that
/// intersection exceeds `⌊n/10⌋` or contains an odd cut.
pub fn theorem3_check(g: &CubicGraph, caps: &Caps) -> Result<Theorem3Report> {
    if g.n() >= 50 {
        return Err(Error::InvalidInput(format!("order {} is not below 50", g.n())));
    }
    if !is_bridgeless(g) {
        return Err(Error::InvalidInput("graph has a bridge".into()));
    }
    let cuts = three_edge_cuts(g);
    let ms = enumerate_perfect_matchings(g, caps.matchings)?;
    let mut best: Option<(usize, usize, usize)> = None;
    for (i, m) in ms.iter().enumerate() {
        if !cuts.iter().all(|c| c.intersection_len(m.edges()) == 1) {
            continue;
        }
        for (j, o) in ms.iter().enumerate() {
            if i == j {
                continue;
            }
            let k = m.edges().intersection_len(o.edges());
            if best.is_none_or(|(b, _, _)| k < b) {
                best = Some((k, i, j));
            }
        }
    }
    let (size, i, j) = best.ok_or_else(|| {
        Error::BoundViolated("no pair with a matching meeting every 3-cut once".into())
    })?;
    let bound = g.n() / 10;
    let intersection = ms[i].intersection(&ms[j]);
    if size > bound {
        return Err(Error::BoundViolated(format!(
            "smallest intersection has {size} edges, above n/10 = {bound}"
        )));
    }
    if let Some(c) = odd_cut_inside(g, &intersection) {
        return Err(Error::BoundViolated(format!(
            "intersection contains the odd cut {:?}",
            c.cut
        )));
    }
    Ok(Theorem3Report {
        m: ms[i].clone(),
        m_prime: ms[j].clone(),
        intersection,
        three_cuts: cuts.len(),
        bound,
    })
}

/// Outcome of re-running the weight-vector argument for the pair bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LemmaRoute {
    NotRun(String),
    Checked {
        /// Matchings without an odd cut of the threshold size.
        considered: usize,
        /// Of those, how many gave weights violating an odd-set constraint.
        not_fractional: usize,
        /// Of the fractional ones, how many selections met `n/(2s)`.
        within_bound: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub n: usize,
    pub k: Option<usize>,
    /// `2⌊k/2⌋ + 3`, when `k >= 3`.
    pub s: Option<usize>,
    /// `n/(2s)`.
    pub pair_bound: Option<Rational64>,
    /// `n/(2(s-2))`.
    pub single_bound: Option<Rational64>,
    pub min_pair_intersection: Option<usize>,
    pub min_pair: Option<(Matching, Matching)>,
    /// Some pair meets in at most `n/(2s)` edges.
    pub pair_alternative: bool,
    /// Every perfect matching contains an odd cut of size `s - 2`.
    pub cut_alternative: bool,
    /// One such cut per matching, when `cut_alternative` holds.
    pub cut_witnesses: Vec<CutCertificate>,
    /// `2s(s-2)`.
    pub order_threshold: Option<usize>,
    /// `k >= 4` and `n` below the threshold.
    pub two_matching_claim_applies: bool,
    pub ms_witness: Option<MsWitness>,
    pub lemma_route: LemmaRoute,
}

impl BoundReport {
    pub fn applicable(&self) -> bool {
        self.s.is_some()
    }

    /// The pair-or-cut dichotomy holds and, where it applies, the two-matching
    /// witness was found.
    pub fn holds(&self) -> bool {
        !self.applicable()
            || ((self.pair_alternative || self.cut_alternative)
                && (!self.two_matching_claim_applies || self.ms_witness.is_some()))
    }
}

pub fn theorem45_check(g: &CubicGraph, caps: &Caps) -> Result<BoundReport> {
    let n = g.n();
    let k = match cyclic_edge_connectivity(g, caps.cycles)? {
        CyclicConnectivity::Finite { size, .. } => Some(size),
        CyclicConnectivity::Unbounded => None,
    };
    let mut report = BoundReport {
        n,
        k,
        s: None,
        pair_bound: None,
        single_bound: None,
        min_pair_intersection: None,
        min_pair: None,
        pair_alternative: false,
        cut_alternative: false,
        cut_witnesses: Vec::new(),
        order_threshold: None,
        two_matching_claim_applies: false,
        ms_witness: None,
        lemma_route: LemmaRoute::NotRun("cyclic connectivity below 3 or unbounded".into()),
    };
    let Some(k) = k.filter(|&k| k >= 3) else {
        return Ok(report);
    };
    let s = 2 * (k / 2) + 3;
    let ratio = |num: usize, den: usize| Rational64::new(num as i64, den as i64);
    report.s = Some(s);
    report.pair_bound = Some(ratio(n, 2 * s));
    report.single_bound = Some(ratio(n, 2 * (s - 2)));
    report.order_threshold = Some(2 * s * (s - 2));

    let ms = enumerate_perfect_matchings(g, caps.matchings)?;
    let mut best: Option<(usize, usize, usize)> = None;
    for i in 0..ms.len() {
        for j in i + 1..ms.len() {
            let x = ms[i].edges().intersection_len(ms[j].edges());
            if best.is_none_or(|(b, _, _)| x < b) {
                best = Some((x, i, j));
            }
        }
    }
    if let Some((x, i, j)) = best {
        report.min_pair_intersection = Some(x);
        report.min_pair = Some((ms[i].clone(), ms[j].clone()));
        report.pair_alternative = x * 2 * s <= n;
    }

    let mut witnesses = Vec::new();
    let mut without_cut = Vec::new();
    for m in &ms {
        match odd_bond_inside(g, m.edges(), s - 2)? {
            Some(c) => witnesses.push(c),
            None => without_cut.push(m),
        }
    }
    report.cut_alternative = without_cut.is_empty();
    if report.cut_alternative {
        report.cut_witnesses = witnesses;
    }

    report.two_matching_claim_applies = k >= 4 && n < 2 * s * (s - 2);
    if report.two_matching_claim_applies {
        report.ms_witness = ms_witness(g, caps.matchings)?;
    }

    report.lemma_route = if n > caps.oddsets {
        LemmaRoute::NotRun(format!("order {n} above odd-set cap {}", caps.oddsets))
    } else {
        let on = ratio(1, s);
        let off = ratio(s - 1, 2 * s);
        let mut not_fractional = 0;
        let mut within_bound = 0;
        for m in &without_cut {
            let w = FractionalWeights::two_valued(g, m, on, off);
            if !is_fractional_pm(g, &w, caps.oddsets)? {
                not_fractional += 1;
                continue;
            }
            let c = ObjectiveVector::outside(g, m);
            let mp = polytope_select(g, &w, &c, caps)?;
            if m.edges().intersection_len(mp.edges()) * 2 * s <= n {
                within_bound += 1;
            }
        }
        LemmaRoute::Checked {
            considered: without_cut.len(),
            not_fractional,
            within_bound,
        }
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::matchings::DEFAULT_MATCHING_CAP;

    fn r(a: i64, b: i64) -> Rational64 {
        Rational64::new(a, b)
    }

    /// Every odd set, no connectivity filter.
    fn full_check(g: &CubicGraph, w: &FractionalWeights) -> bool {
        if !w.bounds_and_vertex_sums(g) {
            return false;
        }
        let mg = MaskGraph::new(g);
        (0u64..1 << g.n())
            .filter(|x| x.count_ones() % 2 == 1)
            .all(|x| mg.crossing(x).map(|e| w.get(e)).sum::<Rational64>() >= Rational64::one())
    }

    fn pms(g: &CubicGraph) -> Vec<Matching> {
        enumerate_perfect_matchings(g, DEFAULT_MATCHING_CAP).unwrap()
    }

    #[test]
    fn uniform_third_is_fractional() {
        for g in [generators::petersen(), generators::k4(), generators::prism(5).unwrap()] {
            let w = FractionalWeights::uniform(&g, r(1, 3));
            assert!(is_fractional_pm(&g, &w, DEFAULT_ODDSET_CAP).unwrap());
        }
    }

    #[test]
    fn half_off_matching() {
        let k4 = generators::k4();
        let m = &pms(&k4)[0];
        let w = FractionalWeights::two_valued(&k4, m, r(0, 1), r(1, 2));
        assert!(is_fractional_pm(&k4, &w, DEFAULT_ODDSET_CAP).unwrap());
        let p = generators::petersen();
        let m = &pms(&p)[0];
        let w = FractionalWeights::two_valued(&p, m, r(0, 1), r(1, 2));
        assert!(!is_fractional_pm(&p, &w, DEFAULT_ODDSET_CAP).unwrap());
        let bad = FractionalWeights::uniform(&p, r(1, 2));
        assert!(!is_fractional_pm(&p, &bad, DEFAULT_ODDSET_CAP).unwrap());
        let big = generators::flower_snark(5).unwrap();
        assert!(matches!(
            is_fractional_pm(&big, &FractionalWeights::uniform(&big, r(1, 3)), DEFAULT_ODDSET_CAP),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn connected_reduction_matches_full_enumeration() {
        let mut graphs = vec![generators::petersen(), generators::k33(), generators::prism(4).unwrap()];
        for seed in 0..8 {
            graphs.push(generators::random_bridgeless(10, seed).unwrap());
            graphs.push(generators::random_bridgeless(12, seed).unwrap());
        }
        let patterns = [(r(0, 1), r(1, 2)), (r(1, 5), r(2, 5)), (r(1, 7), r(3, 7)), (r(1, 3), r(1, 3)), (r(3, 5), r(1, 5))];
        for g in &graphs {
            for m in pms(g).iter().take(4) {
                for &(on, off) in &patterns {
                    let w = FractionalWeights::two_valued(g, m, on, off);
                    assert_eq!(is_fractional_pm(g, &w, DEFAULT_ODDSET_CAP).unwrap(), full_check(g, &w));
                }
            }
        }
    }

    #[test]
    fn certificate_route_agrees_with_enumeration() {
        let mut graphs = vec![generators::petersen(), generators::prism(5).unwrap()];
        for seed in 0..6 {
            graphs.push(generators::random_bridgeless(12, seed).unwrap());
        }
        let patterns = [(r(0, 1), r(1, 2)), (r(1, 5), r(2, 5)), (r(1, 7), r(3, 7)), (r(1, 3), r(1, 3))];
        for g in &graphs {
            let Some(k) = cyclic_edge_connectivity(g, 1_000_000).unwrap().value() else { continue };
            if k < 3 {
                continue;
            }
            for m in pms(g) {
                let cert = UniformCertificate { matching: m.clone(), cyclic_connectivity: k };
                for &(on, off) in &patterns {
                    let w = FractionalWeights::two_valued(g, &m, on, off);
                    if let Ok(v) = is_fractional_pm_certified(g, &w, &cert) {
                        assert_eq!(v, is_fractional_pm(g, &w, DEFAULT_ODDSET_CAP).unwrap());
                    }
                }
            }
        }
        // the half-off weights are settled by the certificate on Petersen
        let p = generators::petersen();
        let m = pms(&p)[0].clone();
        let w = FractionalWeights::two_valued(&p, &m, r(0, 1), r(1, 2));
        let cert = UniformCertificate { matching: m, cyclic_connectivity: 5 };
        assert!(!is_fractional_pm_certified(&p, &w, &cert).unwrap());
    }

    #[test]
    fn polytope_selection_examples() {
        let caps = Caps::default();
        let p = generators::petersen();
        let ms = pms(&p);
        let third = FractionalWeights::uniform(&p, r(1, 3));
        let m = polytope_select(&p, &third, &ObjectiveVector::ones(&p), &caps).unwrap();
        assert_eq!(ObjectiveVector::ones(&p).dot_set(m.edges()), r(5, 1));
        let c = ObjectiveVector::outside(&p, &ms[0]);
        let m = polytope_select(&p, &third, &c, &caps).unwrap();
        assert_eq!(c.dot_set(m.edges()), r(4, 1));
        assert!(c.dot_set(m.edges()) >= c.dot_weights(&third));

        let k4 = generators::k4();
        let m0 = &pms(&k4)[0];
        let w = FractionalWeights::two_valued(&k4, m0, r(0, 1), r(1, 2));
        let c = ObjectiveVector::outside(&k4, m0);
        let m = polytope_select(&k4, &w, &c, &caps).unwrap();
        assert!(m.intersection(m0).is_empty());
        assert_eq!(c.dot_set(m.edges()), r(2, 1));
    }

    #[test]
    fn selection_beats_weights_on_random_objectives() {
        let caps = Caps::default();
        for seed in 0..10u64 {
            let g = generators::random_bridgeless(10, seed).unwrap();
            let w = FractionalWeights::uniform(&g, r(1, 3));
            let c = ObjectiveVector::new(
                (0..g.m()).map(|e| r(((e as u64 * 7 + seed * 13) % 11) as i64 - 5, 3)).collect(),
            );
            let m = polytope_select(&g, &w, &c, &caps).unwrap();
            assert!(c.dot_set(m.edges()) >= c.dot_weights(&w));
        }
    }

    #[test]
    fn three_cut_pair_examples() {
        let caps = Caps::default();
        let p = theorem3_check(&generators::petersen(), &caps).unwrap();
        assert_eq!(p.intersection.len(), 1);
        assert_eq!(p.bound, 1);
        let k = theorem3_check(&generators::k4(), &caps).unwrap();
        assert!(k.intersection.is_empty());
        let j5 = theorem3_check(&generators::flower_snark(5).unwrap(), &caps).unwrap();
        assert!(j5.intersection.len() <= 2);
    }

    #[test]
    fn three_cuts_of_prism() {
        // six trivial cuts plus the three rungs
        assert_eq!(three_edge_cuts(&generators::prism(3).unwrap()).len(), 7);
        assert_eq!(three_edge_cuts(&generators::petersen()).len(), 10);
    }

    #[test]
    fn pair_or_cut_bound_on_petersen() {
        let rep = theorem45_check(&generators::petersen(), &Caps::default()).unwrap();
        assert_eq!(rep.k, Some(5));
        assert_eq!(rep.s, Some(7));
        assert_eq!(rep.pair_bound, Some(r(10, 14)));
        assert_eq!(rep.min_pair_intersection, Some(1));
        assert!(!rep.pair_alternative);
        assert!(rep.cut_alternative);
        assert_eq!(rep.cut_witnesses.len(), 6);
        assert!(rep.cut_witnesses.iter().all(|c| c.cut.len() == 5));
        assert_eq!(rep.order_threshold, Some(70));
        assert!(rep.two_matching_claim_applies);
        assert!(rep.ms_witness.is_some());
        assert!(rep.holds());
        assert_eq!(
            rep.lemma_route,
            LemmaRoute::Checked { considered: 0, not_fractional: 0, within_bound: 0 }
        );
    }

    #[test]
    fn pair_or_cut_bound_inapplicable_on_k4() {
        let rep = theorem45_check(&generators::k4(), &Caps::default()).unwrap();
        assert!(!rep.applicable());
        assert!(rep.holds());
    }
}
