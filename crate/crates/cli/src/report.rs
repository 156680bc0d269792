//! JSON-lines records. One record per graph; every certificate lists edge
//! ids together with their endpoint pairs so it can be checked against the
//! graph6 string alone.

use matchcert::{CubicGraph, EdgeSet, VertexSet};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL: &str = concat!("matchcert ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeList {
    pub ids: Vec<usize>,
    pub ends: Vec<[usize; 2]>,
}

impl EdgeList {
    pub fn new(g: &CubicGraph, s: &EdgeSet) -> Self {
        let ids = s.to_vec();
        let ends = ids
            .iter()
            .map(|&e| {
                let (u, v) = g.endpoints(e);
                [u, v]
            })
            .collect();
        EdgeList { ids, ends }
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }
}

pub fn vertex_list(s: &VertexSet) -> Vec<usize> {
    s.to_vec()
}

/// Outcome of one check. `Fail` means a claim did not hold or a witness
/// search came back empty; `Capped` means a search budget ran out.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Check<T> {
    Pass { cert: T },
    Fail { reason: String },
    Capped { reason: String },
    Skipped { reason: String },
}

impl<T> Check<T> {
    pub fn is_fail(&self) -> bool {
        matches!(self, Check::Fail { .. })
    }

    pub fn is_capped(&self) -> bool {
        matches!(self, Check::Capped { .. })
    }

    pub fn cert(&self) -> Option<&T> {
        match self {
            Check::Pass { cert } => Some(cert),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    pub bridgeless: bool,
    pub girth: usize,
    pub perfect_matchings: usize,
    pub chromatic_index: u8,
    pub oddness: usize,
    /// `None` when no two disjoint cycles exist.
    pub cyclic_connectivity: Option<usize>,
    pub cyclic_cut: Option<EdgeList>,
    pub cyclic_side: Option<Vec<usize>>,
    /// A proper 3-edge-colouring as its three classes, when one exists.
    pub colouring: Option<[EdgeList; 3]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairCert {
    pub m1: EdgeList,
    pub m2: EdgeList,
    pub intersection: EdgeList,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JoinCert {
    pub m1: EdgeList,
    pub m2: EdgeList,
    pub join: EdgeList,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleCert {
    pub m1: EdgeList,
    pub m2: EdgeList,
    pub m3: EdgeList,
}

/// Colourability and the existence of a perfect matching free of odd cuts
/// must agree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColourabilityCert {
    pub colourable: bool,
    pub colouring: Option<[EdgeList; 3]>,
    pub matching: Option<EdgeList>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmallPairCert {
    pub m: EdgeList,
    pub m_prime: EdgeList,
    pub intersection: EdgeList,
    pub three_cuts: usize,
    pub bound: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutWitness {
    pub matching: EdgeList,
    pub side: Vec<usize>,
    pub cut: EdgeList,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairOrCutCert {
    pub k: Option<usize>,
    pub s: Option<usize>,
    /// Exact ratios written as `p/q`.
    pub pair_bound: Option<String>,
    pub single_bound: Option<String>,
    pub min_pair_intersection: Option<usize>,
    pub min_pair: Option<[EdgeList; 2]>,
    pub pair_alternative: bool,
    pub cut_alternative: bool,
    pub cut_witnesses: Vec<CutWitness>,
    pub order_threshold: Option<usize>,
    pub two_matching_claim_applies: bool,
    pub ms_witness: Option<PairCert>,
    /// How the weight-vector argument fared, for the record.
    pub weight_route: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepSummary {
    pub j: usize,
    pub partner: usize,
    pub reroute: String,
    pub splice: String,
    pub crossed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundCert {
    pub walk: usize,
    pub walk_vertices: Vec<usize>,
    pub matching: EdgeList,
    /// `M_alpha ∩ M_i`.
    pub alpha: EdgeList,
    pub joins: [EdgeList; 2],
    pub steps: Vec<StepSummary>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialCert {
    pub route: String,
    pub matchings: Vec<EdgeList>,
    pub red_walk: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum TraceableCert {
    /// The path colouring left no odd cycle, giving a 3-edge-colouring.
    Escape { path: Vec<usize>, colouring: [EdgeList; 3] },
    Certified {
        path: Vec<usize>,
        m_alpha: EdgeList,
        h: usize,
        rounds: Vec<RoundCert>,
        special: Option<SpecialCert>,
        notes: Vec<String>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timings {
    pub total_ms: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub schema: u32,
    pub tool: String,
    pub id: String,
    pub source: String,
    pub graph6: String,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub invariants: Option<Check<Invariants>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ms: Option<Check<PairCert>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kr: Option<Check<JoinCert>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fr: Option<Check<TripleCert>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub thm1: Option<Check<ColourabilityCert>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub thm3: Option<Check<SmallPairCert>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub thm45: Option<Check<PairOrCutCert>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub traceable: Option<Check<TraceableCert>>,
    /// Set when a certificate failed the independent re-check.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub verification_errors: Vec<String>,
    /// Wall-clock times are off by default so reports stay reproducible.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

impl Record {
    fn statuses(&self) -> [(bool, bool); 8] {
        fn st<T>(c: &Option<Check<T>>) -> (bool, bool) {
            c.as_ref().map_or((false, false), |c| (c.is_fail(), c.is_capped()))
        }
        [
            st(&self.invariants),
            st(&self.ms),
            st(&self.kr),
            st(&self.fr),
            st(&self.thm1),
            st(&self.thm3),
            st(&self.thm45),
            st(&self.traceable),
        ]
    }

    pub fn any_fail(&self) -> bool {
        !self.verification_errors.is_empty() || self.statuses().iter().any(|s| s.0)
    }

    pub fn any_capped(&self) -> bool {
        self.statuses().iter().any(|s| s.1)
    }
}
