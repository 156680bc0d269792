use thiserror::Error;

/// Everything that can go wrong while building graphs, enumerating
/// matchings or running one of the constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    NotCubic { vertex: usize, degree: usize },
    #[error("graph is not simple: {0}")]
    NotSimple(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("resource cap exceeded: {what} (limit {limit})")]
    ResourceCap { what: &'static str, limit: u64 },
    #[error("edge set is not a perfect matching")]
    NotPerfect,
    #[error("edge set is not a subset of the matching")]
    NotSubset,
    #[error("edge set is not a balanced matching")]
    NotBalanced,
    #[error("two-factor contains an odd cycle through vertex {0}")]
    OddCycleInTwoFactor(usize),
    #[error("odd-set enumeration needs n <= {cap}, graph has {n} vertices")]
    TooLarge { n: usize, cap: usize },
    #[error("no perfect matching satisfies the tight-cut constraints")]
    NoFeasibleMatching,
    #[error("bound violated: {0}")]
    BoundViolated(String),
    #[error("walk is not a Hamiltonian path")]
    NotHamiltonian,
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("construction failed at {stage}: {detail}")]
    ConstructionError { stage: String, detail: String },
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("bad generator parameters: {0}")]
    BadParams(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invariant(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvariantViolation(msg()))
    }
}
