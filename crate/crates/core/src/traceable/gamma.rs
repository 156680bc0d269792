//! The chain of 2-factor cycles whose path-index intervals overlap from the
//! first odd cycle to the last.

use crate::error::{invariant, Result};

use super::path_coloring::OddPairDecomposition;

/// Cycle indices into the decomposition. Positions are 1-based (`get(1)` is
/// the first odd cycle, `get(h)` the last one) to keep the index arithmetic
/// of the construction readable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaSequence {
    indices: Vec<usize>,
    /// (min, max) per entry, same order.
    bounds: Vec<(usize, usize)>,
}

impl GammaSequence {
    pub fn h(&self) -> usize {
        self.indices.len()
    }

    /// Decomposition index of the `j`-th cycle, `1 <= j <= h`.
    pub fn get(&self, j: usize) -> usize {
        self.indices[j - 1]
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn min(&self, j: usize) -> usize {
        self.bounds[j - 1].0
    }

    pub fn max(&self, j: usize) -> usize {
        self.bounds[j - 1].1
    }

    /// Sequence position of a decomposition cycle.
    pub fn position_of(&self, cycle: usize) -> Option<usize> {
        self.indices.iter().position(|&c| c == cycle).map(|i| i + 1)
    }

    /// Positions `2..h-1`.
    pub fn inner(&self) -> std::ops::Range<usize> {
        2..self.h()
    }

    fn check(&self, n: usize) -> Result<()> {
        let h = self.h();
        invariant(h >= 2, || "sequence shorter than two".into())?;
        if h == 2 {
            let ok = 1 < self.min(2) && self.min(2) < self.max(1) && self.max(1) < n;
            return invariant(ok, || format!("h = 2 bounds fail: {:?}", self.bounds));
        }
        for j in 2..h {
            let ok = self.min(j) < self.max(j - 1)
                && self.max(j - 1) < self.min(j + 1)
                && self.min(j + 1) < self.max(j);
            invariant(ok, || format!("interleaving fails at {j}: {:?}", self.bounds))?;
        }
        invariant(self.min(h) < n, || "last cycle starts at n".into())
    }
}

pub fn gamma_sequence(dec: &OddPairDecomposition) -> Result<GammaSequence> {
    let last = dec.last_index();
    let mut indices = vec![0];
    loop {
        let cur = dec.cycle(*indices.last().unwrap()).max;
        if cur > dec.last().min {
            indices.push(last);
            break;
        }
        invariant(cur < dec.last().min, || "two cycles share a beta edge".into())?;
        let next = (0..dec.k())
            .filter(|&c| dec.cycle(c).min < cur && cur < dec.cycle(c).max)
            .max_by_key(|&c| dec.cycle(c).max);
        let next = next.ok_or_else(|| {
            crate::Error::InvariantViolation(format!("no cycle spans beta edge {cur}: bridge?"))
        })?;
        invariant(dec.cycle(next).max > cur && !indices.contains(&next), || {
            "sequence does not advance".into()
        })?;
        invariant(next != last, || "last cycle reached through the spanning rule".into())?;
        indices.push(next);
    }
    let bounds = indices.iter().map(|&c| (dec.cycle(c).min, dec.cycle(c).max)).collect();
    let seq = GammaSequence { indices, bounds };
    let n = dec.cycles().iter().map(|c| c.len()).sum();
    seq.check(n)?;
    Ok(seq)
}
