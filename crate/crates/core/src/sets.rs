//! Fixed-universe bit sets over edge and vertex identifiers.

use std::cmp::Ordering;
use std::fmt;
use std::marker::PhantomData;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeKind {}
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexKind {}

/// Set of dense identifiers `0..universe`, tagged with what the
/// identifiers refer to so edge and vertex sets cannot be mixed up.
pub struct IdSet<K> {
    words: Vec<u64>,
    universe: usize,
    _kind: PhantomData<K>,
}

pub type EdgeSet = IdSet<EdgeKind>;
pub type VertexSet = IdSet<VertexKind>;

impl<K> IdSet<K> {
    pub fn new(universe: usize) -> Self {
        IdSet {
            words: vec![0; universe.div_ceil(64)],
            universe,
            _kind: PhantomData,
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::new(universe);
        for i in 0..universe {
            s.insert(i);
        }
        s
    }

    pub fn from_ids(universe: usize, ids: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::new(universe);
        for i in ids {
            s.insert(i);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    /// Panics when `id` is outside the universe.
    pub fn insert(&mut self, id: usize) -> bool {
        assert!(id < self.universe, "id {id} outside universe {}", self.universe);
        let (w, b) = (id / 64, id % 64);
        let was = self.words[w] >> b & 1 == 1;
        self.words[w] |= 1 << b;
        !was
    }

    pub fn remove(&mut self, id: usize) -> bool {
        if id >= self.universe {
            return false;
        }
        let (w, b) = (id / 64, id % 64);
        let was = self.words[w] >> b & 1 == 1;
        self.words[w] &= !(1 << b);
        was
    }

    pub fn toggle(&mut self, id: usize) {
        assert!(id < self.universe);
        self.words[id / 64] ^= 1 << (id % 64);
    }

    pub fn contains(&self, id: usize) -> bool {
        id < self.universe && self.words[id / 64] >> (id % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_odd(&self) -> bool {
        self.len() % 2 == 1
    }

    /// Identifiers in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * 64 + b)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        assert_eq!(self.universe, other.universe, "set universes differ");
        IdSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
            universe: self.universe,
            _kind: PhantomData,
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn symmetric_difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a ^ b)
    }

    pub fn complement(&self) -> Self {
        Self::full(self.universe).difference(self)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.universe == other.universe
            && self.words.iter().zip(&other.words).all(|(&a, &b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(&a, &b)| a & b == 0)
    }

    pub fn intersection_len(&self, other: &Self) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(&a, &b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Lexicographic order on the ascending identifier lists.
    pub fn cmp_lex(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl<K> Clone for IdSet<K> {
    fn clone(&self) -> Self {
        IdSet {
            words: self.words.clone(),
            universe: self.universe,
            _kind: PhantomData,
        }
    }
}

impl<K> PartialEq for IdSet<K> {
    fn eq(&self, other: &Self) -> bool {
        self.universe == other.universe && self.words == other.words
    }
}

impl<K> Eq for IdSet<K> {}

impl<K> std::hash::Hash for IdSet<K> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.universe.hash(state);
        self.words.hash(state);
    }
}

impl<K> fmt::Debug for IdSet<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
