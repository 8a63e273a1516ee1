//! Fixed-width bitsets over the dense state ids of one automaton.
//!
//! Subset construction and the product builders spend most of their time in
//! set operations, so sets of states are stored as `u64` blocks. All sets
//! belonging to the same automaton have the same width; mixing widths is a
//! logic error and panics.

use crate::nfa::StateId;

const BLOCK: usize = 64;

/// A set of [`StateId`]s with a fixed capacity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateSet {
    nbits: usize,
    blocks: Vec<u64>,
}

impl StateSet {
    /// Creates an empty set able to hold states `0..nbits`.
    pub fn empty(nbits: usize) -> Self {
        StateSet {
            nbits,
            blocks: vec![0; nbits.div_ceil(BLOCK)],
        }
    }

    pub fn capacity(&self) -> usize {
        self.nbits
    }

    pub fn insert(&mut self, q: StateId) {
        assert!(q.0 < self.nbits, "state {} out of set capacity {}", q.0, self.nbits);
        self.blocks[q.0 / BLOCK] |= 1 << (q.0 % BLOCK);
    }

    pub fn contains(&self, q: StateId) -> bool {
        q.0 < self.nbits && self.blocks[q.0 / BLOCK] & (1 << (q.0 % BLOCK)) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn union_with(&mut self, other: &StateSet) {
        assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a |= b;
        }
    }

    pub fn intersects(&self, other: &StateSet) -> bool {
        assert_eq!(self.nbits, other.nbits);
        self.blocks.iter().zip(&other.blocks).any(|(a, b)| a & b != 0)
    }

    pub fn is_subset(&self, other: &StateSet) -> bool {
        assert_eq!(self.nbits, other.nbits);
        self.blocks.iter().zip(&other.blocks).all(|(a, b)| a & !b == 0)
    }

    /// Set difference `self \ other`.
    pub fn without(&self, other: &StateSet) -> StateSet {
        assert_eq!(self.nbits, other.nbits);
        StateSet {
            nbits: self.nbits,
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = StateId> + '_ {
        self.blocks.iter().enumerate().flat_map(|(i, &b)| {
            (0..BLOCK)
                .filter(move |j| b & (1 << j) != 0)
                .map(move |j| StateId(i * BLOCK + j))
        })
    }
}

impl FromIterator<StateId> for StateSet {
    /// Collects into a set sized by the largest element; mostly for tests.
    fn from_iter<T: IntoIterator<Item = StateId>>(iter: T) -> Self {
        let ids: Vec<StateId> = iter.into_iter().collect();
        let nbits = ids.iter().map(|q| q.0 + 1).max().unwrap_or(0);
        let mut set = StateSet::empty(nbits);
        for q in ids {
            set.insert(q);
        }
        set
    }
}

impl std::fmt::Debug for StateSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter().map(|q| q.0)).finish()
    }
}
