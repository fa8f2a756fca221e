use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};
use smallvec::SmallVec;

const WORD: usize = 64;

/// A subset of the edge identifiers `0..universe` of a fixed host digraph
/// (or of the ground set of a matroid).
///
/// Membership is stored densely, one bit per identifier; sets over up to 128
/// identifiers live inline without allocation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    universe: usize,
    words: SmallVec<[u64; 2]>,
}

impl EdgeSet {
    pub fn empty(universe: usize) -> Self {
        let words = SmallVec::from_elem(0, universe.div_ceil(WORD));
        EdgeSet { universe, words }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * WORD;
            let bits = (universe - lo).min(WORD);
            *w = if bits == WORD { u64::MAX } else { (1u64 << bits) - 1 };
        }
        s
    }

    /// Panics if an identifier is outside the universe.
    pub fn from_ids<I: IntoIterator<Item = usize>>(universe: usize, ids: I) -> Self {
        let mut s = Self::empty(universe);
        for id in ids {
            s.insert(id);
        }
        s
    }

    /// Builds a set from the low `universe` bits of `mask`; `universe` must be at most 64.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        assert!(universe <= WORD, "mask construction needs a universe of at most 64");
        assert!(universe == WORD || mask >> universe == 0, "mask has bits outside the universe");
        let mut s = Self::empty(universe);
        if let Some(w) = s.words.first_mut() {
            *w = mask;
        }
        s
    }

    /// The membership bits as a single word, when the universe fits in one.
    pub fn to_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, id: usize) -> bool {
        id < self.universe && self.words[id / WORD] >> (id % WORD) & 1 == 1
    }

    pub fn insert(&mut self, id: usize) {
        assert!(id < self.universe, "edge id {id} outside universe of size {}", self.universe);
        self.words[id / WORD] |= 1 << (id % WORD);
    }

    pub fn remove(&mut self, id: usize) {
        if id < self.universe {
            self.words[id / WORD] &= !(1 << (id % WORD));
        }
    }

    pub fn with(&self, id: usize) -> Self {
        let mut s = self.clone();
        s.insert(id);
        s
    }

    pub fn without(&self, id: usize) -> Self {
        let mut s = self.clone();
        s.remove(id);
        s
    }

    /// Members in increasing order.
    pub fn iter(&self) -> Iter<'_> {
        Iter { words: &self.words, index: 0, current: self.words.first().copied().unwrap_or(0) }
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
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

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check_universe(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.check_universe(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// The canonical order used throughout: by size, then lexicographically on the
    /// increasing id sequence.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.iter().cmp(other.iter()))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        self.check_universe(other);
        let words = self.words.iter().zip(&other.words).map(|(&a, &b)| f(a, b)).collect();
        EdgeSet { universe: self.universe, words }
    }

    fn check_universe(&self, other: &Self) {
        assert_eq!(self.universe, other.universe, "edge sets over different universes");
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + bit);
            }
            self.index += 1;
            self.current = *self.words.get(self.index)?;
        }
    }
}

impl<'a> IntoIterator for &'a EdgeSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, id) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{id}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for EdgeSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_and_iteration_cross_word_boundaries() {
        let s = EdgeSet::full(130);
        assert_eq!(s.len(), 130);
        assert_eq!(s.iter().collect::<Vec<_>>(), (0..130).collect::<Vec<_>>());
        let t = EdgeSet::from_ids(130, [0, 63, 64, 129]);
        assert_eq!(t.iter().collect::<Vec<_>>(), vec![0, 63, 64, 129]);
        assert!(t.is_subset(&s));
        assert_eq!(s.difference(&t).len(), 126);
    }

    #[test]
    fn empty_universe() {
        let s = EdgeSet::empty(0);
        assert!(s.is_empty());
        assert_eq!(s, EdgeSet::full(0));
        assert_eq!(s.to_mask(), Some(0));
        assert_eq!(s.iter().count(), 0);
    }

    #[test]
    fn canonical_order_is_size_then_lex() {
        let a = EdgeSet::from_ids(5, [3]);
        let b = EdgeSet::from_ids(5, [0, 4]);
        let c = EdgeSet::from_ids(5, [1, 2]);
        let mut v = vec![c.clone(), b.clone(), a.clone()];
        v.sort_by(EdgeSet::canonical_cmp);
        assert_eq!(v, vec![a, b, c]);
    }

    #[test]
    #[should_panic]
    fn insert_out_of_universe_panics() {
        EdgeSet::empty(3).insert(3);
    }

    #[test]
    fn mask_round_trip() {
        let s = EdgeSet::from_mask(6, 0b101001);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 3, 5]);
        assert_eq!(s.to_mask(), Some(0b101001));
        assert_eq!(format!("{s}"), "[0,3,5]");
    }
}
