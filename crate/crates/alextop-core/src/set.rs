//! Bitset subsets of a fixed point carrier `{0, .., n-1}`.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

const WORD_BITS: usize = 64;

/// A subset of the points of an `n`-point space, stored as a bitset.
///
/// All binary operations require both operands to have the same width.
/// Sets are ordered by their value as an unsigned integer (bit `i` has
/// weight `2^i`), which makes enumeration orders reproducible and has
/// the convenient consequence that a proper subset always compares
/// strictly smaller.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PointSet {
    n: usize,
    words: Vec<u64>,
}

impl PointSet {
    pub fn empty(n: usize) -> Self {
        PointSet {
            n,
            words: vec![0; n.div_ceil(WORD_BITS)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for x in 0..n {
            s.insert(x);
        }
        s
    }

    pub fn singleton(n: usize, x: usize) -> Self {
        let mut s = Self::empty(n);
        s.insert(x);
        s
    }

    /// Builds a set from the low `n` bits of `mask`. Requires `n <= 64`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= WORD_BITS);
        assert!(n == WORD_BITS || mask < (1u64 << n));
        let words = if n == 0 { Vec::new() } else { vec![mask] };
        PointSet { n, words }
    }

    /// The bitset as a `u64` mask. Requires `n <= 64`.
    pub fn to_mask(&self) -> u64 {
        assert!(self.n <= WORD_BITS);
        self.words.first().copied().unwrap_or(0)
    }

    pub fn width(&self) -> usize {
        self.n
    }

    pub fn contains(&self, x: usize) -> bool {
        debug_assert!(x < self.n);
        self.words[x / WORD_BITS] >> (x % WORD_BITS) & 1 != 0
    }

    pub fn insert(&mut self, x: usize) {
        debug_assert!(x < self.n);
        self.words[x / WORD_BITS] |= 1 << (x % WORD_BITS);
    }

    pub fn remove(&mut self, x: usize) {
        debug_assert!(x < self.n);
        self.words[x / WORD_BITS] &= !(1 << (x % WORD_BITS));
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn union(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        PointSet {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        PointSet {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        PointSet {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }

    /// Complement within the `n`-point carrier.
    pub fn complement(&self) -> Self {
        Self::full(self.n).difference(self)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_proper_subset(&self, other: &Self) -> bool {
        self.is_subset(other) && self != other
    }

    /// Member points in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&x| self.contains(x))
    }

    /// Advances to the next subset in ascending integer order.
    /// Returns `false` once the full carrier wraps back to the empty set.
    pub fn increment(&mut self) -> bool {
        for (i, w) in self.words.iter_mut().enumerate() {
            let top = if (i + 1) * WORD_BITS <= self.n {
                u64::MAX
            } else {
                (1u64 << (self.n % WORD_BITS)) - 1
            };
            if *w != top {
                *w += 1;
                return true;
            }
            *w = 0;
        }
        false
    }
}

impl PartialOrd for PointSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PointSet {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.n, other.n);
        // integer order: most significant word first
        self.words.iter().rev().cmp(other.words.iter().rev())
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn subset_order_matches_integer_order() {
        let a = PointSet::from_mask(4, 0b0011);
        let b = PointSet::from_mask(4, 0b0111);
        assert!(a.is_proper_subset(&b));
        assert!(a < b);
    }

    #[test]
    fn increment_enumerates_power_set() {
        let mut s = PointSet::empty(3);
        let mut seen = Vec::new();
        loop {
            seen.push(s.to_mask());
            if !s.increment() {
                break;
            }
        }
        assert_eq!(seen, (0..8).collect::<Vec<u64>>());
    }

    #[test]
    fn increment_crosses_word_boundary() {
        let mut s = PointSet::full(70);
        s.remove(69);
        assert!(s.increment());
        assert!(s.contains(69));
        assert_eq!(s.len(), 1);
        let mut full = PointSet::full(70);
        assert!(!full.increment());
        assert!(full.is_empty());
    }

    #[test]
    fn empty_carrier() {
        let mut s = PointSet::empty(0);
        assert!(s.is_empty());
        assert_eq!(s, PointSet::full(0));
        assert!(!s.increment());
    }
}
