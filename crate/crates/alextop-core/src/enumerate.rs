//! Exhaustive generation of all labeled preorders (equivalently, all
//! finite topologies) and all labeled posets on a small carrier, plus the
//! census that runs the dimension cross-check over every generated space.
//!
//! Generation is a depth-first search over the off-diagonal relation
//! bits, most significant bit first with the 0-branch taken before the
//! 1-branch, so spaces come out in ascending order of their relation bit
//! encoding. A partial assignment is pruned as soon as three decided bits
//! contradict transitivity; every leaf reached is therefore a preorder.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::dimension::{verify_theorem, DimensionReport};
use crate::quotient::kolmogorov_quotient;
use crate::set::PointSet;
use crate::space::Preorder;

/// Largest carrier the exhaustive generator accepts. The candidate space
/// at n = 6 is 2^30 partial assignments; beyond that the cost is out of
/// reach for an exhaustive run.
pub const MAX_CENSUS_POINTS: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EnumerateError {
    CarrierTooLarge { n: usize, max: usize },
    /// An implementation bug: some space disagreed between the dimension
    /// routes. Carries the offending space and its report.
    TheoremViolation { space_id: u64, space: Preorder, report: DimensionReport },
}

impl fmt::Display for EnumerateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumerateError::CarrierTooLarge { n, max } => {
                write!(f, "carrier of {} points exceeds the enumeration limit of {}", n, max)
            }
            EnumerateError::TheoremViolation { space_id, space, report } => write!(
                f,
                "dimension routes disagree on space #{}: {:?} gave {:?}",
                space_id, space, report
            ),
        }
    }
}

impl core::error::Error for EnumerateError {}

/// One census line per space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub space_id: u64,
    pub n: usize,
    pub is_t0: bool,
    pub quotient_size: usize,
    pub dimension: i64,
}

/// Aggregate of a census run on one carrier size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusSummary {
    pub n: usize,
    pub total: u64,
    /// Space counts keyed by (dimension, is_t0), ascending.
    pub by_dimension_t0: Vec<((i64, bool), u64)>,
}

/// Yields every reflexive transitive relation on `n` labeled points
/// exactly once, ascending by bit encoding.
pub fn enumerate_preorders(n: usize) -> Result<PreorderStream, EnumerateError> {
    if n > MAX_CENSUS_POINTS {
        return Err(EnumerateError::CarrierTooLarge { n, max: MAX_CENSUS_POINTS });
    }
    Ok(PreorderStream::new(n))
}

/// The antisymmetric subset of [`enumerate_preorders`], same order.
pub fn enumerate_posets(n: usize) -> Result<PosetStream, EnumerateError> {
    Ok(PosetStream { inner: enumerate_preorders(n)? })
}

#[derive(Debug)]
pub struct PreorderStream {
    n: usize,
    /// Off-diagonal cells in assignment order: reverse row-major, so the
    /// most significant encoding bit is decided first.
    cells: Vec<(usize, usize)>,
    row1: Vec<u64>,
    row0: Vec<u64>,
    col1: Vec<u64>,
    col0: Vec<u64>,
    /// Assigned value per depth; the 0-branch of a depth is explored
    /// before its 1-branch.
    stack: Vec<u8>,
    started: bool,
    done: bool,
}

impl PreorderStream {
    fn new(n: usize) -> Self {
        let mut cells = Vec::new();
        for x in (0..n).rev() {
            for y in (0..n).rev() {
                if x != y {
                    cells.push((x, y));
                }
            }
        }
        let diag: Vec<u64> = (0..n).map(|x| 1u64 << x).collect();
        PreorderStream {
            n,
            cells,
            row1: diag.clone(),
            row0: vec![0; n],
            col1: diag,
            col0: vec![0; n],
            stack: Vec::new(),
            started: false,
            done: false,
        }
    }

    /// Decided premises contradicting the new bit force a prune; the
    /// checks mirror the three placements of the new bit in a triple.
    fn try_assign(&mut self, depth: usize, v: u8) -> bool {
        let (x, y) = self.cells[depth];
        if v == 1 {
            // x ≤ y, y ≤ z decided with x ≤ z decided 0
            if self.row1[y] & self.row0[x] != 0 {
                return false;
            }
            // w ≤ x decided with w ≤ y decided 0
            if self.col1[x] & self.col0[y] != 0 {
                return false;
            }
            self.row1[x] |= 1 << y;
            self.col1[y] |= 1 << x;
        } else {
            // x ≤ z, z ≤ y both decided 1
            if self.row1[x] & self.col1[y] != 0 {
                return false;
            }
            self.row0[x] |= 1 << y;
            self.col0[y] |= 1 << x;
        }
        true
    }

    fn undo(&mut self, depth: usize, v: u8) {
        let (x, y) = self.cells[depth];
        if v == 1 {
            self.row1[x] &= !(1 << y);
            self.col1[y] &= !(1 << x);
        } else {
            self.row0[x] &= !(1 << y);
            self.col0[y] &= !(1 << x);
        }
    }

    /// Pops exhausted frames, flipping the first 0-branch that admits a 1.
    /// Returns false when the whole tree is exhausted.
    fn backtrack(&mut self) -> bool {
        while let Some(v) = self.stack.pop() {
            let depth = self.stack.len();
            self.undo(depth, v);
            if v == 0 && self.try_assign(depth, 1) {
                self.stack.push(1);
                return true;
            }
        }
        false
    }

    fn build(&self) -> Preorder {
        let below = (0..self.n)
            .map(|y| PointSet::from_mask(self.n, self.col1[y]))
            .collect();
        Preorder::from_below_unchecked(below)
    }
}

impl Iterator for PreorderStream {
    type Item = Preorder;

    fn next(&mut self) -> Option<Preorder> {
        if self.done {
            return None;
        }
        if self.started && !self.backtrack() {
            self.done = true;
            return None;
        }
        self.started = true;
        loop {
            let depth = self.stack.len();
            if depth == self.cells.len() {
                return Some(self.build());
            }
            if self.try_assign(depth, 0) {
                self.stack.push(0);
            } else if self.try_assign(depth, 1) {
                self.stack.push(1);
            } else if !self.backtrack() {
                self.done = true;
                return None;
            }
        }
    }
}

pub struct PosetStream {
    inner: PreorderStream,
}

impl Iterator for PosetStream {
    type Item = Preorder;

    fn next(&mut self) -> Option<Preorder> {
        self.inner.by_ref().find(Preorder::is_t0)
    }
}

/// Runs [`verify_theorem`] over every preorder on `n` points, producing
/// one row per space and an aggregate summary. A disagreement aborts the
/// census with the offending space attached; it signals a bug, never a
/// property of the space.
pub fn census(n: usize) -> Result<(Vec<CensusRow>, CensusSummary), EnumerateError> {
    let mut rows = Vec::new();
    let mut counts: Vec<((i64, bool), u64)> = Vec::new();
    for (space_id, p) in enumerate_preorders(n)?.enumerate() {
        let space_id = space_id as u64;
        let report = verify_theorem(&p);
        if !report.agree {
            return Err(EnumerateError::TheoremViolation { space_id, space: p, report });
        }
        let row = CensusRow {
            space_id,
            n,
            is_t0: p.is_t0(),
            quotient_size: kolmogorov_quotient(&p).poset.n(),
            dimension: report.height_fast,
        };
        debug_assert!(row.dimension < row.quotient_size as i64);
        let key = (row.dimension, row.is_t0);
        match counts.binary_search_by_key(&key, |&(k, _)| k) {
            Ok(i) => counts[i].1 += 1,
            Err(i) => counts.insert(i, (key, 1)),
        }
        rows.push(row);
    }
    let summary = CensusSummary { n, total: rows.len() as u64, by_dimension_t0: counts };
    Ok((rows, summary))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preorder_counts_small() {
        // labeled finite topologies: 1, 1, 4, 29, 355
        for (n, want) in [(0usize, 1usize), (1, 1), (2, 4), (3, 29), (4, 355)] {
            assert_eq!(enumerate_preorders(n).unwrap().count(), want, "n={}", n);
        }
    }

    #[test]
    fn poset_counts_small() {
        // labeled posets: 1, 1, 3, 19, 219
        for (n, want) in [(0usize, 1usize), (1, 1), (2, 3), (3, 19), (4, 219)] {
            assert_eq!(enumerate_posets(n).unwrap().count(), want, "n={}", n);
        }
    }

    #[test]
    fn carrier_too_large_is_rejected() {
        assert_eq!(
            enumerate_preorders(9).unwrap_err(),
            EnumerateError::CarrierTooLarge { n: 9, max: MAX_CENSUS_POINTS }
        );
    }

    #[test]
    fn encodings_strictly_increase() {
        for n in 0..=4 {
            let codes: Vec<u64> = enumerate_preorders(n).unwrap().map(|p| p.encode()).collect();
            assert!(codes.windows(2).all(|w| w[0] < w[1]), "n={}", n);
        }
    }

    #[test]
    fn stream_is_closed_under_relabeling() {
        use alloc::collections::BTreeSet;
        let all: BTreeSet<u64> = enumerate_preorders(3).unwrap().map(|p| p.encode()).collect();
        // all 6 permutations of 3 points
        let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        for p in enumerate_preorders(3).unwrap() {
            for perm in perms {
                let mut pairs = Vec::new();
                for x in 0..3 {
                    for y in 0..3 {
                        if p.leq(x, y) {
                            pairs.push((perm[x], perm[y]));
                        }
                    }
                }
                let relabeled = Preorder::from_pairs(3, &pairs).unwrap();
                assert!(all.contains(&relabeled.encode()));
            }
        }
    }

    #[test]
    fn census_two_points() {
        let (rows, summary) = census(2).unwrap();
        assert_eq!(rows.len(), 4);
        let dims: Vec<i64> = rows.iter().map(|r| r.dimension).collect();
        // antichain, two chains, indiscrete (ascending bit encoding)
        assert_eq!(dims, vec![0, 1, 1, 0]);
        assert_eq!(summary.total, 4);
        assert_eq!(summary.by_dimension_t0, vec![((0, false), 1), ((0, true), 1), ((1, true), 2)]);
    }

    #[test]
    fn census_one_point() {
        let (rows, _) = census(1).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].dimension, 0);
    }
}
