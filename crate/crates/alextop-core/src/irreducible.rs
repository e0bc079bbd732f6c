//! Closed-set enumeration and the definitional irreducibility oracle.
//!
//! A non-empty closed set `A` is irreducible when it is not the union of
//! two proper non-empty closed subsets. The oracle here searches for such
//! a decomposition literally; in particular it does not assume that the
//! irreducible sets are exactly the point closures, since that is one of
//! the facts it is used to test.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::set::PointSet;
use crate::space::{ClosedSet, Preorder, PreorderError};

/// The verdict of the irreducibility oracle. When the set is reducible, a
/// witness decomposition `A = B ∪ C` with `B, C` proper, non-empty and
/// closed is attached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibilityWitness {
    pub verdict: bool,
    pub decomposition: Option<(ClosedSet, ClosedSet)>,
}

/// Iterator over every down-closed subset of `p`, in ascending bitset
/// order, including the empty set and the full carrier.
pub fn closed_sets(p: &Preorder) -> ClosedSets<'_> {
    ClosedSets {
        p,
        current: Some(PointSet::empty(p.n())),
    }
}

pub struct ClosedSets<'a> {
    p: &'a Preorder,
    current: Option<PointSet>,
}

impl Iterator for ClosedSets<'_> {
    type Item = ClosedSet;

    fn next(&mut self) -> Option<ClosedSet> {
        loop {
            let s = self.current.as_mut()?;
            let candidate = s.clone();
            if !s.increment() {
                self.current = None;
            }
            if self.p.is_down_closed(&candidate) {
                return Some(ClosedSet::new_unchecked(candidate));
            }
        }
    }
}

/// Decides irreducibility of a non-empty closed set by searching over
/// unordered pairs of its proper non-empty closed subsets in ascending
/// bitset order; the first decomposition found is the witness.
///
/// Because `A` is closed, a subset of `A` closed in the subspace topology
/// is closed in the whole space, so the search ranges over down-sets
/// contained in `A`.
pub fn is_irreducible(p: &Preorder, a: &ClosedSet) -> Result<IrreducibilityWitness, PreorderError> {
    if a.points().is_empty() {
        return Err(PreorderError::EmptySetNotEligible);
    }
    if !p.is_down_closed(a.points()) {
        return Err(PreorderError::NotClosed);
    }
    let candidates: Vec<PointSet> = closed_sets(p)
        .map(ClosedSet::into_points)
        .filter(|s| !s.is_empty() && s.is_proper_subset(a.points()))
        .collect();
    for i in 0..candidates.len() {
        for j in i..candidates.len() {
            if candidates[i].union(&candidates[j]) == *a.points() {
                return Ok(IrreducibilityWitness {
                    verdict: false,
                    decomposition: Some((
                        ClosedSet::new_unchecked(candidates[i].clone()),
                        ClosedSet::new_unchecked(candidates[j].clone()),
                    )),
                });
            }
        }
    }
    Ok(IrreducibilityWitness { verdict: true, decomposition: None })
}

/// All non-empty irreducible closed sets, in ascending bitset order.
pub fn irreducible_closed_sets(p: &Preorder) -> Vec<ClosedSet> {
    closed_sets(p)
        .filter(|a| {
            !a.points().is_empty() && is_irreducible(p, a).expect("enumerated set is closed").verdict
        })
        .collect()
}

/// The distinct point closures `{cl{x} : x}`. Distinct points share a
/// closure exactly when the space is not T0.
pub fn point_closures(p: &Preorder) -> Vec<ClosedSet> {
    let set: BTreeSet<PointSet> = (0..p.n()).map(|x| p.closure_row(x).clone()).collect();
    set.into_iter().map(ClosedSet::new_unchecked).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use alloc::vec::Vec;

    fn sierpinski() -> Preorder {
        Preorder::from_pairs(2, &[(0, 1)]).unwrap()
    }

    fn masks(sets: &[ClosedSet]) -> Vec<u64> {
        sets.iter().map(|s| s.points().to_mask()).collect()
    }

    #[test]
    fn closed_sets_of_sierpinski() {
        let all: Vec<ClosedSet> = closed_sets(&sierpinski()).collect();
        assert_eq!(masks(&all), vec![0b00, 0b01, 0b11]);
    }

    #[test]
    fn closed_sets_of_antichain_is_power_set() {
        assert_eq!(closed_sets(&Preorder::discrete(2)).count(), 4);
    }

    #[test]
    fn closed_sets_of_chain_are_prefixes() {
        let all: Vec<ClosedSet> = closed_sets(&Preorder::chain(3)).collect();
        assert_eq!(masks(&all), vec![0b000, 0b001, 0b011, 0b111]);
    }

    #[test]
    fn sierpinski_full_set_is_irreducible() {
        let p = sierpinski();
        let a = ClosedSet::new(&p, PointSet::from_mask(2, 0b11)).unwrap();
        assert!(is_irreducible(&p, &a).unwrap().verdict);
    }

    #[test]
    fn discrete_full_set_is_reducible_with_witness() {
        let p = Preorder::discrete(2);
        let a = ClosedSet::new(&p, PointSet::from_mask(2, 0b11)).unwrap();
        let w = is_irreducible(&p, &a).unwrap();
        assert!(!w.verdict);
        let (b, c) = w.decomposition.unwrap();
        assert_eq!(b.points().to_mask(), 0b01);
        assert_eq!(c.points().to_mask(), 0b10);
    }

    #[test]
    fn empty_set_is_an_error() {
        let p = sierpinski();
        let a = ClosedSet::new(&p, PointSet::empty(2)).unwrap();
        assert_eq!(is_irreducible(&p, &a).unwrap_err(), PreorderError::EmptySetNotEligible);
    }

    #[test]
    fn non_closed_set_is_an_error() {
        let p = sierpinski();
        let a = ClosedSet::new_unchecked(PointSet::from_mask(2, 0b10));
        assert_eq!(is_irreducible(&p, &a).unwrap_err(), PreorderError::NotClosed);
    }

    #[test]
    fn irreducibles_of_sierpinski() {
        assert_eq!(masks(&irreducible_closed_sets(&sierpinski())), vec![0b01, 0b11]);
    }

    #[test]
    fn irreducibles_of_discrete_are_singletons() {
        assert_eq!(
            masks(&irreducible_closed_sets(&Preorder::discrete(3))),
            vec![0b001, 0b010, 0b100]
        );
    }

    #[test]
    fn irreducibles_of_indiscrete_is_full_set_only() {
        assert_eq!(masks(&irreducible_closed_sets(&Preorder::indiscrete(2))), vec![0b11]);
    }

    #[test]
    fn point_closures_examples() {
        assert_eq!(masks(&point_closures(&Preorder::indiscrete(2))), vec![0b11]);
        assert_eq!(masks(&point_closures(&Preorder::discrete(3))), vec![0b001, 0b010, 0b100]);
        assert_eq!(masks(&point_closures(&sierpinski())), vec![0b01, 0b11]);
    }
}
