//! Core representations of a finite space: the closed-set family form
//! and the specialisation-preorder form, with lossless conversion.
//!
//! On a finite carrier every topology is Alexandrov, the closed sets are
//! exactly the down-sets of the specialisation preorder, and the two
//! forms determine each other. The preorder is the canonical internal
//! form; the closed-set family is an input/validation form.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::set::PointSet;

/// A reflexive transitive relation `≤` on points `0..n`.
///
/// Internally stores `below[x] = {z : z ≤ x}`, which is precisely the
/// closure of the point `x`, so `leq(x, y)` is `x ∈ cl{y}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Preorder {
    below: Vec<PointSet>,
    labels: Option<Vec<String>>,
}

/// A down-closed subset of a particular preorder's points.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ClosedSet(PointSet);

impl ClosedSet {
    /// Validates that `s` is down-closed in `p`.
    pub fn new(p: &Preorder, s: PointSet) -> Result<Self, PreorderError> {
        assert_eq!(s.width(), p.n());
        if p.is_down_closed(&s) {
            Ok(ClosedSet(s))
        } else {
            Err(PreorderError::NotClosed)
        }
    }

    pub(crate) fn new_unchecked(s: PointSet) -> Self {
        ClosedSet(s)
    }

    pub fn points(&self) -> &PointSet {
        &self.0
    }

    pub fn into_points(self) -> PointSet {
        self.0
    }
}

/// An explicit closed-set family over `n` points, validated against the
/// topology axioms. Stored sorted ascending by bitset value.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteTopology {
    n: usize,
    closed_family: Vec<PointSet>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TopologyError {
    MissingEmptySet,
    MissingFullSet,
    NotClosedUnderUnion(PointSet, PointSet),
    NotClosedUnderIntersection(PointSet, PointSet),
}

impl fmt::Display for TopologyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TopologyError::MissingEmptySet => write!(f, "closed-set family does not contain the empty set"),
            TopologyError::MissingFullSet => write!(f, "closed-set family does not contain the full point set"),
            TopologyError::NotClosedUnderUnion(b, c) => {
                write!(f, "union of closed sets {:?} and {:?} is not closed", b, c)
            }
            TopologyError::NotClosedUnderIntersection(b, c) => {
                write!(f, "intersection of closed sets {:?} and {:?} is not closed", b, c)
            }
        }
    }
}

impl core::error::Error for TopologyError {}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PreorderError {
    PointOutOfRange { point: usize, n: usize },
    /// Witness triple: `x ≤ y` and `y ≤ z` but not `x ≤ z`.
    NotTransitive { x: usize, y: usize, z: usize },
    NotClosed,
    EmptySetNotEligible,
}

impl fmt::Display for PreorderError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PreorderError::PointOutOfRange { point, n } => {
                write!(f, "point {} out of range for a {}-point space", point, n)
            }
            PreorderError::NotTransitive { x, y, z } => write!(
                f,
                "relation is not transitive: {} <= {} and {} <= {} but not {} <= {}",
                x, y, y, z, x, z
            ),
            PreorderError::NotClosed => write!(f, "subset is not down-closed"),
            PreorderError::EmptySetNotEligible => {
                write!(f, "the empty set is not eligible for irreducibility")
            }
        }
    }
}

impl core::error::Error for PreorderError {}

impl Preorder {
    /// Builds a preorder from related pairs `(x, y)` meaning `x ≤ y`.
    /// Reflexive pairs may be omitted; transitivity is checked, not
    /// silently repaired.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self, PreorderError> {
        let mut p = Self::from_pairs_raw(n, pairs)?;
        if let Some((x, y, z)) = p.transitivity_violation() {
            return Err(PreorderError::NotTransitive { x, y, z });
        }
        p.labels = None;
        Ok(p)
    }

    /// Like [`Preorder::from_pairs`] but takes the reflexive-transitive
    /// closure of the input instead of rejecting non-transitive relations.
    pub fn from_pairs_closed(n: usize, pairs: &[(usize, usize)]) -> Result<Self, PreorderError> {
        let mut p = Self::from_pairs_raw(n, pairs)?;
        // Floyd-Warshall on the down-set rows
        for k in 0..n {
            for y in 0..n {
                if p.below[y].contains(k) && !p.below[k].is_subset(&p.below[y]) {
                    p.below[y] = p.below[y].union(&p.below[k]);
                }
            }
        }
        Ok(p)
    }

    fn from_pairs_raw(n: usize, pairs: &[(usize, usize)]) -> Result<Self, PreorderError> {
        let mut below: Vec<PointSet> = (0..n).map(|x| PointSet::singleton(n, x)).collect();
        for &(x, y) in pairs {
            for point in [x, y] {
                if point >= n {
                    return Err(PreorderError::PointOutOfRange { point, n });
                }
            }
            below[y].insert(x);
        }
        Ok(Preorder { below, labels: None })
    }

    /// Builds directly from down-set rows. The caller guarantees the rows
    /// form a reflexive transitive relation; checked only in debug builds.
    pub(crate) fn from_below_unchecked(below: Vec<PointSet>) -> Self {
        let p = Preorder { below, labels: None };
        debug_assert!((0..p.n()).all(|x| p.below[x].contains(x)));
        debug_assert!(p.transitivity_violation().is_none());
        p
    }

    /// The discrete order: `x ≤ y` iff `x = y`.
    pub fn discrete(n: usize) -> Self {
        Preorder {
            below: (0..n).map(|x| PointSet::singleton(n, x)).collect(),
            labels: None,
        }
    }

    /// The total preorder: every pair related both ways.
    pub fn indiscrete(n: usize) -> Self {
        Preorder {
            below: (0..n).map(|_| PointSet::full(n)).collect(),
            labels: None,
        }
    }

    /// The linear order `0 ≤ 1 ≤ ⋯ ≤ n-1`.
    pub fn chain(n: usize) -> Self {
        Preorder {
            below: (0..n)
                .map(|x| {
                    let mut s = PointSet::empty(n);
                    for z in 0..=x {
                        s.insert(z);
                    }
                    s
                })
                .collect(),
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n());
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn n(&self) -> usize {
        self.below.len()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.below[y].contains(x)
    }

    /// The closure of the point `x`: the down-set `{z : z ≤ x}`, which is
    /// the smallest closed set containing `x`.
    pub fn point_closure(&self, x: usize) -> Result<ClosedSet, PreorderError> {
        self.check_point(x)?;
        Ok(ClosedSet(self.below[x].clone()))
    }

    /// The minimal open neighborhood of `x`: the up-set `{u : x ≤ u}`.
    /// Its complement is down-closed, so the up-set is open.
    pub fn min_open_neighborhood(&self, x: usize) -> Result<PointSet, PreorderError> {
        self.check_point(x)?;
        let n = self.n();
        let mut up = PointSet::empty(n);
        for u in 0..n {
            if self.below[u].contains(x) {
                up.insert(u);
            }
        }
        Ok(up)
    }

    /// True iff `≤` is antisymmetric, i.e. the space is T0.
    pub fn is_t0(&self) -> bool {
        let n = self.n();
        for x in 0..n {
            for y in x + 1..n {
                if self.below[y].contains(x) && self.below[x].contains(y) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_down_closed(&self, s: &PointSet) -> bool {
        s.iter().all(|y| self.below[y].is_subset(s))
    }

    pub(crate) fn closure_row(&self, x: usize) -> &PointSet {
        &self.below[x]
    }

    /// Successor adjacency `x → y` for `x ≤ y`, `x ≠ y`.
    pub(crate) fn strict_up_adjacency(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut adj = alloc::vec![Vec::new(); n];
        for y in 0..n {
            for x in self.below[y].iter() {
                if x != y {
                    adj[x].push(y);
                }
            }
        }
        adj
    }

    /// Row-major bit encoding of the relation matrix, `leq[x][y]` at bit
    /// `x*n + y`. Requires `n <= 8`.
    pub fn encode(&self) -> u64 {
        let n = self.n();
        assert!(n <= 8);
        let mut code = 0u64;
        for x in 0..n {
            for y in 0..n {
                if self.leq(x, y) {
                    code |= 1 << (x * n + y);
                }
            }
        }
        code
    }

    fn check_point(&self, x: usize) -> Result<(), PreorderError> {
        if x < self.n() {
            Ok(())
        } else {
            Err(PreorderError::PointOutOfRange { point: x, n: self.n() })
        }
    }

    fn transitivity_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.n();
        for z in 0..n {
            for y in self.below[z].iter() {
                if !self.below[y].is_subset(&self.below[z]) {
                    let x = self.below[y].difference(&self.below[z]).iter().next().unwrap();
                    return Some((x, y, z));
                }
            }
        }
        None
    }
}

impl fmt::Debug for Preorder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Preorder(n={}, below=", self.n())?;
        f.debug_list().entries(self.below.iter()).finish()?;
        write!(f, ")")
    }
}

impl FiniteTopology {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Closed sets in ascending bitset order.
    pub fn closed_family(&self) -> &[PointSet] {
        &self.closed_family
    }

    pub fn contains(&self, s: &PointSet) -> bool {
        self.closed_family.binary_search(s).is_ok()
    }
}

/// Validates a raw subset family against the topology axioms: it must
/// contain the empty and full sets and be closed under pairwise union and
/// intersection. On a finite carrier pairwise intersection closure gives
/// closure under arbitrary intersections, so the space is Alexandrov.
///
/// Violations report the lexicographically first offending pair in
/// ascending bitset order.
pub fn validate_topology(family: &[PointSet], n: usize) -> Result<FiniteTopology, TopologyError> {
    let mut sets: Vec<PointSet> = family.to_vec();
    for s in &sets {
        assert_eq!(s.width(), n, "subset width must match the point count");
    }
    sets.sort();
    sets.dedup();

    if sets.first() != Some(&PointSet::empty(n)) {
        return Err(TopologyError::MissingEmptySet);
    }
    if sets.last() != Some(&PointSet::full(n)) {
        return Err(TopologyError::MissingFullSet);
    }
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            let (b, c) = (&sets[i], &sets[j]);
            if sets.binary_search(&b.union(c)).is_err() {
                return Err(TopologyError::NotClosedUnderUnion(b.clone(), c.clone()));
            }
            if sets.binary_search(&b.intersection(c)).is_err() {
                return Err(TopologyError::NotClosedUnderIntersection(b.clone(), c.clone()));
            }
        }
    }
    Ok(FiniteTopology { n, closed_family: sets })
}

/// The specialisation preorder of a topology: `x ≤ y` iff `x` belongs to
/// every closed set containing `y`, i.e. `x ∈ cl{y}`.
pub fn specialisation_preorder(t: &FiniteTopology) -> Preorder {
    let n = t.n();
    let below: Vec<PointSet> = (0..n)
        .map(|y| {
            let mut cl = PointSet::full(n);
            for c in t.closed_family() {
                if c.contains(y) {
                    cl = cl.intersection(c);
                }
            }
            cl
        })
        .collect();
    // each cl{y} is an intersection of closed sets, hence closed, hence
    // the rows are transitive; reflexivity needs the full set in the family
    Preorder::from_below_unchecked(below)
}

/// The Alexandrov topology of a preorder: the closed sets are exactly the
/// down-closed subsets.
pub fn alexandrov_topology(p: &Preorder) -> FiniteTopology {
    let n = p.n();
    let mut closed_family = Vec::new();
    let mut s = PointSet::empty(n);
    loop {
        if p.is_down_closed(&s) {
            closed_family.push(s.clone());
        }
        if !s.increment() {
            break;
        }
    }
    FiniteTopology { n, closed_family }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Two points a=0, b=1 with closed sets {}, {a}, {a,b}; so a ≤ b.
    fn sierpinski() -> Preorder {
        Preorder::from_pairs(2, &[(0, 1)]).unwrap()
    }

    fn family(n: usize, masks: &[u64]) -> Vec<PointSet> {
        masks.iter().map(|&m| PointSet::from_mask(n, m)).collect()
    }

    #[test]
    fn validate_sierpinski() {
        let t = validate_topology(&family(2, &[0b00, 0b01, 0b11]), 2).unwrap();
        assert_eq!(t.closed_family().len(), 3);
    }

    #[test]
    fn validate_missing_full_set() {
        let err = validate_topology(&family(2, &[0b00, 0b01, 0b10]), 2).unwrap_err();
        // {a} ∪ {b} = {a,b} is also absent, but the full-set axiom fires first
        assert_eq!(err, TopologyError::MissingFullSet);
    }

    #[test]
    fn validate_discrete_power_set() {
        let t = validate_topology(&family(2, &[0b00, 0b01, 0b10, 0b11]), 2).unwrap();
        assert_eq!(t.closed_family().len(), 4);
    }

    #[test]
    fn validate_missing_empty_set() {
        let err = validate_topology(&family(2, &[0b01, 0b11]), 2).unwrap_err();
        assert_eq!(err, TopologyError::MissingEmptySet);
    }

    #[test]
    fn validate_union_violation() {
        // {}, {a}, {b}, {a,b,c}, {a,b,c} missing {a,b}
        let err = validate_topology(&family(3, &[0b000, 0b001, 0b010, 0b111]), 3).unwrap_err();
        assert_eq!(
            err,
            TopologyError::NotClosedUnderUnion(PointSet::from_mask(3, 0b001), PointSet::from_mask(3, 0b010))
        );
    }

    #[test]
    fn validate_intersection_violation() {
        // {}, {a,b}, {b,c}, {a,b,c}: {a,b} ∩ {b,c} = {b} missing
        let err = validate_topology(&family(3, &[0b000, 0b011, 0b110, 0b111]), 3).unwrap_err();
        assert_eq!(
            err,
            TopologyError::NotClosedUnderIntersection(
                PointSet::from_mask(3, 0b011),
                PointSet::from_mask(3, 0b110)
            )
        );
    }

    #[test]
    fn specialisation_of_sierpinski() {
        let t = validate_topology(&family(2, &[0b00, 0b01, 0b11]), 2).unwrap();
        let p = specialisation_preorder(&t);
        assert!(p.leq(0, 1));
        assert!(!p.leq(1, 0));
    }

    #[test]
    fn specialisation_of_discrete_is_identity() {
        let t = alexandrov_topology(&Preorder::discrete(3));
        let p = specialisation_preorder(&t);
        assert_eq!(p, Preorder::discrete(3));
    }

    #[test]
    fn specialisation_of_indiscrete_is_total() {
        let t = validate_topology(&family(3, &[0b000, 0b111]), 3).unwrap();
        let p = specialisation_preorder(&t);
        assert_eq!(p, Preorder::indiscrete(3));
    }

    #[test]
    fn alexandrov_topology_of_chain() {
        let t = alexandrov_topology(&sierpinski());
        assert_eq!(t.closed_family(), &family(2, &[0b00, 0b01, 0b11])[..]);
    }

    #[test]
    fn alexandrov_topology_of_antichain_is_power_set() {
        let t = alexandrov_topology(&Preorder::discrete(2));
        assert_eq!(t.closed_family().len(), 4);
    }

    #[test]
    fn point_closure_examples() {
        let s = sierpinski();
        assert_eq!(s.point_closure(1).unwrap().points().to_mask(), 0b11);
        assert_eq!(Preorder::discrete(3).point_closure(2).unwrap().points().to_mask(), 0b100);
        assert_eq!(Preorder::indiscrete(3).point_closure(0).unwrap().points().to_mask(), 0b111);
        assert!(matches!(
            s.point_closure(5),
            Err(PreorderError::PointOutOfRange { point: 5, n: 2 })
        ));
    }

    #[test]
    fn min_open_neighborhood_examples() {
        let s = sierpinski();
        assert_eq!(s.min_open_neighborhood(0).unwrap().to_mask(), 0b11);
        assert_eq!(s.min_open_neighborhood(1).unwrap().to_mask(), 0b10);
        assert_eq!(Preorder::discrete(3).min_open_neighborhood(1).unwrap().to_mask(), 0b010);
    }

    #[test]
    fn t0_examples() {
        assert!(sierpinski().is_t0());
        assert!(!Preorder::indiscrete(2).is_t0());
        assert!(Preorder::discrete(0).is_t0());
    }

    #[test]
    fn from_pairs_rejects_non_transitive() {
        let err = Preorder::from_pairs(3, &[(0, 1), (1, 2)]).unwrap_err();
        assert_eq!(err, PreorderError::NotTransitive { x: 0, y: 1, z: 2 });
    }

    #[test]
    fn from_pairs_closed_takes_closure() {
        let p = Preorder::from_pairs_closed(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p, Preorder::chain(3));
    }

    #[test]
    fn from_pairs_out_of_range() {
        let err = Preorder::from_pairs(2, &[(0, 3)]).unwrap_err();
        assert_eq!(err, PreorderError::PointOutOfRange { point: 3, n: 2 });
    }

    #[test]
    fn closed_set_validation() {
        let s = sierpinski();
        assert!(ClosedSet::new(&s, PointSet::from_mask(2, 0b01)).is_ok());
        assert_eq!(
            ClosedSet::new(&s, PointSet::from_mask(2, 0b10)).unwrap_err(),
            PreorderError::NotClosed
        );
    }
}
