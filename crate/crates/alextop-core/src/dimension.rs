//! Krull dimension (brute force over chains of irreducible closed sets),
//! height (condensation plus DAG longest path), and the cross-check that
//! both, and the Kolmogorov quotient's height, agree.
//!
//! The two routes are deliberately independent: the brute-force path
//! works on the strict-inclusion DAG of the irreducible closed sets
//! produced by the definitional oracle, the fast path never looks at a
//! closed set at all.

use alloc::vec;
use alloc::vec::Vec;

use crate::irreducible::irreducible_closed_sets;
use crate::quotient::kolmogorov_quotient;
use crate::scc::condensation_longest_path;
use crate::space::{ClosedSet, Preorder};

/// The three dimension numbers of one space and whether they agree.
/// `agree` is false only when the implementation is wrong; it is checked
/// exhaustively over small carriers in the test suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionReport {
    pub krull_bruteforce: i64,
    pub height_fast: i64,
    pub quotient_height: i64,
    pub agree: bool,
}

/// Krull dimension by the definition: the longest `n` such that a chain
/// `X_0 ⊊ X_1 ⊊ ⋯ ⊊ X_n` of non-empty irreducible closed sets exists;
/// `-1` on the empty carrier.
///
/// Longest-path values are memoised on the strict-inclusion DAG instead
/// of enumerating chains. Ascending bitset order is already a topological
/// order, since a proper subset has a strictly smaller bitset value.
pub fn krull_dimension_bruteforce(p: &Preorder) -> i64 {
    let irr = irreducible_closed_sets(p);
    if irr.is_empty() {
        return -1;
    }
    let mut dist = vec![0i64; irr.len()];
    let mut best = 0i64;
    for i in 0..irr.len() {
        for j in 0..i {
            if irr[j].points().is_proper_subset(irr[i].points()) {
                dist[i] = dist[i].max(dist[j] + 1);
            }
        }
        best = best.max(dist[i]);
    }
    best
}

/// A longest strict chain of irreducible closed sets realising the
/// brute-force Krull dimension, smallest bitsets first among ties.
/// Empty exactly on the empty carrier.
pub fn longest_irreducible_chain(p: &Preorder) -> Vec<ClosedSet> {
    let irr = irreducible_closed_sets(p);
    if irr.is_empty() {
        return Vec::new();
    }
    let mut dist = vec![0i64; irr.len()];
    let mut pred = vec![usize::MAX; irr.len()];
    for i in 0..irr.len() {
        for j in 0..i {
            if irr[j].points().is_proper_subset(irr[i].points()) && dist[j] + 1 > dist[i] {
                dist[i] = dist[j] + 1;
                pred[i] = j;
            }
        }
    }
    // smallest endpoint achieving the maximum, then walk predecessors
    let mut end = 0;
    for i in 0..irr.len() {
        if dist[i] > dist[end] {
            end = i;
        }
    }
    let mut chain = Vec::new();
    let mut i = end;
    loop {
        chain.push(irr[i].clone());
        if pred[i] == usize::MAX {
            break;
        }
        i = pred[i];
    }
    chain.reverse();
    chain
}

/// Height by the order-theoretic route: the longest `n` admitting points
/// `x_0, …, x_n` with `x_i ≤ x_{i+1}` and not `x_{i+1} ≤ x_i`, which is
/// the longest path in the condensation of the relation digraph. `-1` on
/// the empty carrier; linear in points plus relation pairs.
pub fn height(p: &Preorder) -> i64 {
    condensation_longest_path(&p.strict_up_adjacency())
}

/// Runs both dimension routes plus the height of the Kolmogorov quotient
/// and reports whether all three coincide.
pub fn verify_theorem(p: &Preorder) -> DimensionReport {
    let krull_bruteforce = krull_dimension_bruteforce(p);
    let height_fast = height(p);
    let quotient_height = height(&kolmogorov_quotient(p).poset);
    DimensionReport {
        krull_bruteforce,
        height_fast,
        quotient_height,
        agree: krull_bruteforce == height_fast && height_fast == quotient_height,
    }
}
