//! The Kolmogorov quotient: collapse the mutual-relation classes
//! `x ∼ y ⟺ x ≤ y ∧ y ≤ x` to single points. The quotient is T0, the
//! projection reflects the order both ways, and point closures biject
//! between the space and its quotient.
//!
//! Classes are the strongly connected components of the relation digraph,
//! computed in linear time; this is what makes the fast height path
//! viable at 10^5-point scale.

use alloc::vec;
use alloc::vec::Vec;

use crate::scc::tarjan_scc;
use crate::set::PointSet;
use crate::space::Preorder;

/// The quotient poset together with the projection `pi` and the members
/// of each class. Class indices are assigned by smallest original point,
/// ascending, so quotient output is stable across runs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KolmogorovQuotient {
    pub poset: Preorder,
    pub pi: Vec<usize>,
    pub class_members: Vec<Vec<usize>>,
}

pub fn kolmogorov_quotient(p: &Preorder) -> KolmogorovQuotient {
    let n = p.n();
    let mut comps = tarjan_scc(&p.strict_up_adjacency());
    for comp in &mut comps {
        comp.sort_unstable();
    }
    comps.sort_by_key(|comp| comp[0]);

    let ncls = comps.len();
    let mut pi = vec![usize::MAX; n];
    for (cid, comp) in comps.iter().enumerate() {
        for &x in comp {
            pi[x] = cid;
        }
    }
    // class order from any representative pair; well defined because all
    // members of a class are mutually related
    let below = (0..ncls)
        .map(|d| {
            let mut s = PointSet::empty(ncls);
            for c in 0..ncls {
                if p.leq(comps[c][0], comps[d][0]) {
                    s.insert(c);
                }
            }
            s
        })
        .collect();
    let poset = Preorder::from_below_unchecked(below);
    debug_assert!(poset.is_t0());
    KolmogorovQuotient { poset, pi, class_members: comps }
}

/// The paper's order-reflection identity for the projection:
/// `x ≤ y ⟺ pi(x) ≤ pi(y)` for all pairs.
pub fn check_order_reflection(p: &Preorder, q: &KolmogorovQuotient) -> bool {
    let n = p.n();
    (0..n).all(|x| (0..n).all(|y| p.leq(x, y) == q.poset.leq(q.pi[x], q.pi[y])))
}

/// Checks the closure bijection induced by the projection:
/// the image of `cl{x}` is `cl{pi(x)}`, its preimage is `cl{x}` back,
/// and the closure families of the space and quotient correspond
/// one-to-one.
pub fn check_closure_bijection(p: &Preorder, q: &KolmogorovQuotient) -> bool {
    let n = p.n();
    let ncls = q.poset.n();
    let mut image_of_closure: Vec<Option<PointSet>> = vec![None; ncls];
    for x in 0..n {
        let cl_x = p.point_closure(x).expect("point in range").into_points();
        let cl_pix = q.poset.point_closure(q.pi[x]).expect("class in range").into_points();

        let mut image = PointSet::empty(ncls);
        for z in cl_x.iter() {
            image.insert(q.pi[z]);
        }
        if image != cl_pix {
            return false;
        }
        let mut preimage = PointSet::empty(n);
        for z in 0..n {
            if cl_pix.contains(q.pi[z]) {
                preimage.insert(z);
            }
        }
        if preimage != cl_x {
            return false;
        }
        // the same quotient closure must never arise from two distinct
        // original closures, and every class closure must be hit
        match &image_of_closure[q.pi[x]] {
            Some(prev) if *prev != cl_x => return false,
            _ => image_of_closure[q.pi[x]] = Some(cl_x),
        }
    }
    image_of_closure.iter().all(|slot| slot.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sierpinski() -> Preorder {
        Preorder::from_pairs(2, &[(0, 1)]).unwrap()
    }

    /// Points x=0, y=1 mutually related, both below z=2.
    fn mutual_pair_below_third() -> Preorder {
        Preorder::from_pairs_closed(3, &[(0, 1), (1, 0), (0, 2), (1, 2)]).unwrap()
    }

    #[test]
    fn indiscrete_collapses_to_a_point() {
        let q = kolmogorov_quotient(&Preorder::indiscrete(3));
        assert_eq!(q.poset.n(), 1);
        assert_eq!(q.pi, vec![0, 0, 0]);
        assert_eq!(q.class_members, vec![vec![0, 1, 2]]);
    }

    #[test]
    fn t0_input_gives_identity_quotient() {
        let p = sierpinski();
        let q = kolmogorov_quotient(&p);
        assert_eq!(q.poset, p);
        assert_eq!(q.pi, vec![0, 1]);
    }

    #[test]
    fn mutual_pair_condenses_to_two_class_chain() {
        let q = kolmogorov_quotient(&mutual_pair_below_third());
        assert_eq!(q.class_members, vec![vec![0, 1], vec![2]]);
        assert!(q.poset.leq(0, 1));
        assert!(!q.poset.leq(1, 0));
        assert!(q.poset.is_t0());
    }

    #[test]
    fn order_reflection_holds() {
        for p in [sierpinski(), Preorder::indiscrete(2), mutual_pair_below_third()] {
            let q = kolmogorov_quotient(&p);
            assert!(check_order_reflection(&p, &q));
        }
    }

    #[test]
    fn closure_bijection_holds() {
        for p in [sierpinski(), Preorder::indiscrete(3), mutual_pair_below_third()] {
            let q = kolmogorov_quotient(&p);
            assert!(check_closure_bijection(&p, &q));
        }
    }

    #[test]
    fn quotient_is_idempotent() {
        let p = mutual_pair_below_third();
        let q = kolmogorov_quotient(&p);
        let qq = kolmogorov_quotient(&q.poset);
        assert_eq!(qq.poset, q.poset);
        assert_eq!(qq.pi, vec![0, 1]);
    }
}
