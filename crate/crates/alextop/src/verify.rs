//! The exhaustive verification suite: every property the library claims,
//! instantiated over every preorder on carriers up to a requested size.

use alextop_core::{
    alexandrov_topology, check_closure_bijection, check_order_reflection, enumerate_preorders,
    irreducible_closed_sets, is_irreducible, kolmogorov_quotient, point_closures,
    specialisation_preorder, verify_theorem, EnumerateError, Preorder,
};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct VerifyOutcome {
    pub n: usize,
    pub spaces: u64,
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("{0}")]
    Enumerate(EnumerateError),
    #[error("property \"{property}\" failed on space #{space_id} at n={n}: {space:?}")]
    PropertyFailed { n: usize, space_id: u64, property: &'static str, space: Preorder },
}

/// Runs every check on every preorder with `0..=max_n` points. Returns
/// per-carrier space counts, or the first failing space. A failure here
/// is an implementation bug, not a property of the space.
pub fn verify_up_to(max_n: usize) -> Result<Vec<VerifyOutcome>, VerifyError> {
    if max_n > alextop_core::enumerate::MAX_CENSUS_POINTS {
        return Err(VerifyError::Enumerate(EnumerateError::CarrierTooLarge {
            n: max_n,
            max: alextop_core::enumerate::MAX_CENSUS_POINTS,
        }));
    }
    let mut outcomes = Vec::new();
    for n in 0..=max_n {
        let stream = enumerate_preorders(n).map_err(VerifyError::Enumerate)?;
        let mut spaces = 0u64;
        for (space_id, p) in stream.enumerate() {
            let space_id = space_id as u64;
            let fail = |property| VerifyError::PropertyFailed { n, space_id, property, space: p.clone() };

            if !verify_theorem(&p).agree {
                return Err(fail("theorem: krull = height = quotient height"));
            }
            for x in 0..p.n() {
                let cl = p.point_closure(x).expect("point in range");
                if !is_irreducible(&p, &cl).expect("closure is closed").verdict {
                    return Err(fail("lemma 1: point closures are irreducible"));
                }
            }
            if irreducible_closed_sets(&p) != point_closures(&p) {
                return Err(fail("lemma 2: irreducibles are exactly point closures"));
            }
            let q = kolmogorov_quotient(&p);
            if !check_order_reflection(&p, &q) {
                return Err(fail("order reflection through the quotient map"));
            }
            if !check_closure_bijection(&p, &q) {
                return Err(fail("lemma 3: closure bijection through the quotient map"));
            }
            let t = alexandrov_topology(&p);
            if specialisation_preorder(&t) != p {
                return Err(fail("roundtrip: preorder -> topology -> preorder"));
            }
            if alexandrov_topology(&specialisation_preorder(&t)) != t {
                return Err(fail("roundtrip: topology -> preorder -> topology"));
            }
            spaces += 1;
        }
        outcomes.push(VerifyOutcome { n, spaces });
    }
    Ok(outcomes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verify_up_to_three() {
        let outcomes = verify_up_to(3).unwrap();
        let counts: Vec<u64> = outcomes.iter().map(|o| o.spaces).collect();
        assert_eq!(counts, vec![1, 1, 4, 29]);
    }

    #[test]
    fn verify_rejects_oversized_carrier() {
        assert!(matches!(
            verify_up_to(9),
            Err(VerifyError::Enumerate(EnumerateError::CarrierTooLarge { n: 9, .. }))
        ));
    }
}
