//! DOT export of a Kolmogorov quotient's Hasse diagram.

use alextop_core::KolmogorovQuotient;

use crate::format::point_display;

/// The transitive reduction of the quotient order as a DOT digraph, one
/// node per class labeled with its member points, arcs from lower to
/// upper covers.
pub fn quotient_hasse_dot(q: &KolmogorovQuotient, labels: Option<&[String]>) -> String {
    let n = q.poset.n();
    let mut out = String::from("digraph quotient {\n  rankdir=BT;\n");
    for (cid, members) in q.class_members.iter().enumerate() {
        let names: Vec<String> = members.iter().map(|&x| point_display(x, labels)).collect();
        out.push_str(&format!("  c{} [label=\"{{{}}}\"];\n", cid, names.join(",")));
    }
    for c in 0..n {
        for d in 0..n {
            if is_cover(q, c, d) {
                out.push_str(&format!("  c{} -> c{};\n", c, d));
            }
        }
    }
    out.push_str("}\n");
    out
}

/// `d` covers `c`: strictly above with nothing strictly between.
fn is_cover(q: &KolmogorovQuotient, c: usize, d: usize) -> bool {
    let lt = |a: usize, b: usize| a != b && q.poset.leq(a, b);
    lt(c, d) && !(0..q.poset.n()).any(|e| lt(c, e) && lt(e, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alextop_core::{kolmogorov_quotient, Preorder};

    #[test]
    fn chain_hasse_has_only_cover_arcs() {
        let q = kolmogorov_quotient(&Preorder::chain(3));
        let dot = quotient_hasse_dot(&q, None);
        assert!(dot.contains("c0 -> c1;"));
        assert!(dot.contains("c1 -> c2;"));
        assert!(!dot.contains("c0 -> c2;"));
    }

    #[test]
    fn mutual_pair_class_is_one_node() {
        let p = Preorder::from_pairs_closed(3, &[(0, 1), (1, 0), (0, 2)]).unwrap()
            .with_labels(vec!["x".into(), "y".into(), "z".into()]);
        let labels: Vec<String> = p.labels().unwrap().to_vec();
        let q = kolmogorov_quotient(&p);
        let dot = quotient_hasse_dot(&q, Some(&labels));
        assert!(dot.contains("c0 [label=\"{x,y}\"];"));
        assert!(dot.contains("c1 [label=\"{z}\"];"));
        assert!(dot.contains("c0 -> c1;"));
    }
}
