//! Strongly connected components, condensation, and DAG longest path.
//!
//! Tarjan's algorithm, implemented iteratively so that 10^5-point inputs
//! do not overflow the call stack. Everything here is linear in points
//! plus arcs.

use alloc::vec;
use alloc::vec::Vec;

/// Components of the digraph given as adjacency lists. Components are
/// emitted in reverse topological order of the condensation (every arc
/// between distinct components points to an earlier component).
pub fn tarjan_scc(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    const UNVISITED: usize = usize::MAX;
    let mut index = vec![UNVISITED; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut comps: Vec<Vec<usize>> = Vec::new();
    let mut next_index = 0usize;

    // (vertex, next child position) frames replace recursion
    let mut frames: Vec<(usize, usize)> = Vec::new();

    for start in 0..n {
        if index[start] != UNVISITED {
            continue;
        }
        frames.push((start, 0));
        index[start] = next_index;
        low[start] = next_index;
        next_index += 1;
        stack.push(start);
        on_stack[start] = true;

        while let Some(&mut (v, ref mut child)) = frames.last_mut() {
            if *child < adj[v].len() {
                let w = adj[v][*child];
                *child += 1;
                if index[w] == UNVISITED {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    frames.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                frames.pop();
                if let Some(&mut (parent, _)) = frames.last_mut() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().expect("scc stack underflow");
                        on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comps.push(comp);
                }
            }
        }
    }
    comps
}

/// The condensation of a digraph: one node per strongly connected
/// component, arcs deduplicated, self-loops dropped.
pub struct Condensation {
    /// Component id of each original vertex.
    pub comp_of: Vec<usize>,
    /// Members of each component.
    pub comps: Vec<Vec<usize>>,
    /// Component adjacency, sorted and deduplicated.
    pub dag: Vec<Vec<usize>>,
    /// Component ids in topological order (arcs go forward).
    pub topo: Vec<usize>,
}

pub fn condensation(adj: &[Vec<usize>]) -> Condensation {
    let comps = tarjan_scc(adj);
    let ncomp = comps.len();
    let mut comp_of = vec![usize::MAX; adj.len()];
    for (cid, comp) in comps.iter().enumerate() {
        for &v in comp {
            comp_of[v] = cid;
        }
    }
    let mut dag = vec![Vec::new(); ncomp];
    for u in 0..adj.len() {
        let cu = comp_of[u];
        for &v in &adj[u] {
            let cv = comp_of[v];
            if cu != cv {
                dag[cu].push(cv);
            }
        }
    }
    for out in &mut dag {
        out.sort_unstable();
        out.dedup();
    }
    // Tarjan emits components in reverse topological order
    let topo: Vec<usize> = (0..ncomp).rev().collect();
    Condensation { comp_of, comps, dag, topo }
}

/// Longest path in the condensation of the digraph, counted in arcs
/// between components. Returns -1 for the empty graph, 0 when every
/// vertex sits alone or inside a single component.
pub fn condensation_longest_path(adj: &[Vec<usize>]) -> i64 {
    if adj.is_empty() {
        return -1;
    }
    let c = condensation(adj);
    longest_path_arcs(&c.dag, &c.topo)
}

/// Longest path (in arcs) over a DAG given a topological order.
pub fn longest_path_arcs(dag: &[Vec<usize>], topo: &[usize]) -> i64 {
    if dag.is_empty() {
        return -1;
    }
    let mut dist = vec![0i64; dag.len()];
    let mut best = 0i64;
    // walk the order backwards so successors are finished first
    for &u in topo.iter().rev() {
        for &v in &dag[u] {
            dist[u] = dist[u].max(dist[v] + 1);
        }
        best = best.max(dist[u]);
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn scc_of_cycle_is_single_component() {
        let adj = vec![vec![1], vec![2], vec![0]];
        let comps = tarjan_scc(&adj);
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].len(), 3);
    }

    #[test]
    fn scc_components_in_reverse_topological_order() {
        // 0 -> 1 -> 2, no cycles: sinks come out first
        let adj = vec![vec![1], vec![2], vec![]];
        let comps = tarjan_scc(&adj);
        assert_eq!(comps, vec![vec![2], vec![1], vec![0]]);
    }

    #[test]
    fn longest_path_chain_with_cycle() {
        // {0,1} cycle below 2 below 3: two condensation arcs
        let adj = vec![vec![1], vec![0, 2], vec![3], vec![]];
        assert_eq!(condensation_longest_path(&adj), 2);
    }

    #[test]
    fn longest_path_empty_and_trivial() {
        assert_eq!(condensation_longest_path(&[]), -1);
        assert_eq!(condensation_longest_path(&[vec![]]), 0);
    }

    #[test]
    fn deep_graph_does_not_overflow_stack() {
        let n = 200_000;
        let adj: Vec<Vec<usize>> = (0..n).map(|v| if v + 1 < n { vec![v + 1] } else { vec![] }).collect();
        assert_eq!(condensation_longest_path(&adj), n as i64 - 1);
    }
}
