//! Deterministic large-scale benchmark of the fast height path.
//!
//! Builds a pseudo-random preorder from a seed: a random DAG (arcs drawn
//! forward along a shuffled point order) plus a sprinkling of backward
//! arcs that inflate some strongly connected classes. The reflexive-
//! transitive closure is implicit, since height only depends on
//! reachability.

use std::time::{Duration, Instant};

use alextop_core::scc::condensation_longest_path;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Memory guard: adjacency lists at this scale stay within a few GiB.
pub const MAX_BENCH_POINTS: usize = 20_000_000;
pub const MAX_BENCH_ARCS: usize = 200_000_000;

#[derive(Debug, Clone, Copy)]
pub struct BenchSpec {
    pub points: usize,
    pub arcs: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct BenchReport {
    pub points: usize,
    pub arcs_requested: usize,
    pub arcs_generated: usize,
    pub mutual_arcs: usize,
    pub seed: u64,
    pub height: i64,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("benchmark size exceeds the resource guard ({points} points, {arcs} arcs; limits {MAX_BENCH_POINTS}, {MAX_BENCH_ARCS})")]
pub struct ResourceGuard {
    pub points: usize,
    pub arcs: usize,
}

#[derive(Debug)]
pub struct BenchGraph {
    pub adj: Vec<Vec<usize>>,
    pub forward_arcs: usize,
    pub mutual_arcs: usize,
}

/// The relation digraph for the given spec. Identical specs produce
/// identical graphs.
pub fn generate(spec: &BenchSpec) -> Result<BenchGraph, ResourceGuard> {
    if spec.points > MAX_BENCH_POINTS || spec.arcs > MAX_BENCH_ARCS {
        return Err(ResourceGuard { points: spec.points, arcs: spec.arcs });
    }
    let n = spec.points;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut g = BenchGraph { adj: vec![Vec::new(); n], forward_arcs: 0, mutual_arcs: 0 };
    if n < 2 {
        return Ok(g);
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    for _ in 0..spec.arcs {
        let i = rng.random_range(0..n);
        let j = rng.random_range(0..n);
        if i != j {
            let (lo, hi) = (i.min(j), i.max(j));
            g.adj[perm[lo]].push(perm[hi]);
            g.forward_arcs += 1;
        }
    }
    // mutual-class inflation: one backward arc per 50 points
    for _ in 0..n / 50 {
        let i = rng.random_range(0..n);
        let j = rng.random_range(0..n);
        if i != j {
            let (lo, hi) = (i.min(j), i.max(j));
            g.adj[perm[hi]].push(perm[lo]);
            g.mutual_arcs += 1;
        }
    }
    Ok(g)
}

/// Generates the graph and times the height computation alone.
pub fn run(spec: &BenchSpec) -> Result<(BenchReport, Duration), ResourceGuard> {
    let g = generate(spec)?;
    let start = Instant::now();
    let height = condensation_longest_path(&g.adj);
    let elapsed = start.elapsed();
    let report = BenchReport {
        points: spec.points,
        arcs_requested: spec.arcs,
        arcs_generated: g.forward_arcs + g.mutual_arcs,
        mutual_arcs: g.mutual_arcs,
        seed: spec.seed,
        height,
    };
    Ok((report, elapsed))
}

impl std::fmt::Display for BenchReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "points={} arcs={} seed={} height={}",
            self.points, self.arcs_generated, self.seed, self.height
        )
    }
}
