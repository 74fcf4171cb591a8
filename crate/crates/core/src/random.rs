//! Random cubic graphs from the pairing model, and random permutations for
//! cycle permutation graphs.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::cyperm::CpgSpec;
use crate::error::{invalid, Result};
use crate::graph::CubicGraph;

/// Uniform over simple cubic graphs on `n` labelled vertices: random perfect
/// matchings of `3n` points, rejecting loops and multiple edges.
pub fn random_cubic<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<CubicGraph> {
    if n < 4 || n % 2 == 1 {
        return Err(invalid(format!("no cubic graph on {n} vertices")));
    }
    let mut points: Vec<usize> = (0..3 * n).collect();
    loop {
        points.shuffle(rng);
        let mut edges: Vec<(usize, usize)> = points
            .chunks(2)
            .map(|p| {
                let (a, b) = (p[0] / 3, p[1] / 3);
                (a.min(b), a.max(b))
            })
            .collect();
        if edges.iter().any(|&(a, b)| a == b) {
            continue;
        }
        edges.sort_unstable();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        return CubicGraph::from_edges(n, edges);
    }
}

/// Uniform random relabelling.
pub fn random_relabelling<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// A uniformly random permutation spec on `n >= 3` points.
pub fn random_cpg_spec<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<CpgSpec> {
    CpgSpec::new(random_relabelling(n, rng))
}
