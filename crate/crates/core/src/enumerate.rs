//! Isomorphism-free generation of cubic graphs.
//!
//! Connected graphs of order `n` are produced from smaller connected ones by
//! edge insertion: subdivide two distinct edges and join the two new
//! vertices. Both edges may come from one graph of order `n - 2`, or one
//! from each of two graphs whose orders sum to `n - 2` (which creates a
//! bridge). Graphs in which every edge reduction would create a parallel
//! edge are reached by replacing an edge of a graph of order `n - 4` with a
//! diamond. Candidates are deduplicated by canonical code; each class is
//! represented by its canonically labelled graph and the output is sorted by
//! code.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::canon::{canonical_form, CanonicalCode};
use crate::error::{invalid, Result};
use crate::graph::{named, CubicGraph, SimpleGraph};

pub const DEFAULT_CEILING: usize = 20;

/// Connected cubic graphs by order, grown on demand.
#[derive(Debug, Default, Clone)]
pub struct Catalogue {
    levels: Vec<Vec<CubicGraph>>,
}

impl Catalogue {
    pub fn new() -> Self {
        Self::default()
    }

    /// Connected cubic graphs of order `n` (even, `n <= 62`).
    pub fn connected(&mut self, n: usize) -> &[CubicGraph] {
        assert!(n.is_multiple_of(2) && n <= 62);
        while self.levels.len() <= n / 2 {
            let order = 2 * self.levels.len();
            let level = self.generate(order);
            log::debug!("generated {} connected cubic graphs of order {order}", level.len());
            self.levels.push(level);
        }
        &self.levels[n / 2]
    }

    fn generate(&self, n: usize) -> Vec<CubicGraph> {
        match n {
            0 | 2 => return Vec::new(),
            4 => return vec![canonical_cubic(&named::k4())],
            _ => {}
        }
        let mut jobs: Vec<Job> = self.levels[(n - 2) / 2].iter().map(Job::Within).collect();
        if n >= 8 {
            jobs.extend(self.levels[(n - 4) / 2].iter().map(Job::Diamond));
        }
        for a in (4..=(n - 2) / 2).step_by(2) {
            let b = n - 2 - a;
            let ga = &self.levels[a / 2];
            let gb = &self.levels[b / 2];
            for (i, x) in ga.iter().enumerate() {
                let start = if a == b { i } else { 0 };
                for y in &gb[start..] {
                    jobs.push(Job::Across(x, y));
                }
            }
        }
        let found: HashMap<CanonicalCode, CubicGraph> = jobs
            .par_iter()
            .fold(HashMap::new, |mut acc, job| {
                for cand in job.candidates() {
                    let form = canonical_form(&cand);
                    acc.entry(form.code.clone()).or_insert_with(|| CubicGraph::new(form.graph(&cand)).unwrap());
                }
                acc
            })
            .reduce(HashMap::new, |mut a, b| {
                if a.len() < b.len() {
                    return merge(b, a);
                }
                for (k, v) in b {
                    a.entry(k).or_insert(v);
                }
                a
            });
        let mut out: Vec<(CanonicalCode, CubicGraph)> = found.into_iter().collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out.into_iter().map(|(_, g)| g).collect()
    }
}

fn merge(mut a: HashMap<CanonicalCode, CubicGraph>, b: HashMap<CanonicalCode, CubicGraph>) -> HashMap<CanonicalCode, CubicGraph> {
    for (k, v) in b {
        a.entry(k).or_insert(v);
    }
    a
}

fn canonical_cubic(g: &CubicGraph) -> CubicGraph {
    CubicGraph::new(canonical_form(g).graph(g)).unwrap()
}

enum Job<'a> {
    /// Edge insertion on two distinct edges of one graph.
    Within(&'a CubicGraph),
    /// Edge insertion joining an edge of each graph (creates a bridge).
    Across(&'a CubicGraph, &'a CubicGraph),
    /// Replace one edge by a diamond (`K4` minus an edge).
    Diamond(&'a CubicGraph),
}

impl Job<'_> {
    fn candidates(&self) -> Vec<SimpleGraph> {
        match *self {
            Job::Within(g) => insertions(g, None),
            Job::Across(g, h) => insertions(g, Some(h)),
            Job::Diamond(g) => (0..g.size()).map(|e| insert_diamond(g, e)).collect(),
        }
    }
}

fn insert_diamond(g: &CubicGraph, e: usize) -> SimpleGraph {
    let n = g.order();
    let (u, v) = g.edge(e);
    let (d1, p, q, d2) = (n, n + 1, n + 2, n + 3);
    let list = g
        .edges()
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != e)
        .map(|(_, &x)| x)
        .chain([(u, d1), (d1, p), (d1, q), (p, q), (p, d2), (q, d2), (d2, v)]);
    SimpleGraph::from_edges(n + 4, list).expect("diamond insertion keeps the graph simple")
}

/// All edge insertions into `g` (two distinct edges) or across `g` and `h`.
fn insertions(g: &CubicGraph, h: Option<&CubicGraph>) -> Vec<SimpleGraph> {
    let mut out = Vec::new();
    match h {
        None => {
            let n = g.order();
            let m = g.size();
            for i in 0..m {
                for j in i + 1..m {
                    out.push(insert(n, g.edges(), i, j));
                }
            }
        }
        Some(h) => {
            let joined = g.disjoint_union(h);
            let n = joined.order();
            for i in 0..g.size() {
                for j in 0..h.size() {
                    let j2 = joined.edge_index(h.edge(j).0 + g.order(), h.edge(j).1 + g.order()).unwrap();
                    let i2 = joined.edge_index(g.edge(i).0, g.edge(i).1).unwrap();
                    out.push(insert(n, joined.edges(), i2, j2));
                }
            }
        }
    }
    out
}

fn insert(n: usize, edges: &[(usize, usize)], i: usize, j: usize) -> SimpleGraph {
    let (x, y) = (n, n + 1);
    let (a, b) = edges[i];
    let (c, d) = edges[j];
    let list = edges
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != i && k != j)
        .map(|(_, &e)| e)
        .chain([(a, x), (x, b), (c, y), (y, d), (x, y)]);
    SimpleGraph::from_edges(n + 2, list).expect("edge insertion keeps the graph simple")
}

/// One representative per isomorphism class of cubic graphs of order `n`,
/// sorted by canonical code.
pub fn enumerate_cubic(n: usize, connected_only: bool) -> Result<Vec<CubicGraph>> {
    enumerate_cubic_with_ceiling(n, connected_only, DEFAULT_CEILING)
}

pub fn enumerate_cubic_with_ceiling(n: usize, connected_only: bool, ceiling: usize) -> Result<Vec<CubicGraph>> {
    if n % 2 == 1 {
        return Err(invalid(format!("cubic graphs have even order, got {n}")));
    }
    if n > ceiling {
        return Err(invalid(format!("order {n} exceeds the enumeration ceiling {ceiling}")));
    }
    let mut cat = Catalogue::new();
    if connected_only {
        return Ok(cat.connected(n).to_vec());
    }
    cat.connected(n);
    let mut out: Vec<(CanonicalCode, CubicGraph)> = Vec::new();
    let mut parts = Vec::new();
    disconnected(&mut cat, n, 4, 0, &mut parts, &mut out);
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out.into_iter().map(|(_, g)| g).collect())
}

/// Multisets of connected components with non-decreasing (order, index).
fn disconnected(
    cat: &mut Catalogue,
    remaining: usize,
    min_order: usize,
    min_index: usize,
    parts: &mut Vec<CubicGraph>,
    out: &mut Vec<(CanonicalCode, CubicGraph)>,
) {
    if remaining == 0 {
        if parts.is_empty() {
            return;
        }
        let union = parts.iter().skip(1).fold(parts[0].as_simple().clone(), |acc, p| acc.disjoint_union(p));
        let form = canonical_form(&union);
        out.push((form.code.clone(), CubicGraph::new(form.graph(&union)).unwrap()));
        return;
    }
    let mut order = min_order;
    while order <= remaining {
        let level = cat.connected(order).to_vec();
        let start = if order == min_order { min_index } else { 0 };
        for (i, g) in level.iter().enumerate().skip(start) {
            parts.push(g.clone());
            disconnected(cat, remaining - order, order, i, parts, out);
            parts.pop();
        }
        order += 2;
    }
}
