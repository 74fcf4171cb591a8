//! Simple and cubic graph representations.
//!
//! Vertices are dense `0..n` indices. Edges are stored once as `(u, v)` with
//! `u < v`, sorted, and indexed at construction; colourings throughout the
//! crate refer to these indices.

use std::collections::VecDeque;
use std::ops::Deref;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    /// Graph on `n` vertices without edges.
    pub fn empty(n: usize) -> Self {
        Self { adj: vec![Vec::new(); n], edges: Vec::new() }
    }

    /// Builds a graph from an edge list. Loops, repeated edges and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge ({u}, {v}) out of range for {n} vertices")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!("repeated edge ({}, {})", w[0].0, w[0].1)));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &list {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(Self { adj, edges: list })
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> SimpleGraph {
        debug_assert_eq!(perm.len(), self.order());
        SimpleGraph::from_edges(self.order(), self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
            .expect("relabelling by a permutation preserves simplicity")
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> SimpleGraph {
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        SimpleGraph::from_edges(vertices.len(), edges).expect("induced subgraph of a simple graph is simple")
    }

    /// Connected components of the subgraph induced by `mask`, each sorted,
    /// listed in order of their smallest vertex.
    pub fn induced_components(&self, mask: &[bool]) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if !mask[s] || seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &self.adj[v] {
                    if mask[w] && !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        self.induced_components(&vec![true; self.order()])
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.components().len() == 1
    }

    /// BFS distances from `s`; unreachable vertices get `usize::MAX`.
    pub fn distances_from(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.order()];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Diameter, or `None` for a disconnected graph.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for s in 0..self.order() {
            let d = self.distances_from(s);
            let far = *d.iter().max().unwrap_or(&0);
            if far == usize::MAX {
                return None;
            }
            best = best.max(far);
        }
        Some(best)
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.order();
        let mut best: Option<usize> = None;
        for s in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    } else if parent[v] != w {
                        let len = dist[v] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// A proper 2-colouring of the vertices, if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.order();
        let mut side = vec![None; n];
        for s in 0..n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                let sv = side[v].unwrap();
                for &w in &self.adj[v] {
                    match side[w] {
                        None => {
                            side[w] = Some(!sv);
                            stack.push(w);
                        }
                        Some(sw) if sw == sv => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap()).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> SimpleGraph {
        let off = self.order();
        let edges = self.edges.iter().copied().chain(other.edges.iter().map(|&(u, v)| (u + off, v + off)));
        SimpleGraph::from_edges(off + other.order(), edges).expect("disjoint union of simple graphs is simple")
    }
}

/// A simple 3-regular graph with per-vertex neighbour and incident-edge
/// tables for the hot search loops.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CubicGraph {
    graph: SimpleGraph,
    nbr: Vec<[usize; 3]>,
    inc: Vec<[usize; 3]>,
}

impl CubicGraph {
    pub fn new(graph: SimpleGraph) -> Result<Self> {
        for v in 0..graph.order() {
            if graph.degree(v) != 3 {
                return Err(Error::NotCubic { vertex: v, degree: graph.degree(v) });
            }
        }
        let mut nbr = vec![[0; 3]; graph.order()];
        let mut inc = vec![[0; 3]; graph.order()];
        for v in 0..graph.order() {
            for (slot, &w) in graph.neighbours(v).iter().enumerate() {
                nbr[v][slot] = w;
                inc[v][slot] = graph.edge_index(v, w).unwrap();
            }
        }
        Ok(Self { graph, nbr, inc })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::new(SimpleGraph::from_edges(n, edges)?)
    }

    pub fn as_simple(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn into_simple(self) -> SimpleGraph {
        self.graph
    }

    /// The three neighbours of `v`, ascending.
    #[inline]
    pub fn nbrs(&self, v: usize) -> &[usize; 3] {
        &self.nbr[v]
    }

    /// Edge indices incident with `v`, aligned with [`CubicGraph::nbrs`].
    #[inline]
    pub fn incident(&self, v: usize) -> &[usize; 3] {
        &self.inc[v]
    }

    pub fn relabel(&self, perm: &[usize]) -> CubicGraph {
        CubicGraph::new(self.graph.relabel(perm)).unwrap()
    }
}

impl Deref for CubicGraph {
    type Target = SimpleGraph;

    fn deref(&self) -> &SimpleGraph {
        &self.graph
    }
}

impl TryFrom<SimpleGraph> for CubicGraph {
    type Error = Error;

    fn try_from(g: SimpleGraph) -> Result<Self> {
        CubicGraph::new(g)
    }
}

/// Standard small graphs used across tests and the CLI.
pub mod named {
    use super::CubicGraph;

    pub fn k4() -> CubicGraph {
        CubicGraph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    pub fn k33() -> CubicGraph {
        let edges = (0..3).flat_map(|a| (3..6).map(move |b| (a, b)));
        CubicGraph::from_edges(6, edges).unwrap()
    }

    /// Circular ladder `C_m x K_2` on `2m` vertices.
    pub fn prism(m: usize) -> CubicGraph {
        assert!(m >= 3);
        let mut edges = Vec::new();
        for i in 0..m {
            edges.push((i, (i + 1) % m));
            edges.push((m + i, m + (i + 1) % m));
            edges.push((i, m + i));
        }
        CubicGraph::from_edges(2 * m, edges).unwrap()
    }

    /// Cubic graph from LCF notation.
    pub fn lcf(shifts: &[isize], repeats: usize) -> CubicGraph {
        let n = shifts.len() * repeats;
        let mut edges = Vec::new();
        for i in 0..n {
            edges.push((i, (i + 1) % n));
            let j = (i as isize + shifts[i % shifts.len()]).rem_euclid(n as isize) as usize;
            if i < j {
                edges.push((i, j));
            }
        }
        CubicGraph::from_edges(n, edges).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn rejects_loops_and_repeats() {
        assert!(SimpleGraph::from_edges(3, [(0, 0)]).is_err());
        assert!(SimpleGraph::from_edges(3, [(0, 1), (1, 0)]).is_err());
        assert!(SimpleGraph::from_edges(3, [(0, 3)]).is_err());
    }

    #[test]
    fn edges_are_sorted_and_indexed() {
        let g = SimpleGraph::from_edges(4, [(3, 2), (1, 0), (2, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (2, 3)]);
        assert_eq!(g.edge_index(3, 2), Some(2));
        assert_eq!(g.edge_index(1, 3), None);
    }

    #[test]
    fn cubic_requires_degree_three() {
        let path = SimpleGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(matches!(CubicGraph::new(path), Err(Error::NotCubic { vertex: 0, degree: 1 })));
        let g = k4();
        for v in 0..4 {
            for (slot, &w) in g.nbrs(v).iter().enumerate() {
                assert_eq!(g.edge(g.incident(v)[slot]), (v.min(w), v.max(w)));
            }
        }
    }

    #[test]
    fn small_invariants() {
        assert_eq!(k4().girth(), Some(3));
        assert_eq!(k33().girth(), Some(4));
        assert!(k33().is_bipartite());
        assert!(!prism(3).is_bipartite());
        assert_eq!(prism(6).diameter(), Some(4));
        let heawood = lcf(&[5, -5], 7);
        assert_eq!(heawood.girth(), Some(6));
        assert_eq!(heawood.diameter(), Some(3));
    }
}
