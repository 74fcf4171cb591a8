//! Canonical labelling by partition refinement and individualisation.
//!
//! The search refines an ordered vertex partition to an equitable one,
//! individualises a vertex of the first smallest non-trivial cell and
//! recurses. Each discrete leaf yields a relabelled adjacency matrix; the
//! lexicographically smallest one is the canonical form. Automorphisms found
//! at equal leaves prune sibling branches lying in the same orbit of the
//! pointwise stabiliser of the current path.

use std::fmt;

use crate::graph::SimpleGraph;
use crate::graph6::write_graph6;

/// Byte string identifying an isomorphism class: the graph6 encoding of the
/// canonically relabelled graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.as_str())
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug)]
pub struct CanonicalForm {
    pub code: CanonicalCode,
    /// `labelling[v]` is the canonical label of vertex `v`.
    pub labelling: Vec<usize>,
}

impl CanonicalForm {
    pub fn graph(&self, g: &SimpleGraph) -> SimpleGraph {
        g.relabel(&self.labelling)
    }
}

pub fn canonical_form(g: &SimpleGraph) -> CanonicalForm {
    let n = g.order();
    assert!(n <= 64, "canonical labelling supports at most 64 vertices");
    if n == 0 {
        return CanonicalForm { code: CanonicalCode(write_graph6(g).into_bytes()), labelling: Vec::new() };
    }
    let mut search = Search::new(g);
    let root = search.initial_partition();
    search.descend(root, &mut Vec::new());
    let (_, labelling) = search.best.expect("at least one leaf is reached");
    let code = CanonicalCode(write_graph6(&g.relabel(&labelling)).into_bytes());
    CanonicalForm { code, labelling }
}

pub fn canonical_code(g: &SimpleGraph) -> CanonicalCode {
    canonical_form(g).code
}

/// An isomorphism `g -> h` as a vertex map, if one exists.
pub fn isomorphism(g: &SimpleGraph, h: &SimpleGraph) -> Option<Vec<usize>> {
    if g.order() != h.order() || g.size() != h.size() {
        return None;
    }
    let cg = canonical_form(g);
    let ch = canonical_form(h);
    if cg.code != ch.code {
        return None;
    }
    let mut inv_h = vec![0; h.order()];
    for (v, &l) in ch.labelling.iter().enumerate() {
        inv_h[l] = v;
    }
    Some(cg.labelling.iter().map(|&l| inv_h[l]).collect())
}

pub fn are_isomorphic(g: &SimpleGraph, h: &SimpleGraph) -> bool {
    g.order() == h.order() && g.size() == h.size() && canonical_code(g) == canonical_code(h)
}

type Partition = Vec<Vec<usize>>;

struct Search<'a> {
    g: &'a SimpleGraph,
    n: usize,
    max_deg: usize,
    adj: Vec<u64>,
    best: Option<(Vec<u64>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
    keys: Vec<u16>,
    cell_of: Vec<u16>,
}

impl<'a> Search<'a> {
    fn new(g: &'a SimpleGraph) -> Self {
        let n = g.order();
        let adj = (0..n).map(|v| g.neighbours(v).iter().fold(0u64, |m, &w| m | 1 << w)).collect();
        let max_deg = (0..n).map(|v| g.degree(v)).max().unwrap_or(0);
        Self {
            g,
            n,
            max_deg,
            adj,
            best: None,
            automorphisms: Vec::new(),
            keys: vec![0; n * max_deg.max(1)],
            cell_of: vec![0; n],
        }
    }

    /// Cells ordered by (degree, triangles, 4-cycles through the vertex).
    fn initial_partition(&mut self) -> Partition {
        let mut inv: Vec<(usize, u32, u32, usize)> = (0..self.n)
            .map(|v| {
                let nv = self.adj[v];
                let tri: u32 = self.g.neighbours(v).iter().map(|&w| (self.adj[w] & nv).count_ones()).sum::<u32>() / 2;
                let sq: u32 = (0..self.n)
                    .filter(|&w| w != v)
                    .map(|w| {
                        let c = (self.adj[w] & nv).count_ones();
                        c * c.saturating_sub(1) / 2
                    })
                    .sum();
                (self.g.degree(v), tri, sq, v)
            })
            .collect();
        inv.sort_unstable();
        let mut cells: Partition = Vec::new();
        for (i, item) in inv.iter().enumerate() {
            if i == 0 || (inv[i - 1].0, inv[i - 1].1, inv[i - 1].2) != (item.0, item.1, item.2) {
                cells.push(Vec::new());
            }
            cells.last_mut().unwrap().push(item.3);
        }
        self.refine(cells)
    }

    fn refine(&mut self, mut cells: Partition) -> Partition {
        let d = self.max_deg.max(1);
        let keys = &mut self.keys;
        let cell_of = &mut self.cell_of;
        loop {
            if cells.len() == self.n {
                return cells;
            }
            for (i, c) in cells.iter().enumerate() {
                for &v in c {
                    cell_of[v] = i as u16;
                }
            }
            for v in 0..self.n {
                let slot = &mut keys[v * d..(v + 1) * d];
                slot.fill(u16::MAX);
                for (k, &w) in self.g.neighbours(v).iter().enumerate() {
                    slot[k] = cell_of[w];
                }
                slot.sort_unstable();
            }
            let mut next: Partition = Vec::with_capacity(cells.len() + 4);
            let mut split = false;
            for c in cells {
                if c.len() == 1 {
                    next.push(c);
                    continue;
                }
                let mut c = c;
                c.sort_by(|&a, &b| keys[a * d..(a + 1) * d].cmp(&keys[b * d..(b + 1) * d]));
                let mut start = 0;
                for i in 1..=c.len() {
                    if i == c.len() || keys[c[i] * d..(c[i] + 1) * d] != keys[c[start] * d..(c[start] + 1) * d] {
                        if start > 0 || i < c.len() {
                            split = true;
                        }
                        next.push(c[start..i].to_vec());
                        start = i;
                    }
                }
            }
            cells = next;
            if !split {
                return cells;
            }
        }
    }

    fn descend(&mut self, cells: Partition, path: &mut Vec<usize>) {
        if cells.len() == self.n {
            self.leaf(&cells);
            return;
        }
        let (target, _) = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .unwrap();
        let candidates = cells[target].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &candidates {
            if !explored.is_empty() && self.same_orbit_as_explored(v, &explored, path) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            for (i, c) in cells.iter().enumerate() {
                if i == target {
                    child.push(vec![v]);
                    child.push(c.iter().copied().filter(|&w| w != v).collect());
                } else {
                    child.push(c.clone());
                }
            }
            let child = self.refine(child);
            path.push(v);
            self.descend(child, path);
            path.pop();
            explored.push(v);
        }
    }

    fn same_orbit_as_explored(&self, v: usize, explored: &[usize], path: &[usize]) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        let mut any = false;
        for gamma in &self.automorphisms {
            if path.iter().all(|&x| gamma[x] == x) {
                any = true;
                for (x, &y) in gamma.iter().enumerate() {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&w| find(&mut parent, w) == rv)
    }

    fn leaf(&mut self, cells: &Partition) {
        let mut lab = vec![0; self.n];
        for (i, c) in cells.iter().enumerate() {
            lab[c[0]] = i;
        }
        let mut rows = vec![0u64; self.n];
        for v in 0..self.n {
            let mut r = 0u64;
            for &w in self.g.neighbours(v) {
                r |= 1 << lab[w];
            }
            rows[lab[v]] = r;
        }
        match &self.best {
            None => self.best = Some((rows, lab)),
            Some((best_rows, best_lab)) => match rows.cmp(best_rows) {
                std::cmp::Ordering::Less => self.best = Some((rows, lab)),
                std::cmp::Ordering::Equal => {
                    let mut inv = vec![0; self.n];
                    for (v, &l) in best_lab.iter().enumerate() {
                        inv[l] = v;
                    }
                    let gamma: Vec<usize> = lab.iter().map(|&l| inv[l]).collect();
                    if gamma.iter().enumerate().any(|(i, &x)| i != x) {
                        self.automorphisms.push(gamma);
                    }
                }
                std::cmp::Ordering::Greater => {}
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn k4_relabelled() {
        let g = named::k4();
        let code = canonical_code(&g);
        for perm in [[1, 0, 3, 2], [3, 2, 1, 0], [2, 0, 1, 3]] {
            assert_eq!(canonical_code(&g.relabel(&perm)), code);
        }
    }

    #[test]
    fn k33_differs_from_prism() {
        assert_ne!(canonical_code(&named::k33()), canonical_code(&named::prism(3)));
    }

    #[test]
    fn isomorphism_maps_edges() {
        let g = named::prism(5);
        let perm = [7, 3, 9, 0, 1, 8, 2, 6, 4, 5];
        let h = g.relabel(&perm);
        let iso = isomorphism(&g, &h).unwrap();
        for &(u, v) in g.edges() {
            assert!(h.has_edge(iso[u], iso[v]));
        }
    }

    #[test]
    fn non_cubic_and_disconnected() {
        let a = SimpleGraph::from_edges(5, [(0, 1), (1, 2), (3, 4)]).unwrap();
        let b = SimpleGraph::from_edges(5, [(4, 3), (2, 0), (0, 1)]).unwrap();
        let c = SimpleGraph::from_edges(5, [(0, 1), (2, 3), (3, 4)]).unwrap();
        assert_eq!(canonical_code(&a), canonical_code(&b));
        assert_eq!(canonical_code(&a), canonical_code(&c));
        let d = SimpleGraph::from_edges(5, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_ne!(canonical_code(&a), canonical_code(&d));
        assert_eq!(canonical_code(&SimpleGraph::empty(0)).as_str(), "?");
    }
}
