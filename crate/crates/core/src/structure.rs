//! Structural predicates: connectivity, 3-edge-colourability, perfect
//! matchings and component signatures.

use std::collections::VecDeque;

use crate::canon::{canonical_code, CanonicalCode};
use crate::colour::EdgeColouring3;
use crate::graph::{CubicGraph, SimpleGraph};

/// Vertex connectivity, capped at 3 (the most a cubic graph can have).
/// Returns 0 for disconnected graphs.
pub fn vertex_connectivity(g: &SimpleGraph) -> usize {
    let n = g.order();
    let mut removed = vec![false; n];
    if !connected_without(g, &removed) {
        return 0;
    }
    for a in 0..n {
        removed[a] = true;
        if !connected_without(g, &removed) {
            return 1;
        }
        removed[a] = false;
    }
    for a in 0..n {
        removed[a] = true;
        for b in a + 1..n {
            removed[b] = true;
            let cut = !connected_without(g, &removed);
            removed[b] = false;
            if cut {
                return 2;
            }
        }
        removed[a] = false;
    }
    3.min(n.saturating_sub(1))
}

fn connected_without(g: &SimpleGraph, removed: &[bool]) -> bool {
    let n = g.order();
    let Some(start) = (0..n).find(|&v| !removed[v]) else {
        return true;
    };
    let mut seen = removed.to_vec();
    seen[start] = true;
    let mut stack = vec![start];
    let mut reached = 1;
    while let Some(v) = stack.pop() {
        for &w in g.neighbours(v) {
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    reached == removed.iter().filter(|&&r| !r).count()
}

/// A proper 3-edge-colouring, found by exhaustive backtracking over the
/// edges in breadth-first order.
pub fn proper_3_edge_colouring(g: &CubicGraph) -> Option<EdgeColouring3> {
    let m = g.size();
    if m == 0 {
        return EdgeColouring3::new(g, Vec::new()).ok();
    }
    let order = bfs_edge_order(g);
    let mut colour = vec![u8::MAX; m];
    let mut used = vec![0u8; g.order()];
    // Any colouring can be permuted so that the edges at vertex 0 get 0, 1, 2.
    for (c, &e) in g.incident(0).iter().enumerate() {
        let (u, v) = g.edge(e);
        colour[e] = c as u8;
        used[u] |= 1 << c;
        used[v] |= 1 << c;
    }
    let rest: Vec<usize> = order.into_iter().filter(|&e| colour[e] == u8::MAX).collect();
    if colour_edges(g, &rest, 0, &mut colour, &mut used) {
        Some(EdgeColouring3::new(g, colour).expect("search produces a proper colouring"))
    } else {
        None
    }
}

fn colour_edges(g: &CubicGraph, order: &[usize], i: usize, colour: &mut [u8], used: &mut [u8]) -> bool {
    let Some(&e) = order.get(i) else {
        return true;
    };
    let (u, v) = g.edge(e);
    let free = !(used[u] | used[v]) & 0b111;
    for c in 0..3u8 {
        if free & (1 << c) == 0 {
            continue;
        }
        colour[e] = c;
        used[u] |= 1 << c;
        used[v] |= 1 << c;
        if colour_edges(g, order, i + 1, colour, used) {
            return true;
        }
        used[u] &= !(1 << c);
        used[v] &= !(1 << c);
    }
    colour[e] = u8::MAX;
    false
}

/// Edge indices in the order they are met by a breadth-first search that
/// restarts in every component.
pub(crate) fn bfs_edge_order(g: &SimpleGraph) -> Vec<usize> {
    let n = g.order();
    let mut seen_v = vec![false; n];
    let mut seen_e = vec![false; g.size()];
    let mut out = Vec::with_capacity(g.size());
    for s in 0..n {
        if seen_v[s] {
            continue;
        }
        seen_v[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbours(v) {
                let e = g.edge_index(v, w).unwrap();
                if !seen_e[e] {
                    seen_e[e] = true;
                    out.push(e);
                }
                if !seen_v[w] {
                    seen_v[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    out
}

/// Maximum matching size by Edmonds' blossom algorithm.
pub fn maximum_matching(g: &SimpleGraph) -> usize {
    Blossom::new(g).run()
}

pub fn has_perfect_matching(g: &SimpleGraph) -> bool {
    g.order().is_multiple_of(2) && 2 * maximum_matching(g) == g.order()
}

struct Blossom<'a> {
    g: &'a SimpleGraph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    blossom: Vec<bool>,
}

const NONE: usize = usize::MAX;

impl<'a> Blossom<'a> {
    fn new(g: &'a SimpleGraph) -> Self {
        let n = g.order();
        Self {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            blossom: vec![false; n],
        }
    }

    fn run(&mut self) -> usize {
        let n = self.g.order();
        // Greedy start.
        for v in 0..n {
            if self.mate[v] == NONE {
                if let Some(&w) = self.g.neighbours(v).iter().find(|&&w| self.mate[w] == NONE) {
                    self.mate[v] = w;
                    self.mate[w] = v;
                }
            }
        }
        for v in 0..n {
            if self.mate[v] == NONE {
                let end = self.find_path(v);
                let mut w = end;
                while w != NONE {
                    let pw = self.parent[w];
                    let next = self.mate[pw];
                    self.mate[w] = pw;
                    self.mate[pw] = w;
                    w = next;
                }
            }
        }
        self.mate.iter().filter(|&&m| m != NONE).count() / 2
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.order()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.blossom[self.base[v]] = true;
            self.blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Returns the free vertex ending an augmenting path from `root`, or NONE.
    fn find_path(&mut self, root: usize) -> usize {
        let n = self.g.order();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for k in 0..self.g.degree(v) {
                let to = self.g.neighbours(v)[k];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return to;
                    }
                    let m = self.mate[to];
                    self.used[m] = true;
                    queue.push_back(m);
                }
            }
        }
        NONE
    }
}

/// Sorted canonical codes of the components of the subgraph induced by
/// `subset`.
pub fn component_signature(g: &SimpleGraph, subset: &[usize]) -> Vec<CanonicalCode> {
    let mut mask = vec![false; g.order()];
    for &v in subset {
        mask[v] = true;
    }
    signature_of_mask(g, &mask)
}

pub(crate) fn signature_of_mask(g: &SimpleGraph, mask: &[bool]) -> Vec<CanonicalCode> {
    let mut codes: Vec<CanonicalCode> =
        g.induced_components(mask).iter().map(|c| canonical_code(&g.induced_subgraph(c))).collect();
    codes.sort();
    codes
}
