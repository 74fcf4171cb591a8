//! Backtracking engines shared by the vertex- and edge-colouring solvers.
//!
//! Both engines keep monochromatic components in a union-find without path
//! compression so that every assignment can be undone exactly.

use crate::budget::{Budget, Outcome, Ticker};
use crate::colour::Colour;
use crate::graph::SimpleGraph;
use crate::structure::bfs_edge_order;

const NONE: usize = usize::MAX;

#[derive(Clone, Copy)]
enum Op {
    Union { child: usize, root: usize },
    Edge { root: usize },
}

/// Union-find with undo. Tracks vertex and edge counts per component.
pub(crate) struct Dsu {
    parent: Vec<usize>,
    verts: Vec<usize>,
    edges: Vec<usize>,
    log: Vec<Op>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), verts: vec![1; n], edges: vec![0; n], log: Vec::new() }
    }

    #[inline]
    pub(crate) fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    /// Adds the edge `ab`. Returns the new root and whether it closed a cycle.
    #[inline]
    pub(crate) fn add_edge(&mut self, a: usize, b: usize) -> (usize, bool) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            self.edges[ra] += 1;
            self.log.push(Op::Edge { root: ra });
            return (ra, true);
        }
        let (child, root) = if self.verts[ra] < self.verts[rb] { (ra, rb) } else { (rb, ra) };
        self.parent[child] = root;
        self.verts[root] += self.verts[child];
        self.edges[root] += self.edges[child] + 1;
        self.log.push(Op::Union { child, root });
        (root, false)
    }

    #[inline]
    pub(crate) fn verts(&self, root: usize) -> usize {
        self.verts[root]
    }

    #[inline]
    pub(crate) fn edges(&self, root: usize) -> usize {
        self.edges[root]
    }

    #[inline]
    pub(crate) fn mark(&self) -> usize {
        self.log.len()
    }

    pub(crate) fn undo_to(&mut self, mark: usize) {
        while self.log.len() > mark {
            match self.log.pop().unwrap() {
                Op::Edge { root } => self.edges[root] -= 1,
                Op::Union { child, root } => {
                    self.parent[child] = child;
                    self.verts[root] -= self.verts[child];
                    self.edges[root] -= self.edges[child] + 1;
                }
            }
        }
    }
}

/// Constraints for the balanced vertex-colouring search.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct VertexRules {
    /// Largest allowed monochromatic component, in vertices.
    pub max_component: Option<usize>,
    /// Largest allowed degree inside a colour class.
    pub max_degree: Option<usize>,
    pub forbid_cycles: bool,
    /// Exact number of monochromatic edges required in each class.
    pub mono_edges: Option<usize>,
}

/// Vertex order: start at 0, then repeatedly the vertex with the most
/// already-ordered neighbours, ties by smallest index.
pub(crate) fn vertex_order(g: &SimpleGraph) -> Vec<usize> {
    let n = g.order();
    let mut placed = vec![false; n];
    let mut weight = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !placed[v]).max_by_key(|&v| (weight[v], std::cmp::Reverse(v))).unwrap();
        placed[v] = true;
        order.push(v);
        for &w in g.neighbours(v) {
            weight[w] += 1;
        }
    }
    order
}

/// Searches balanced vertex 2-colourings satisfying `rules`, calling `leaf`
/// on each complete one until it returns true. The first vertex in the order
/// is always black (every property searched is invariant under swapping).
pub(crate) fn search_bisections(
    g: &SimpleGraph,
    rules: VertexRules,
    budget: &Budget,
    mut leaf: impl FnMut(&[Colour]) -> bool,
) -> Outcome<Vec<Colour>> {
    let n = g.order();
    if n % 2 == 1 {
        return Outcome::Absent;
    }
    if n == 0 {
        return if leaf(&[]) { Outcome::Found(Vec::new()) } else { Outcome::Absent };
    }
    let mut s = VertexSearch {
        g,
        rules,
        order: vertex_order(g),
        colour: vec![None; n],
        count: [0; 2],
        mono: [0; 2],
        deg: vec![0; n],
        dsu: Dsu::new(n),
        ticker: Ticker::new(budget),
        result: None,
    };
    s.descend(0, &mut leaf);
    if let Some(r) = s.result {
        Outcome::Found(r)
    } else if s.ticker.out_of_time {
        Outcome::Inconclusive
    } else {
        Outcome::Absent
    }
}

struct VertexSearch<'a> {
    g: &'a SimpleGraph,
    rules: VertexRules,
    order: Vec<usize>,
    colour: Vec<Option<Colour>>,
    count: [usize; 2],
    mono: [usize; 2],
    deg: Vec<usize>,
    dsu: Dsu,
    ticker: Ticker<'a>,
    result: Option<Vec<Colour>>,
}

impl VertexSearch<'_> {
    /// Returns true to stop the search.
    fn descend(&mut self, i: usize, leaf: &mut impl FnMut(&[Colour]) -> bool) -> bool {
        if self.ticker.tick() {
            return true;
        }
        let n = self.g.order();
        if i == n {
            if let Some(m) = self.rules.mono_edges {
                if self.mono != [m, m] {
                    return false;
                }
            }
            let full: Vec<Colour> = self.colour.iter().map(|c| c.unwrap()).collect();
            if leaf(&full) {
                self.result = Some(full);
                return true;
            }
            return false;
        }
        let v = self.order[i];
        debug_assert!(self.g.degree(v) <= 3);
        let choices: &[Colour] = if i == 0 { &[Colour::Black] } else { &[Colour::Black, Colour::White] };
        for &c in choices {
            if self.count[c.index()] == n / 2 {
                continue;
            }
            let mark = self.dsu.mark();
            let mut touched: [usize; 3] = [NONE; 3];
            let mut ok = true;
            let mut added = 0;
            for (k, &w) in self.g.neighbours(v).iter().enumerate() {
                if self.colour[w] != Some(c) {
                    continue;
                }
                touched[k] = w;
                self.deg[v] += 1;
                self.deg[w] += 1;
                added += 1;
                if let Some(d) = self.rules.max_degree {
                    if self.deg[v] > d || self.deg[w] > d {
                        ok = false;
                        break;
                    }
                }
                let (root, cycle) = self.dsu.add_edge(v, w);
                if cycle && self.rules.forbid_cycles {
                    ok = false;
                    break;
                }
                if let Some(k) = self.rules.max_component {
                    if self.dsu.verts(root) > k {
                        ok = false;
                        break;
                    }
                }
            }
            self.mono[c.index()] += added;
            if let Some(m) = self.rules.mono_edges {
                if self.mono[c.index()] > m {
                    ok = false;
                }
            }
            self.colour[v] = Some(c);
            self.count[c.index()] += 1;
            if ok && self.descend(i + 1, leaf) {
                return true;
            }
            self.count[c.index()] -= 1;
            self.colour[v] = None;
            self.mono[c.index()] -= added;
            for &w in touched.iter().filter(|&&w| w != NONE) {
                self.deg[v] -= 1;
                self.deg[w] -= 1;
            }
            self.dsu.undo_to(mark);
        }
        false
    }
}

/// Constraints for the edge 2-colouring search.
#[derive(Clone, Debug, Default)]
pub(crate) struct EdgeRules {
    /// Both classes must be linear forests.
    pub linear: bool,
    /// Largest allowed monochromatic component, in edges.
    pub max_component_edges: Option<usize>,
    /// Smallest allowed path length (linear mode only).
    pub min_path: usize,
    /// Exact size of each colour class.
    pub class_size: Option<usize>,
    /// Edges left uncoloured.
    pub removed: Vec<usize>,
    /// Pre-assigned colours.
    pub forced: Vec<(usize, Colour)>,
}

/// Searches edge 2-colourings satisfying `rules`; `leaf` sees the complete
/// colouring (uncoloured edges are `None`). When nothing is forced the first
/// edge in the order is black.
pub(crate) fn search_edge_colourings(
    g: &SimpleGraph,
    rules: &EdgeRules,
    budget: &Budget,
    mut leaf: impl FnMut(&[Option<Colour>]) -> bool,
) -> Outcome<Vec<Option<Colour>>> {
    let n = g.order();
    let m = g.size();
    let mut removed = vec![false; m];
    for &e in &rules.removed {
        removed[e] = true;
    }
    let mut s = EdgeSearch {
        g,
        rules,
        order: Vec::new(),
        colour: vec![None; m],
        count: [0; 2],
        deg: vec![[0; 2]; n],
        pending: vec![0; n],
        dsu: [Dsu::new(n), Dsu::new(n)],
        ticker: Ticker::new(budget),
        result: None,
        symmetric: rules.forced.is_empty(),
    };
    for v in 0..n {
        s.pending[v] = g.neighbours(v).iter().filter(|&&w| !removed[g.edge_index(v, w).unwrap()]).count();
    }
    let mut is_forced = vec![false; m];
    for &(e, c) in &rules.forced {
        if removed[e] || is_forced[e] {
            return Outcome::Absent;
        }
        is_forced[e] = true;
        if !s.assign(e, c) {
            return Outcome::Absent;
        }
    }
    s.order = bfs_edge_order(g).into_iter().filter(|&e| !removed[e] && !is_forced[e]).collect();
    s.descend(0, &mut leaf);
    if let Some(r) = s.result {
        Outcome::Found(r)
    } else if s.ticker.out_of_time {
        Outcome::Inconclusive
    } else {
        Outcome::Absent
    }
}

struct EdgeSearch<'a> {
    g: &'a SimpleGraph,
    rules: &'a EdgeRules,
    order: Vec<usize>,
    colour: Vec<Option<Colour>>,
    count: [usize; 2],
    deg: Vec<[usize; 2]>,
    /// Uncoloured, non-removed edges still to be decided at each vertex.
    pending: Vec<usize>,
    dsu: [Dsu; 2],
    ticker: Ticker<'a>,
    result: Option<Vec<Option<Colour>>>,
    symmetric: bool,
}

impl EdgeSearch<'_> {
    /// Colours `e` and checks the local constraints. The caller undoes the
    /// assignment with [`EdgeSearch::unassign`] whatever the return value.
    fn assign(&mut self, e: usize, c: Colour) -> bool {
        let (u, v) = self.g.edge(e);
        let ci = c.index();
        self.colour[e] = Some(c);
        self.count[ci] += 1;
        self.deg[u][ci] += 1;
        self.deg[v][ci] += 1;
        self.pending[u] -= 1;
        self.pending[v] -= 1;
        let (root, cycle) = self.dsu[ci].add_edge(u, v);
        if let Some(s) = self.rules.class_size {
            if self.count[ci] > s {
                return false;
            }
        }
        if self.rules.linear && (cycle || self.deg[u][ci] > 2 || self.deg[v][ci] > 2) {
            return false;
        }
        if let Some(k) = self.rules.max_component_edges {
            if self.dsu[ci].edges(root) > k {
                return false;
            }
        }
        if self.rules.linear && self.rules.min_path > 1 {
            for z in [u, v] {
                if self.pending[z] == 0 && !self.ends_ok(z) {
                    return false;
                }
            }
        }
        true
    }

    /// A completed vertex that ends a path: the path must not be closed
    /// while still shorter than the minimum.
    fn ends_ok(&self, z: usize) -> bool {
        for ci in 0..2 {
            if self.deg[z][ci] != 1 {
                continue;
            }
            let root = self.dsu[ci].find(z);
            let len = self.dsu[ci].edges(root);
            if len >= self.rules.min_path {
                continue;
            }
            // A path of length < min_path is closed once both ends are complete.
            if self.path_closed(z, ci) {
                return false;
            }
        }
        true
    }

    fn path_closed(&self, z: usize, ci: usize) -> bool {
        // Walk the path from z to its other end.
        let mut prev = NONE;
        let mut cur = z;
        loop {
            let next = self.g.neighbours(cur).iter().copied().find(|&w| {
                w != prev && self.colour[self.g.edge_index(cur, w).unwrap()].map(Colour::index) == Some(ci)
            });
            match next {
                Some(w) => {
                    prev = cur;
                    cur = w;
                }
                None => break,
            }
        }
        self.pending[cur] == 0
    }

    fn unassign(&mut self, e: usize, c: Colour, mark: usize) {
        let (u, v) = self.g.edge(e);
        let ci = c.index();
        self.dsu[ci].undo_to(mark);
        self.pending[u] += 1;
        self.pending[v] += 1;
        self.deg[u][ci] -= 1;
        self.deg[v][ci] -= 1;
        self.count[ci] -= 1;
        self.colour[e] = None;
    }

    fn descend(&mut self, i: usize, leaf: &mut impl FnMut(&[Option<Colour>]) -> bool) -> bool {
        if self.ticker.tick() {
            return true;
        }
        if i == self.order.len() {
            if let Some(s) = self.rules.class_size {
                if self.count != [s, s] {
                    return false;
                }
            }
            if leaf(&self.colour) {
                self.result = Some(self.colour.clone());
                return true;
            }
            return false;
        }
        let e = self.order[i];
        let choices: &[Colour] =
            if i == 0 && self.symmetric { &[Colour::Black] } else { &[Colour::Black, Colour::White] };
        for &c in choices {
            let mark = self.dsu[c.index()].mark();
            let ok = self.assign(e, c);
            if ok && self.descend(i + 1, leaf) {
                return true;
            }
            self.unassign(e, c, mark);
        }
        false
    }
}

/// Path lengths (in edges) of a linear forest given by an edge subset,
/// sorted ascending. Isolated vertices are not counted.
pub(crate) fn path_lengths(g: &SimpleGraph, colour: &[Option<Colour>], c: Colour) -> Vec<usize> {
    let mut dsu = Dsu::new(g.order());
    let mut touched = vec![false; g.order()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if colour[e] == Some(c) {
            dsu.add_edge(u, v);
            touched[u] = true;
            touched[v] = true;
        }
    }
    let mut out: Vec<usize> = (0..g.order()).filter(|&v| touched[v] && dsu.find(v) == v).map(|r| dsu.edges(r)).collect();
    out.sort_unstable();
    out
}
