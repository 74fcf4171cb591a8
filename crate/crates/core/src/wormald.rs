//! Wormald edge colourings: edge 2-colourings whose classes are isomorphic
//! linear forests, the strong form with every path of length at least 2,
//! and the variants with one or two uncoloured edges.
//!
//! Two independent solvers are provided. The direct one backtracks over edge
//! colours. The bisection method searches vertex colourings whose parts are
//! isomorphic linear forests with the right number of edges, checks that the
//! bichromatic edges form unicyclic components (plus one tree when the order
//! is 2 mod 4), and rebuilds an edge colouring by orienting those components.

use std::collections::VecDeque;

use serde::Serialize;

use crate::ando::lf_signature_of_mask;
use crate::budget::{Budget, Outcome};
use crate::colour::{Bisection, Colour, EdgeTwoColouring};
use crate::error::{invalid, Result};
use crate::graph::{CubicGraph, SimpleGraph};
use crate::search::{path_lengths, search_bisections, search_edge_colourings, Dsu, EdgeRules, VertexRules};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ComponentKind {
    Tree,
    TreePlusEdge,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GPrimeComponent {
    pub vertices: Vec<usize>,
    /// Edge indices into the host graph.
    pub edges: Vec<usize>,
    pub kind: ComponentKind,
}

/// Components of the spanning subgraph of bichromatic edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GPrimeDecomposition {
    pub components: Vec<GPrimeComponent>,
}

impl GPrimeDecomposition {
    pub fn count(&self, kind: ComponentKind) -> usize {
        self.components.iter().filter(|c| c.kind == kind).count()
    }

    /// Every component unicyclic when `n` is 0 mod 4; all but exactly one
    /// tree when `n` is 2 mod 4.
    pub fn qualifies(&self, n: usize) -> bool {
        let trees = self.count(ComponentKind::Tree);
        let other = self.count(ComponentKind::Other);
        match n % 4 {
            0 => trees == 0 && other == 0,
            2 => trees == 1 && other == 0,
            _ => false,
        }
    }
}

/// A colouring with two uncoloured edges `e` and `f`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairRemoved {
    pub e: usize,
    pub f: usize,
    /// Whether `e` and `f` have no common endpoint.
    pub disjoint: bool,
    pub colouring: EdgeTwoColouring,
}

fn order_class(g: &SimpleGraph, want: usize) -> Result<()> {
    if g.order() % 4 != want {
        return Err(invalid(format!("order {} is not {want} mod 4", g.order())));
    }
    Ok(())
}

/// Both classes are linear forests with equal path-length multisets, all
/// paths at least `min_len` long.
fn classes_ok(g: &SimpleGraph, ec: &EdgeTwoColouring, min_len: usize) -> bool {
    let mut deg = vec![[0usize; 2]; g.order()];
    let mut dsu = [Dsu::new(g.order()), Dsu::new(g.order())];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if let Some(c) = ec.colour(e) {
            let ci = c.index();
            deg[u][ci] += 1;
            deg[v][ci] += 1;
            if deg[u][ci] > 2 || deg[v][ci] > 2 || dsu[ci].add_edge(u, v).1 {
                return false;
            }
        }
    }
    let b = path_lengths(g, ec.colours(), Colour::Black);
    let w = path_lengths(g, ec.colours(), Colour::White);
    b == w && b.first().is_none_or(|&l| l >= min_len)
}

/// The endpoint rule at an uncoloured edge: one end meets two white
/// edges, the other two black edges.
fn endpoint_rule(g: &SimpleGraph, ec: &EdgeTwoColouring, e: usize) -> bool {
    let (x, y) = g.edge(e);
    let two = |z: usize| -> Option<Colour> {
        let cs: Vec<Option<Colour>> =
            g.neighbours(z).iter().map(|&w| g.edge_index(z, w).unwrap()).filter(|&f| f != e).map(|f| ec.colour(f)).collect();
        match cs.as_slice() {
            [Some(a), Some(b)] if a == b => Some(*a),
            _ => None,
        }
    };
    matches!((two(x), two(y)), (Some(a), Some(b)) if a != b)
}

pub fn verify_wormald(g: &CubicGraph, ec: &EdgeTwoColouring) -> Result<bool> {
    order_class(g, 0)?;
    ec.check_len(g)?;
    if !ec.is_total() {
        return Err(invalid("Wormald colourings colour every edge"));
    }
    Ok(classes_ok(g, ec, 0))
}

/// Order 0 mod 4: a total colouring. Order 2 mod 4: exactly one uncoloured
/// edge satisfying the endpoint rule.
pub fn verify_strong_wormald(g: &CubicGraph, ec: &EdgeTwoColouring) -> Result<bool> {
    ec.check_len(g)?;
    let missing = ec.uncoloured();
    match g.order() % 4 {
        0 => {
            if !missing.is_empty() {
                return Err(invalid("order is 0 mod 4 but the colouring is partial"));
            }
            Ok(classes_ok(g, ec, 2))
        }
        2 => {
            if missing.len() != 1 {
                return Err(invalid(format!("order is 2 mod 4: expected one uncoloured edge, found {}", missing.len())));
            }
            Ok(classes_ok(g, ec, 2) && endpoint_rule(g, ec, missing[0]))
        }
        _ => Err(invalid("cubic graphs have even order")),
    }
}

/// Order 0 mod 4 with exactly two uncoloured edges, each satisfying the
/// endpoint rule.
pub fn verify_pair_removed(g: &CubicGraph, ec: &EdgeTwoColouring) -> Result<bool> {
    order_class(g, 0)?;
    ec.check_len(g)?;
    let missing = ec.uncoloured();
    if missing.len() != 2 {
        return Err(invalid(format!("expected two uncoloured edges, found {}", missing.len())));
    }
    Ok(classes_ok(g, ec, 2) && missing.iter().all(|&e| endpoint_rule(g, ec, e)))
}

/// Colours each vertex by the colour of the two incident edges it shares.
pub fn ando_from_wormald(g: &CubicGraph, ec: &EdgeTwoColouring) -> Result<Bisection> {
    if !verify_strong_wormald(g, ec)? {
        return Err(invalid("input is not a Strong Wormald colouring"));
    }
    let colours = (0..g.order())
        .map(|v| {
            let black = g.incident(v).iter().filter(|&&e| ec.colour(e) == Some(Colour::Black)).count();
            if black >= 2 {
                Colour::Black
            } else {
                Colour::White
            }
        })
        .collect();
    Ok(Bisection::new(colours))
}

pub fn gprime_decomposition(g: &SimpleGraph, c: &Bisection) -> Result<GPrimeDecomposition> {
    c.check_len(g)?;
    let n = g.order();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if c.colour(u) != c.colour(v) {
            adj[u].push((v, e));
            adj[v].push((u, e));
        }
    }
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut vertices = vec![s];
        let mut edges = Vec::new();
        let mut i = 0;
        while i < vertices.len() {
            let v = vertices[i];
            i += 1;
            for &(w, e) in &adj[v] {
                if v < w {
                    edges.push(e);
                }
                if !seen[w] {
                    seen[w] = true;
                    vertices.push(w);
                }
            }
        }
        vertices.sort_unstable();
        edges.sort_unstable();
        let kind = match edges.len() as isize - vertices.len() as isize {
            -1 => ComponentKind::Tree,
            0 => ComponentKind::TreePlusEdge,
            _ => ComponentKind::Other,
        };
        debug_assert!(edges.iter().all(|&e| {
            let (u, v) = g.edge(e);
            c.colour(u) != c.colour(v)
        }));
        components.push(GPrimeComponent { vertices, edges, kind });
    }
    Ok(GPrimeDecomposition { components })
}

/// Monochromatic edges needed in each part: the paths of a part with `p`
/// paths and `m` edges satisfy sum(l_i + 2) = m + 2p = floor(|E| / 2).
fn part_edge_target(n: usize) -> usize {
    let half = n / 2;
    let paths = (3 * n / 2) / 2 - half;
    half - paths
}

/// Checks the bisection-method conditions on a complete colouring.
fn bisection_qualifies(g: &SimpleGraph, colours: &[Colour]) -> bool {
    let n = g.order();
    let masks = [Colour::Black, Colour::White].map(|c| colours.iter().map(|&x| x == c).collect::<Vec<_>>());
    // (1) linear forests, (2) path-length sum.
    let sigs = masks.clone().map(|m| lf_signature_of_mask(g, &m));
    let [Ok(b), Ok(w)] = sigs else {
        return false;
    };
    let target = (3 * n / 2) / 2;
    if b.0.iter().map(|l| l + 2).sum::<usize>() != target || w.0.iter().map(|l| l + 2).sum::<usize>() != target {
        return false;
    }
    // (3) isomorphic parts.
    if b != w {
        return false;
    }
    // (4) bichromatic components.
    let mut dsu = Dsu::new(n);
    for &(u, v) in g.edges() {
        if colours[u] != colours[v] {
            dsu.add_edge(u, v);
        }
    }
    let (mut trees, mut other) = (0, 0);
    for r in (0..n).filter(|&v| dsu.find(v) == v) {
        match dsu.edges(r) as isize - dsu.verts(r) as isize {
            -1 => trees += 1,
            0 => {}
            _ => other += 1,
        }
    }
    other == 0 && trees == usize::from(n % 4 == 2)
}

pub fn find_strong_wormald_bisection_method(g: &CubicGraph) -> Option<EdgeTwoColouring> {
    find_strong_wormald_bisection_method_within(g, &Budget::unlimited()).unlimited()
}

pub fn find_strong_wormald_bisection_method_within(g: &CubicGraph, budget: &Budget) -> Outcome<EdgeTwoColouring> {
    find_qualifying_bisection(g, budget).map(|b| {
        let ec = reconstruct(g, &b, &[]).expect("qualifying bisection reconstructs");
        debug_assert!(verify_strong_wormald(g, &ec).unwrap());
        ec
    })
}

/// A bisection meeting all four conditions of the bisection method.
pub fn find_qualifying_bisection(g: &CubicGraph, budget: &Budget) -> Outcome<Bisection> {
    let n = g.order();
    if n == 0 {
        return Outcome::Absent;
    }
    let rules = VertexRules {
        max_degree: Some(2),
        forbid_cycles: true,
        mono_edges: Some(part_edge_target(n)),
        ..Default::default()
    };
    search_bisections(g, rules, budget, |colours| bisection_qualifies(g, colours)).map(Bisection::new)
}

/// Number of unicyclic components of G' for a qualifying bisection; there
/// are `2^cycles` reconstructions.
pub fn reconstruction_count(g: &SimpleGraph, c: &Bisection) -> Result<usize> {
    Ok(gprime_decomposition(g, c)?.count(ComponentKind::TreePlusEdge))
}

/// Rebuilds a Strong Wormald colouring from a qualifying bisection.
/// `reverse[i]` flips the direction of the cycle of the i-th unicyclic
/// component (components ordered by smallest vertex); missing entries mean
/// the default direction. In the 2 mod 4 case the uncoloured edge is the
/// smallest-index edge of the tree component.
pub fn reconstruct(g: &SimpleGraph, c: &Bisection, reverse: &[bool]) -> Result<EdgeTwoColouring> {
    let n = g.order();
    let dec = gprime_decomposition(g, c)?;
    if !dec.qualifies(n) {
        return Err(invalid("bichromatic components do not have the required shape"));
    }
    let mut colours: Vec<Option<Colour>> = vec![None; g.size()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if c.colour(u) == c.colour(v) {
            colours[e] = Some(c.colour(u));
        }
    }
    let mut in_component = vec![false; g.size()];
    let mut cycle_index = 0;
    for comp in &dec.components {
        for &e in &comp.edges {
            in_component[e] = true;
        }
        // Directed edges (from, to, edge) orienting the component so that
        // every vertex has in-degree one (except the tree's roots).
        let mut roots: Vec<usize> = Vec::new();
        let mut skip = usize::MAX;
        let mut arcs: Vec<(usize, usize, usize)> = Vec::new();
        match comp.kind {
            ComponentKind::TreePlusEdge => {
                let cycle = cycle_of(g, comp);
                let rev = reverse.get(cycle_index).copied().unwrap_or(false);
                cycle_index += 1;
                let k = cycle.len();
                for i in 0..k {
                    let (a, b) = if rev { (cycle[(i + 1) % k], cycle[i]) } else { (cycle[i], cycle[(i + 1) % k]) };
                    arcs.push((a, b, g.edge_index(a, b).unwrap()));
                }
                roots.extend(cycle);
            }
            ComponentKind::Tree => {
                let e = comp.edges[0];
                let (u, v) = g.edge(e);
                skip = e;
                roots.extend([u, v]);
            }
            ComponentKind::Other => unreachable!(),
        }
        let mut reached = vec![false; n];
        for &r in &roots {
            reached[r] = true;
        }
        let on_cycle: Vec<usize> = arcs.iter().map(|a| a.2).collect();
        let mut queue: VecDeque<usize> = roots.iter().copied().collect();
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbours(v) {
                let e = g.edge_index(v, w).unwrap();
                if c.colour(v) == c.colour(w) || e == skip || on_cycle.contains(&e) || reached[w] {
                    continue;
                }
                reached[w] = true;
                arcs.push((v, w, e));
                queue.push_back(w);
            }
        }
        for (_, to, e) in arcs {
            colours[e] = Some(c.colour(to).flip());
        }
    }
    debug_assert!(g.edges().iter().enumerate().all(|(e, &(u, v))| c.colour(u) == c.colour(v) || in_component[e]));
    Ok(EdgeTwoColouring::partial(colours))
}

/// Vertices of the unique cycle of a unicyclic component, in cyclic order
/// starting at its smallest vertex and moving to the smaller neighbour.
fn cycle_of(g: &SimpleGraph, comp: &GPrimeComponent) -> Vec<usize> {
    let n = g.order();
    let mut in_comp = vec![false; g.size()];
    for &e in &comp.edges {
        in_comp[e] = true;
    }
    let nbrs = |v: usize| -> Vec<usize> {
        g.neighbours(v).iter().copied().filter(|&w| in_comp[g.edge_index(v, w).unwrap()]).collect()
    };
    let mut deg = vec![0usize; n];
    for &v in &comp.vertices {
        deg[v] = nbrs(v).len();
    }
    let mut alive = vec![false; n];
    for &v in &comp.vertices {
        alive[v] = true;
    }
    let mut leaves: Vec<usize> = comp.vertices.iter().copied().filter(|&v| deg[v] == 1).collect();
    while let Some(v) = leaves.pop() {
        alive[v] = false;
        for w in nbrs(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    leaves.push(w);
                }
            }
        }
    }
    let start = comp.vertices.iter().copied().find(|&v| alive[v]).expect("unicyclic component has a cycle");
    let mut cycle = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let mut next: Vec<usize> = nbrs(cur).into_iter().filter(|&w| alive[w] && w != prev).collect();
        next.sort_unstable();
        let w = next[0];
        if w == start {
            break;
        }
        prev = cur;
        cur = w;
        cycle.push(w);
        if cycle.len() > comp.vertices.len() {
            unreachable!("cycle walk did not close");
        }
    }
    cycle
}

/// Every reconstruction of a qualifying bisection (one per choice of cycle
/// directions).
pub fn all_reconstructions(g: &SimpleGraph, c: &Bisection) -> Result<Vec<EdgeTwoColouring>> {
    let k = reconstruction_count(g, c)?;
    if k > 20 {
        return Err(invalid(format!("{k} cycles give too many reconstructions to list")));
    }
    (0..1usize << k)
        .map(|mask| {
            let rev: Vec<bool> = (0..k).map(|i| mask >> i & 1 == 1).collect();
            reconstruct(g, c, &rev)
        })
        .collect()
}

pub fn find_strong_wormald_direct(g: &CubicGraph) -> Option<EdgeTwoColouring> {
    find_strong_wormald_direct_within(g, &Budget::unlimited()).unlimited()
}

/// Handles both order classes. For 2 mod 4 every edge is tried as the
/// uncoloured one, in index order, with both endpoint orientations.
pub fn find_strong_wormald_direct_within(g: &CubicGraph, budget: &Budget) -> Outcome<EdgeTwoColouring> {
    let m = g.size();
    match g.order() % 4 {
        0 => {
            let rules = EdgeRules { linear: true, min_path: 2, class_size: Some(m / 2), ..Default::default() };
            edge_search(g, &rules, budget)
        }
        _ => {
            let mut inconclusive = false;
            for e in 0..m {
                let (u, v) = g.edge(e);
                for (x, y) in [(u, v), (v, u)] {
                    let Some(forced) = endpoint_forcing(g, &[(e, x, y)]) else {
                        continue;
                    };
                    let rules = EdgeRules {
                        linear: true,
                        min_path: 2,
                        class_size: Some((m - 1) / 2),
                        removed: vec![e],
                        forced,
                        ..Default::default()
                    };
                    match edge_search(g, &rules, budget) {
                        Outcome::Found(ec) => return Outcome::Found(ec),
                        Outcome::Inconclusive => inconclusive = true,
                        Outcome::Absent => {}
                    }
                }
            }
            if inconclusive {
                Outcome::Inconclusive
            } else {
                Outcome::Absent
            }
        }
    }
}

/// Forced colours for uncoloured edges `(e, x, y)`: the other edges at `x`
/// white, at `y` black. `None` if the requirements contradict each other
/// or fall on an uncoloured edge.
fn endpoint_forcing(g: &SimpleGraph, specs: &[(usize, usize, usize)]) -> Option<Vec<(usize, Colour)>> {
    let removed: Vec<usize> = specs.iter().map(|s| s.0).collect();
    let mut forced: Vec<(usize, Colour)> = Vec::new();
    for &(e, x, y) in specs {
        for (z, c) in [(x, Colour::White), (y, Colour::Black)] {
            for &w in g.neighbours(z) {
                let f = g.edge_index(z, w).unwrap();
                if f == e {
                    continue;
                }
                if removed.contains(&f) {
                    return None;
                }
                match forced.iter().find(|p| p.0 == f) {
                    Some(&(_, d)) if d != c => return None,
                    Some(_) => {}
                    None => forced.push((f, c)),
                }
            }
        }
    }
    Some(forced)
}

fn edge_search(g: &SimpleGraph, rules: &EdgeRules, budget: &Budget) -> Outcome<EdgeTwoColouring> {
    search_edge_colourings(g, rules, budget, |colours| {
        path_lengths(g, colours, Colour::Black) == path_lengths(g, colours, Colour::White)
    })
    .map(EdgeTwoColouring::partial)
}

/// Either solver, by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Bisection,
    Direct,
}

pub fn find_strong_wormald_within(g: &CubicGraph, method: Method, budget: &Budget) -> Outcome<EdgeTwoColouring> {
    match method {
        Method::Bisection => find_strong_wormald_bisection_method_within(g, budget),
        Method::Direct => find_strong_wormald_direct_within(g, budget),
    }
}

pub fn find_wormald(g: &CubicGraph) -> Result<Option<EdgeTwoColouring>> {
    Ok(find_wormald_within(g, &Budget::unlimited())?.unlimited())
}

pub fn find_wormald_within(g: &CubicGraph, budget: &Budget) -> Result<Outcome<EdgeTwoColouring>> {
    order_class(g, 0)?;
    let rules = EdgeRules { linear: true, class_size: Some(g.size() / 2), ..Default::default() };
    Ok(edge_search(g, &rules, budget))
}

pub fn find_pair_removed_strong_wormald(g: &CubicGraph) -> Result<Option<PairRemoved>> {
    Ok(find_pair_removed_strong_wormald_within(g, &Budget::unlimited())?.unlimited())
}

/// Pairs `e < f` in lexicographic order, including pairs sharing a vertex
/// (those can never satisfy the endpoint rule at the shared vertex). The
/// orientation of `e` is fixed with its smaller endpoint white, which loses
/// nothing since swapping colours reverses both orientations.
pub fn find_pair_removed_strong_wormald_within(g: &CubicGraph, budget: &Budget) -> Result<Outcome<PairRemoved>> {
    order_class(g, 0)?;
    let m = g.size();
    let mut inconclusive = false;
    for e in 0..m {
        let (ex, ey) = g.edge(e);
        for f in e + 1..m {
            let (u, v) = g.edge(f);
            for (fx, fy) in [(u, v), (v, u)] {
                let Some(forced) = endpoint_forcing(g, &[(e, ex, ey), (f, fx, fy)]) else {
                    continue;
                };
                let rules = EdgeRules {
                    linear: true,
                    min_path: 2,
                    class_size: Some((m - 2) / 2),
                    removed: vec![e, f],
                    forced,
                    ..Default::default()
                };
                match edge_search(g, &rules, budget) {
                    Outcome::Found(colouring) => {
                        let disjoint = ![ex, ey].contains(&u) && ![ex, ey].contains(&v);
                        return Ok(Outcome::Found(PairRemoved { e, f, disjoint, colouring }));
                    }
                    Outcome::Inconclusive => inconclusive = true,
                    Outcome::Absent => {}
                }
            }
        }
    }
    Ok(if inconclusive { Outcome::Inconclusive } else { Outcome::Absent })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    /// K4 as two Hamiltonian paths 1-0-2-3 (black) and 0-3-1-2 (white).
    fn k4_paths() -> (CubicGraph, EdgeTwoColouring) {
        let g = named::k4();
        let black = [(0, 1), (0, 2), (2, 3)];
        let colours =
            g.edges().iter().map(|e| if black.contains(e) { Colour::Black } else { Colour::White }).collect();
        (g, EdgeTwoColouring::total(colours))
    }

    #[test]
    fn k4_two_paths() {
        let (g, ec) = k4_paths();
        assert!(verify_wormald(&g, &ec).unwrap());
        assert!(verify_strong_wormald(&g, &ec).unwrap());
        let b = ando_from_wormald(&g, &ec).unwrap();
        // Interior vertices: black path 1-0-2-3 has 0, 2; white path 0-3-1-2 has 3, 1.
        assert_eq!(b.class(Colour::Black), vec![0, 2]);
        assert_eq!(b.class(Colour::White), vec![1, 3]);
    }

    #[test]
    fn k4_triangle_class_fails() {
        let g = named::k4();
        let tri = [(0, 1), (0, 2), (1, 2)];
        let colours = g.edges().iter().map(|e| if tri.contains(e) { Colour::Black } else { Colour::White }).collect();
        assert!(!verify_wormald(&g, &EdgeTwoColouring::total(colours)).unwrap());
    }

    #[test]
    fn unequal_classes_fail() {
        let g = named::k4();
        let mut colours = vec![Colour::Black; 6];
        colours[0] = Colour::White;
        assert!(!verify_wormald(&g, &EdgeTwoColouring::total(colours)).unwrap());
    }

    #[test]
    fn wrong_order_class() {
        let g = named::k33();
        assert!(find_wormald(&g).is_err());
        assert!(verify_wormald(&g, &EdgeTwoColouring::total(vec![Colour::Black; 9])).is_err());
    }

    #[test]
    fn k4_gprime_is_a_four_cycle() {
        let g = named::k4();
        let dec = gprime_decomposition(&g, &Bisection::from_black(4, &[0, 1])).unwrap();
        assert_eq!(dec.components.len(), 1);
        assert_eq!(dec.components[0].vertices.len(), 4);
        assert_eq!(dec.components[0].edges.len(), 4);
        assert_eq!(dec.components[0].kind, ComponentKind::TreePlusEdge);
    }

    #[test]
    fn solvers_on_small_graphs() {
        for g in [named::k4(), named::prism(4), named::prism(6)] {
            let a = find_strong_wormald_bisection_method(&g).unwrap();
            assert!(verify_strong_wormald(&g, &a).unwrap());
            let b = find_strong_wormald_direct(&g).unwrap();
            assert!(verify_strong_wormald(&g, &b).unwrap());
        }
        for g in [named::k33(), named::prism(3), named::prism(5)] {
            let a = find_strong_wormald_bisection_method(&g).unwrap();
            assert!(verify_strong_wormald(&g, &a).unwrap());
            let b = find_strong_wormald_direct(&g).unwrap();
            assert!(verify_strong_wormald(&g, &b).unwrap());
        }
    }

    #[test]
    fn target_matches_path_sum() {
        for n in [4, 6, 8, 10, 12, 14, 16] {
            let m = part_edge_target(n);
            let paths = n / 2 - m;
            assert_eq!(m + 2 * paths, (3 * n / 2) / 2);
        }
    }

    #[test]
    fn pair_removed_small() {
        // Each class of K4 minus two edges would need two interior vertices
        // and no paths.
        assert!(find_pair_removed_strong_wormald(&named::k4()).unwrap().is_none());
        let g = named::prism(4);
        let p = find_pair_removed_strong_wormald(&g).unwrap().unwrap();
        assert!(verify_pair_removed(&g, &p.colouring).unwrap());
    }
}
