//! Edge 2-colourings of cubic graphs into two k-linear forests, the
//! isomorphic variant, and colourings whose monochromatic components have
//! at most four edges.

use serde::Serialize;

use crate::budget::{Budget, Outcome};
use crate::colour::{Colour, EdgeTwoColouring};
use crate::error::{invalid, Result};
use crate::graph::{CubicGraph, SimpleGraph};
use crate::search::{path_lengths, search_edge_colourings, Dsu, EdgeRules};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoForestDecomposition {
    pub colouring: EdgeTwoColouring,
    /// Sorted path lengths of the black and white forests.
    pub black_paths: Vec<usize>,
    pub white_paths: Vec<usize>,
    pub k: usize,
}

impl TwoForestDecomposition {
    fn new(g: &SimpleGraph, colours: Vec<Option<Colour>>, k: usize) -> Self {
        Self {
            black_paths: path_lengths(g, &colours, Colour::Black),
            white_paths: path_lengths(g, &colours, Colour::White),
            colouring: EdgeTwoColouring::partial(colours),
            k,
        }
    }

    pub fn path_count(&self) -> usize {
        self.black_paths.len() + self.white_paths.len()
    }
}

/// Both classes are linear forests with paths of at most `k` edges.
pub fn is_two_k_linear_forests(g: &SimpleGraph, c: &EdgeTwoColouring, k: usize) -> Result<bool> {
    c.check_len(g)?;
    if !c.is_total() {
        return Ok(false);
    }
    Ok([Colour::Black, Colour::White].into_iter().all(|col| {
        component_stats(g, c, col).iter().all(|s| s.is_path() && s.edges <= k)
    }))
}

/// Checks the counting facts that every decomposition of a cubic graph into
/// two linear forests satisfies: each vertex meets one forest once and the
/// other twice, there are `n/2` paths, and their mean length is 3.
pub fn decomposition_counts_hold(g: &CubicGraph, d: &TwoForestDecomposition) -> bool {
    let n = g.order();
    let pattern = (0..n).all(|v| {
        let black = g.incident(v).iter().filter(|&&e| d.colouring.colour(e) == Some(Colour::Black)).count();
        black == 1 || black == 2
    });
    let total: usize = d.black_paths.iter().chain(&d.white_paths).sum();
    pattern && d.path_count() * 2 == n && total == 3 * d.path_count()
}

pub fn find_two_k_linear_forests(g: &CubicGraph, k: usize) -> Option<TwoForestDecomposition> {
    find_two_k_linear_forests_within(g, k, &Budget::unlimited()).unlimited()
}

pub fn find_two_k_linear_forests_within(g: &CubicGraph, k: usize, budget: &Budget) -> Outcome<TwoForestDecomposition> {
    let rules = EdgeRules { linear: true, max_component_edges: Some(k), ..Default::default() };
    search_edge_colourings(g, &rules, budget, |_| true).map(|c| TwoForestDecomposition::new(g, c, k))
}

/// Two k-linear forests with the same path-length multiset. Needs
/// `|V| ≡ 0 (mod 4)` so that the classes can have equal size.
pub fn find_two_isomorphic_k_linear_forests(g: &CubicGraph, k: usize) -> Result<Option<TwoForestDecomposition>> {
    Ok(find_two_isomorphic_k_linear_forests_within(g, k, &Budget::unlimited())?.unlimited())
}

pub fn find_two_isomorphic_k_linear_forests_within(
    g: &CubicGraph,
    k: usize,
    budget: &Budget,
) -> Result<Outcome<TwoForestDecomposition>> {
    if !g.order().is_multiple_of(4) {
        return Err(invalid(format!("order {} is not divisible by 4", g.order())));
    }
    let rules =
        EdgeRules { linear: true, max_component_edges: Some(k), class_size: Some(g.size() / 2), ..Default::default() };
    Ok(search_edge_colourings(g, &rules, budget, |c| {
        path_lengths(g, c, Colour::Black) == path_lengths(g, c, Colour::White)
    })
    .map(|c| TwoForestDecomposition::new(g, c, k)))
}

/// Every monochromatic component (any shape) has at most four edges.
pub fn find_two_colouring_max4_edge_components(g: &CubicGraph) -> Option<EdgeTwoColouring> {
    find_two_colouring_max4_edge_components_within(g, &Budget::unlimited()).unlimited()
}

pub fn find_two_colouring_max4_edge_components_within(g: &CubicGraph, budget: &Budget) -> Outcome<EdgeTwoColouring> {
    let rules = EdgeRules { max_component_edges: Some(4), ..Default::default() };
    search_edge_colourings(g, &rules, budget, |_| true).map(EdgeTwoColouring::partial)
}

/// Every such colouring, with edge 0 black (colour swaps are not listed).
pub fn all_two_colourings_max4_edge_components(g: &CubicGraph) -> Vec<EdgeTwoColouring> {
    let rules = EdgeRules { max_component_edges: Some(4), ..Default::default() };
    let mut out = Vec::new();
    search_edge_colourings(g, &rules, &Budget::unlimited(), |c| {
        out.push(EdgeTwoColouring::partial(c.to_vec()));
        false
    });
    out
}

/// Edge counts of the monochromatic components of colour `c`, descending.
pub fn component_edge_counts(g: &SimpleGraph, c: &EdgeTwoColouring, col: Colour) -> Vec<usize> {
    let mut v: Vec<usize> = component_stats(g, c, col).iter().map(|s| s.edges).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

struct ComponentStats {
    vertices: usize,
    edges: usize,
    max_degree: usize,
}

impl ComponentStats {
    fn is_path(&self) -> bool {
        self.max_degree <= 2 && self.edges + 1 == self.vertices
    }
}

/// Components spanned by the edges of one colour; vertices with no such
/// edge are skipped.
fn component_stats(g: &SimpleGraph, c: &EdgeTwoColouring, col: Colour) -> Vec<ComponentStats> {
    let n = g.order();
    let mut dsu = Dsu::new(n);
    let mut deg = vec![0; n];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if c.colour(e) == Some(col) {
            dsu.add_edge(u, v);
            deg[u] += 1;
            deg[v] += 1;
        }
    }
    let mut max_deg = vec![0; n];
    for (v, &d) in deg.iter().enumerate() {
        let r = dsu.find(v);
        max_deg[r] = max_deg[r].max(d);
    }
    (0..n)
        .filter(|&v| dsu.find(v) == v && max_deg[v] > 0)
        .map(|r| ComponentStats { vertices: dsu.verts(r), edges: dsu.edges(r), max_degree: max_deg[r] })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::heawood;
    use crate::graph::named;

    #[test]
    fn heawood_bounds() {
        let h = heawood();
        assert!(find_two_k_linear_forests(&h, 4).is_none());
        let d = find_two_k_linear_forests(&h, 5).unwrap();
        assert!(is_two_k_linear_forests(&h, &d.colouring, 5).unwrap());
        assert!(decomposition_counts_hold(&h, &d));
        assert!(find_two_colouring_max4_edge_components(&h).is_some());
    }

    #[test]
    fn order_six() {
        for g in [named::k33(), named::prism(3)] {
            assert!(find_two_k_linear_forests(&g, 4).is_none());
            let d = find_two_k_linear_forests(&g, 5).unwrap();
            assert!(decomposition_counts_hold(&g, &d));
            assert!(find_two_colouring_max4_edge_components(&g).is_some());
        }
    }

    #[test]
    fn k33_unique_up_to_symmetry() {
        let g = named::k33();
        let gs = g.as_simple();
        let all = all_two_colourings_max4_edge_components(&g);
        assert!(!all.is_empty());
        let autos: Vec<Vec<usize>> = permutations(6)
            .into_iter()
            .filter(|p| gs.edges().iter().all(|&(u, v)| gs.has_edge(p[u], p[v])))
            .collect();
        assert_eq!(autos.len(), 72);
        // Canonical representative: the least image over automorphisms and swaps.
        let key = |c: &EdgeTwoColouring| {
            autos
                .iter()
                .flat_map(|p| {
                    let mut img = vec![None; 9];
                    for (e, &(u, v)) in gs.edges().iter().enumerate() {
                        img[gs.edge_index(p[u], p[v]).unwrap()] = c.colour(e);
                    }
                    let img = EdgeTwoColouring::partial(img);
                    [img.colours().to_vec(), img.swapped().colours().to_vec()]
                })
                .min()
                .unwrap()
        };
        let mut keys: Vec<_> = all.iter().map(key).collect();
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), 1);
        let counts = [Colour::Black, Colour::White].map(|c| component_edge_counts(gs, &all[0], c));
        assert_eq!(counts.iter().flatten().filter(|&&x| x == 4).count(), 1);
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn k4_isomorphic() {
        let g = named::k4();
        let d = find_two_isomorphic_k_linear_forests(&g, 3).unwrap().unwrap();
        assert_eq!((d.black_paths.clone(), d.white_paths.clone()), (vec![3], vec![3]));
        assert!(find_two_isomorphic_k_linear_forests(&g, 2).unwrap().is_none());
        assert!(find_two_isomorphic_k_linear_forests(&named::k33(), 4).is_err());
    }

    #[test]
    fn k4_two_exhaustive() {
        // No colouring of the six edges gives two isomorphic 2-linear forests.
        let g = named::k4();
        for mask in 0u32..64 {
            let c = EdgeTwoColouring::total(
                (0..6).map(|e| if mask >> e & 1 == 1 { Colour::Black } else { Colour::White }).collect(),
            );
            let iso = is_two_k_linear_forests(&g, &c, 2).unwrap()
                && path_lengths(&g, c.colours(), Colour::Black) == path_lengths(&g, c.colours(), Colour::White);
            assert!(!iso);
        }
    }

    #[test]
    fn rejects_partial() {
        let g = named::k4();
        let c = EdgeTwoColouring::partial(vec![None; 6]);
        assert!(!is_two_k_linear_forests(&g, &c, 3).unwrap());
        assert!(is_two_k_linear_forests(&g, &EdgeTwoColouring::partial(vec![]), 3).is_err());
    }
}
