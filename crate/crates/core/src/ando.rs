//! Ando colourings: bisections with isomorphic monochromatic parts, and
//! the strong form where both parts are linear forests.

use serde::Serialize;

use crate::budget::{Budget, Outcome};
use crate::canon::{isomorphism, CanonicalCode};
use crate::colour::{Bisection, Colour};
use crate::error::{invalid, Error, Result};
use crate::graph::{CubicGraph, SimpleGraph};
use crate::search::{search_bisections, VertexRules};
use crate::structure::{component_signature, signature_of_mask};

/// Sorted path lengths (edges) of a linear forest; an isolated vertex
/// counts as a path of length 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LinearForestSignature(pub Vec<usize>);

/// Sorted canonical codes of the components of one colour class.
pub type PartSignature = Vec<CanonicalCode>;

pub fn linear_forest_signature(g: &SimpleGraph, subset: &[usize]) -> Result<LinearForestSignature> {
    let mut mask = vec![false; g.order()];
    for &v in subset {
        if v >= g.order() {
            return Err(invalid(format!("vertex {v} out of range")));
        }
        mask[v] = true;
    }
    lf_signature_of_mask(g, &mask)
}

pub(crate) fn lf_signature_of_mask(g: &SimpleGraph, mask: &[bool]) -> Result<LinearForestSignature> {
    let mut lengths = Vec::new();
    for comp in g.induced_components(mask) {
        let mut edges2 = 0;
        for &v in &comp {
            let d = g.neighbours(v).iter().filter(|&&w| mask[w]).count();
            if d > 2 {
                return Err(Error::NotLinearForest { witness: v });
            }
            edges2 += d;
        }
        let edges = edges2 / 2;
        if edges >= comp.len() {
            return Err(Error::NotLinearForest { witness: comp[0] });
        }
        lengths.push(edges);
    }
    lengths.sort_unstable();
    Ok(LinearForestSignature(lengths))
}

pub fn is_ando(g: &SimpleGraph, c: &Bisection) -> Result<bool> {
    c.check_len(g)?;
    if !c.is_balanced() {
        return Ok(false);
    }
    Ok(parts_isomorphic(g, c.colours()))
}

pub fn is_strong_ando(g: &SimpleGraph, c: &Bisection) -> Result<bool> {
    c.check_len(g)?;
    if !c.is_balanced() {
        return Ok(false);
    }
    let b = lf_signature_of_mask(g, &c.mask(Colour::Black));
    let w = lf_signature_of_mask(g, &c.mask(Colour::White));
    Ok(matches!((b, w), (Ok(b), Ok(w)) if b == w))
}

/// Cheap invariant first (sorted component (order, size) pairs), then
/// canonical codes of the components.
fn parts_isomorphic(g: &SimpleGraph, colours: &[Colour]) -> bool {
    let masks = [Colour::Black, Colour::White].map(|c| colours.iter().map(|&x| x == c).collect::<Vec<_>>());
    let shapes = masks.clone().map(|m| component_shapes(g, &m));
    if shapes[0] != shapes[1] {
        return false;
    }
    signature_of_mask(g, &masks[0]) == signature_of_mask(g, &masks[1])
}

fn component_shapes(g: &SimpleGraph, mask: &[bool]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = g
        .induced_components(mask)
        .iter()
        .map(|comp| {
            let e2: usize = comp.iter().map(|&v| g.neighbours(v).iter().filter(|&&w| mask[w]).count()).sum();
            (comp.len(), e2 / 2)
        })
        .collect();
    out.sort_unstable();
    out
}

/// Searches only bisections whose parts have maximum degree 2; any Ando
/// colouring can be reduced to one of these.
pub fn find_ando(g: &CubicGraph) -> Option<Bisection> {
    find_ando_within(g, &Budget::unlimited()).unlimited()
}

pub fn find_ando_within(g: &CubicGraph, budget: &Budget) -> Outcome<Bisection> {
    let rules = VertexRules { max_degree: Some(2), ..Default::default() };
    search_bisections(g, rules, budget, |colours| parts_isomorphic(g, colours)).map(Bisection::new)
}

/// A k-bisection whose parts are isomorphic linear forests.
pub fn find_k_bisection_iso_linear_forests(g: &CubicGraph, k: usize) -> Option<Bisection> {
    find_k_bisection_iso_linear_forests_within(g, k, &Budget::unlimited()).unlimited()
}

pub fn find_k_bisection_iso_linear_forests_within(g: &CubicGraph, k: usize, budget: &Budget) -> Outcome<Bisection> {
    let rules = VertexRules { max_component: Some(k.max(1)), max_degree: Some(2), forbid_cycles: true, ..Default::default() };
    search_bisections(g, rules, budget, |colours| {
        let b = Bisection::new(colours.to_vec());
        is_strong_ando(g, &b).unwrap_or(false)
    })
    .map(Bisection::new)
}

/// Strong Ando colouring with no bound on component order.
pub fn find_strong_ando(g: &CubicGraph) -> Option<Bisection> {
    find_k_bisection_iso_linear_forests(g, g.order())
}

/// Smallest k admitting a k-bisection with isomorphic linear-forest parts.
pub fn minimal_iso_linear_forest_k(g: &CubicGraph) -> Option<usize> {
    (1..=g.order()).find(|&k| find_k_bisection_iso_linear_forests(g, k).is_some())
}

/// Repeatedly swaps a smallest-index vertex of degree 3 inside its part
/// with its image in the other part under an isomorphism of the parts.
pub fn reduce_to_max_degree_2(g: &SimpleGraph, c: &Bisection) -> Result<Bisection> {
    if !is_ando(g, c)? {
        return Err(invalid("input colouring is not an Ando colouring"));
    }
    let mut c = c.clone();
    let mut before = degree3_count(g, &c);
    while let Some(v1) = (0..g.order()).find(|&v| part_degree(g, &c, v) == 3) {
        let own = c.class(c.colour(v1));
        let other = c.class(c.colour(v1).flip());
        let ga = g.induced_subgraph(&own);
        let gb = g.induced_subgraph(&other);
        let iso = isomorphism(&ga, &gb).expect("parts of an Ando colouring are isomorphic");
        let i1 = own.binary_search(&v1).unwrap();
        let v2 = other[iso[i1]];
        let (c1, c2) = (c.colour(v1), c.colour(v2));
        c.set(v1, c2);
        c.set(v2, c1);
        let after = degree3_count(g, &c);
        debug_assert!(after < before, "switch must remove degree-3 vertices");
        before = after;
    }
    debug_assert!(is_ando(g, &c).unwrap());
    Ok(c)
}

fn part_degree(g: &SimpleGraph, c: &Bisection, v: usize) -> usize {
    g.neighbours(v).iter().filter(|&&w| c.colour(w) == c.colour(v)).count()
}

pub(crate) fn degree3_count(g: &SimpleGraph, c: &Bisection) -> usize {
    (0..g.order()).filter(|&v| part_degree(g, c, v) == 3).count()
}

/// Signatures of both parts, black first.
pub fn part_signatures(g: &SimpleGraph, c: &Bisection) -> (PartSignature, PartSignature) {
    (component_signature(g, &c.class(Colour::Black)), component_signature(g, &c.class(Colour::White)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn signatures() {
        let path = SimpleGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(linear_forest_signature(&path, &[0, 1, 2, 3]).unwrap().0, vec![3]);
        let tri = SimpleGraph::from_edges(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(matches!(linear_forest_signature(&tri, &[0, 1, 2]), Err(Error::NotLinearForest { .. })));
        let g = SimpleGraph::from_edges(5, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(linear_forest_signature(&g, &[0, 1, 2, 3, 4]).unwrap().0, vec![0, 1, 1]);
        let star = SimpleGraph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(linear_forest_signature(&star, &[0, 1, 2, 3]), Err(Error::NotLinearForest { witness: 0 }));
    }

    #[test]
    fn two_triangles_are_ando_not_strong() {
        let g = named::prism(3);
        let c = Bisection::from_black(6, &[0, 1, 2]);
        assert!(is_ando(&g, &c).unwrap());
        assert!(!is_strong_ando(&g, &c).unwrap());
    }

    #[test]
    fn reduction_fixed_point_and_progress() {
        let g = named::k4();
        let c = Bisection::from_black(4, &[0, 1]);
        assert_eq!(reduce_to_max_degree_2(&g, &c).unwrap(), c);
        // 2K4 coloured by copy: each part is a K4 with four degree-3 vertices.
        let gg = named::k4().disjoint_union(&named::k4());
        let c = Bisection::from_black(8, &[0, 1, 2, 3]);
        let r = reduce_to_max_degree_2(&gg, &c).unwrap();
        assert!(is_ando(&gg, &r).unwrap());
        assert_eq!(degree3_count(&gg, &r), 0);
        assert!(reduce_to_max_degree_2(&gg, &Bisection::from_black(8, &[0, 1, 2])).is_err());
    }

    #[test]
    fn finds_on_small_graphs() {
        assert!(find_ando(&named::k4()).is_some());
        assert!(find_k_bisection_iso_linear_forests(&named::k33(), 3).is_some());
    }
}
