//! k-bisections: balanced vertex 2-colourings whose monochromatic
//! components have at most k vertices.

use serde::Serialize;

use crate::budget::{Budget, Outcome};
use crate::colour::{Bisection, Colour, EdgeColouring3};
use crate::error::{invalid, Result};
use crate::graph::{CubicGraph, SimpleGraph};
use crate::scan::{run_scan, Property, ScanBudget, ScanReport};
use crate::search::{search_bisections, VertexRules};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum BisectionFailure {
    Unbalanced { black: usize, white: usize },
    ComponentTooLarge { colour: Colour, component: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KBisectionWitness {
    pub bisection: Bisection,
    pub k: usize,
    /// Component orders of the black part, descending.
    pub black_components: Vec<usize>,
    pub white_components: Vec<usize>,
}

impl KBisectionWitness {
    fn new(g: &SimpleGraph, bisection: Bisection, k: usize) -> Self {
        let orders = |c: Colour| {
            let mut v: Vec<usize> = g.induced_components(&bisection.mask(c)).iter().map(Vec::len).collect();
            v.sort_unstable_by(|a, b| b.cmp(a));
            v
        };
        Self { black_components: orders(Colour::Black), white_components: orders(Colour::White), bisection, k }
    }
}

/// Checks balance, then component orders. `Ok(None)` means `c` is a
/// k-bisection; otherwise the first violated condition is returned.
pub fn verify_k_bisection(g: &SimpleGraph, c: &Bisection, k: usize) -> Result<Option<BisectionFailure>> {
    c.check_len(g)?;
    let black = c.count(Colour::Black);
    let white = c.len() - black;
    if black != white {
        return Ok(Some(BisectionFailure::Unbalanced { black, white }));
    }
    for colour in [Colour::Black, Colour::White] {
        if let Some(comp) = g.induced_components(&c.mask(colour)).into_iter().find(|comp| comp.len() > k) {
            return Ok(Some(BisectionFailure::ComponentTooLarge { colour, component: comp }));
        }
    }
    Ok(None)
}

pub fn is_k_bisection(g: &SimpleGraph, c: &Bisection, k: usize) -> bool {
    matches!(verify_k_bisection(g, c, k), Ok(None))
}

pub fn find_k_bisection(g: &CubicGraph, k: usize) -> Option<KBisectionWitness> {
    find_k_bisection_within(g, k, &Budget::unlimited()).unlimited()
}

pub fn find_k_bisection_within(g: &CubicGraph, k: usize, budget: &Budget) -> Outcome<KBisectionWitness> {
    let rules = VertexRules { max_component: Some(k.max(1)), ..Default::default() };
    search_bisections(g, rules, budget, |_| true)
        .map(|colours| KBisectionWitness::new(g, Bisection::new(colours), k))
}

/// Calls `visit` on every k-bisection with vertex 0's colour class fixed by
/// the search order; returns the number visited.
pub fn for_each_k_bisection(g: &CubicGraph, k: usize, mut visit: impl FnMut(&Bisection)) -> usize {
    let rules = VertexRules { max_component: Some(k.max(1)), ..Default::default() };
    let mut count = 0;
    search_bisections(g, rules, &Budget::unlimited(), |colours| {
        count += 1;
        visit(&Bisection::new(colours.to_vec()));
        false
    });
    count
}

/// Per-order counts of graphs without a k-bisection, with their graph6
/// codes.
pub fn scan_no_k_bisection(graphs: &[CubicGraph], k: usize) -> ScanReport {
    run_scan(graphs, Property::KBisection { k }, ScanBudget::default())
}

/// Two colour classes of a proper 3-edge-colouring form a 2-factor of even
/// cycles; colouring each cycle alternately gives a 2-bisection.
pub fn two_bisection_from_3ec(g: &CubicGraph, ec: &EdgeColouring3) -> Result<KBisectionWitness> {
    if ec.colours().len() != g.size() {
        return Err(invalid("edge colouring does not match the graph"));
    }
    let ec = EdgeColouring3::new(g, ec.colours().to_vec())?;
    let n = g.order();
    let mut colour: Vec<Option<Colour>> = vec![None; n];
    for start in 0..n {
        if colour[start].is_some() {
            continue;
        }
        let mut c = Colour::Black;
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            colour[cur] = Some(c);
            let next = g
                .nbrs(cur)
                .iter()
                .zip(g.incident(cur))
                .find(|&(&w, &e)| ec.colour(e) < 2 && w != prev && colour[w].is_none())
                .map(|(&w, _)| w);
            match next {
                Some(w) => {
                    prev = cur;
                    cur = w;
                    c = c.flip();
                }
                None => break,
            }
        }
    }
    let b = Bisection::new(colour.into_iter().map(Option::unwrap).collect());
    if let Some(f) = verify_k_bisection(g, &b, 2)? {
        return Err(invalid(format!("alternating colouring is not a 2-bisection: {f:?}")));
    }
    Ok(KBisectionWitness::new(g, b, 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use crate::structure::proper_3_edge_colouring;

    #[test]
    fn k4_examples() {
        let g = named::k4();
        assert_eq!(verify_k_bisection(&g, &Bisection::from_black(4, &[0, 1]), 2).unwrap(), None);
        let unbalanced = Bisection::from_black(4, &[0, 1, 2]);
        for k in 1..5 {
            assert!(matches!(
                verify_k_bisection(&g, &unbalanced, k).unwrap(),
                Some(BisectionFailure::Unbalanced { black: 3, white: 1 })
            ));
        }
        assert!(verify_k_bisection(&g, &Bisection::from_black(3, &[0]), 2).is_err());
    }

    #[test]
    fn bipartite_graph_has_1_bisection() {
        let w = find_k_bisection(&named::k33(), 1).unwrap();
        assert_eq!(w.black_components, vec![1, 1, 1]);
    }

    #[test]
    fn from_edge_colouring() {
        for g in [named::k4(), named::k33(), named::prism(3), named::prism(6)] {
            let ec = proper_3_edge_colouring(&g).unwrap();
            let w = two_bisection_from_3ec(&g, &ec).unwrap();
            assert!(is_k_bisection(&g, &w.bisection, 2));
        }
    }
}
