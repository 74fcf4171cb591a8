//! Named graphs and infinite families: the modules `L_h`, the graphs
//! `T_ijk` without a 2-bisection, kernel gadgets, the `K_{3,3}` blocks
//! `E_1`/`V_1` and the graphs `G_k` without a Strong Wormald colouring.

use serde::Serialize;

use crate::colour::{Bisection, Colour};
use crate::error::{invalid, Result};
use crate::graph::{named, CubicGraph, SimpleGraph};

/// A subcubic building block. `slots` lists the vertices that still need
/// an external edge, once per missing edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Module {
    pub graph: SimpleGraph,
    pub slots: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Family {
    L,
    T,
    KernelGadget,
    E1,
    V1,
    Gk,
    Petersen,
    Heawood,
}

/// A family tag with its integer parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<usize>,
}

impl FamilySpec {
    pub fn parse(name: &str, params: &[usize]) -> Result<Self> {
        let family = match name.to_ascii_lowercase().as_str() {
            "l" => Family::L,
            "t" => Family::T,
            "kernel" | "kernel-gadget" => Family::KernelGadget,
            "e1" => Family::E1,
            "v1" => Family::V1,
            "g" | "gk" => Family::Gk,
            "petersen" => Family::Petersen,
            "heawood" => Family::Heawood,
            _ => return Err(invalid(format!("unknown family {name:?}"))),
        };
        let want = match family {
            Family::L | Family::KernelGadget | Family::Gk => 1..=1,
            Family::T => 3..=4,
            _ => 0..=0,
        };
        if !want.contains(&params.len()) {
            return Err(invalid(format!("{name} takes {want:?} parameters, got {}", params.len())));
        }
        Ok(Self { family, params: params.to_vec() })
    }

    /// The graph itself; modules come back as their subcubic graph.
    pub fn build(&self) -> Result<SimpleGraph> {
        let p = &self.params;
        Ok(match self.family {
            Family::L => build_l(p[0]).graph,
            Family::KernelGadget => build_kernel_gadget(p[0]).graph,
            Family::E1 => build_e1().graph,
            Family::V1 => build_v1().graph,
            Family::T if p.len() == 4 => build_t_with_gadget(p[0], p[1], p[2], p[3]).into_simple(),
            Family::T => build_t(p[0], p[1], p[2]).into_simple(),
            Family::Gk => build_gk(p[0])?.into_simple(),
            Family::Petersen => petersen().into_simple(),
            Family::Heawood => heawood().into_simple(),
        })
    }
}

/// Disjoint union of modules plus extra edges between global vertex ids.
/// Returns the graph and the offset of each module.
fn glue(modules: &[&Module], extra: impl Fn(&[usize]) -> Vec<(usize, usize)>) -> (SimpleGraph, Vec<usize>) {
    let mut offsets = Vec::with_capacity(modules.len());
    let mut edges = Vec::new();
    let mut n = 0;
    for m in modules {
        offsets.push(n);
        edges.extend(m.graph.edges().iter().map(|&(a, b)| (a + n, b + n)));
        n += m.graph.order();
    }
    edges.extend(extra(&offsets));
    (SimpleGraph::from_edges(n, edges).expect("modules glue into a simple graph"), offsets)
}

/// Vertex names inside `L_h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LLayout {
    /// `K_{3,3}` minus the edge `a b`: sides `{0, 1, 2}` and `{3, 4, 5}`, with
    /// `a = 0` and `b = 3`.
    pub a: usize,
    pub b: usize,
    /// Ladder rungs `(r_i, s_i)` from the `a b` end towards `w`.
    pub rungs: Vec<(usize, usize)>,
    pub w: usize,
}

fn l_layout(h: usize) -> LLayout {
    let rungs = (0..2 * h).map(|i| (6 + 2 * i, 7 + 2 * i)).collect();
    LLayout { a: 0, b: 3, rungs, w: 6 + 4 * h }
}

/// `K_{3,3}` minus an edge `a b`, joined to `w` through a ladder with `2h`
/// rungs: `a r_1 .. r_{2h} w` and `b s_1 .. s_{2h} w`. `L_0` is `K_{3,3}`
/// with one edge subdivided. The single slot is `w`.
pub fn build_l(h: usize) -> Module {
    let lay = l_layout(h);
    let mut edges: Vec<(usize, usize)> =
        (0..3).flat_map(|x| (3..6).map(move |y| (x, y))).filter(|&e| e != (lay.a, lay.b)).collect();
    let (mut pa, mut pb) = (lay.a, lay.b);
    for &(r, s) in &lay.rungs {
        edges.extend([(pa, r), (pb, s), (r, s)]);
        (pa, pb) = (r, s);
    }
    edges.extend([(pa, lay.w), (pb, lay.w)]);
    let graph = SimpleGraph::from_edges(7 + 4 * h, edges).unwrap();
    Module { graph, slots: vec![lay.w] }
}

/// `K_{2,3}` (leaves `x, p, q`) followed by `h - 1` blocks `K_{2,2}`, each
/// hung from the previous `p, q`. Slots are `x` and the last `p, q`;
/// `4h + 1` vertices. `h = 0` is a single vertex with three slots.
pub fn build_kernel_gadget(h: usize) -> Module {
    if h == 0 {
        return Module { graph: SimpleGraph::empty(1), slots: vec![0, 0, 0] };
    }
    // Centres 0, 1; leaves 2 (x), 3 (p), 4 (q).
    let mut edges: Vec<(usize, usize)> = (0..2).flat_map(|c| (2..5).map(move |l| (c, l))).collect();
    let (mut p, mut q) = (3, 4);
    let mut n = 5;
    for _ in 1..h {
        let (a, b, c, d) = (n, n + 1, n + 2, n + 3);
        edges.extend([(p, a), (q, b), (a, c), (a, d), (b, c), (b, d)]);
        (p, q) = (c, d);
        n += 4;
    }
    Module { graph: SimpleGraph::from_edges(n, edges).unwrap(), slots: vec![2, p, q] }
}

/// `T_ijk`: `L_i`, `L_j`, `L_k` and a centre joined to the three `w`s.
/// Vertices: the three modules in order, then the centre.
pub fn build_t(i: usize, j: usize, k: usize) -> CubicGraph {
    build_t_with_gadget(i, j, k, 0)
}

/// `T_ijk` with the centre replaced by the kernel gadget of parameter `h`.
pub fn build_t_with_gadget(i: usize, j: usize, k: usize, h: usize) -> CubicGraph {
    let ls = [build_l(i), build_l(j), build_l(k)];
    let kernel = build_kernel_gadget(h);
    let (g, _) = glue(&[&ls[0], &ls[1], &ls[2], &kernel], |off| {
        (0..3).map(|t| (off[t] + ls[t].slots[0], off[3] + kernel.slots[t])).collect()
    });
    CubicGraph::new(g).expect("T is cubic")
}

/// `K_{3,3}` minus the edge `0 3`; slots `0` and `3`.
pub fn build_e1() -> Module {
    let edges = (0..3).flat_map(|x| (3..6).map(move |y| (x, y))).filter(|&e| e != (0, 3));
    Module { graph: SimpleGraph::from_edges(6, edges).unwrap(), slots: vec![0, 3] }
}

/// `K_{3,3}` minus a vertex: `K_{2,3}` with centres `0, 1` and slots at the
/// leaves `2, 3, 4`.
pub fn build_v1() -> Module {
    let edges = (0..2).flat_map(|c| (2..5).map(move |l| (c, l)));
    Module { graph: SimpleGraph::from_edges(5, edges).unwrap(), slots: vec![2, 3, 4] }
}

/// Two copies of `V_1` joined by a direct edge, by a path through one `E_1`,
/// and by a path through `2k` consecutive copies of `E_1`.
/// `|V(G_k)| = 28 + 12(k - 1)`.
pub fn build_gk(k: usize) -> Result<CubicGraph> {
    if k == 0 {
        return Err(invalid("G_k needs k >= 1"));
    }
    Ok(gk_with_chain(2 * k))
}

/// The chain length 0 gives the 16-vertex graph that the `G_k` are built
/// from.
pub(crate) fn gk_with_chain(copies: usize) -> CubicGraph {
    let v1 = build_v1();
    let e1 = build_e1();
    let mut modules = vec![&v1, &v1, &e1];
    modules.extend(std::iter::repeat_n(&e1, copies));
    let (g, _) = glue(&modules, |off| {
        let (x, y) = (off[0], off[1]);
        let mut extra = vec![(x + v1.slots[0], y + v1.slots[0])];
        // Single E_1 between the second slots.
        extra.push((x + v1.slots[1], off[2] + e1.slots[0]));
        extra.push((off[2] + e1.slots[1], y + v1.slots[1]));
        // Chain between the third slots.
        let mut prev = x + v1.slots[2];
        for &o in &off[3..] {
            extra.push((prev, o + e1.slots[0]));
            prev = o + e1.slots[1];
        }
        extra.push((prev, y + v1.slots[2]));
        extra
    });
    CubicGraph::new(g).expect("G_k is cubic")
}

/// GP(5, 2): outer cycle `0..5`, spokes `i, i + 5`, inner pentagram.
pub fn petersen() -> CubicGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    CubicGraph::from_edges(10, edges).unwrap()
}

/// Incidence graph of the Fano plane: points `0..7`, lines `7..14`, line
/// `i` is `{i, i + 1, i + 3} mod 7`.
pub fn heawood() -> CubicGraph {
    let edges = (0..7).flat_map(|i| [0, 1, 3].map(|d| ((i + d) % 7, 7 + i)));
    CubicGraph::from_edges(14, edges).unwrap()
}

/// Heawood as LCF `[5, -5]^7`.
pub fn heawood_lcf() -> CubicGraph {
    named::lcf(&[5, -5], 7)
}

fn t_base_letters(hs: [usize; 3]) -> &'static str {
    match hs {
        [0, 0, 0] => T_BASE_000,
        [1, 0, 0] => T_BASE_100,
        [1, 1, 0] => T_BASE_110,
        _ => T_BASE_111,
    }
}

// 3-bisections of `T_ijk` with `i >= j >= k` in `{0, 1}`, in the vertex
// order of `build_t`. In every `L_1` the two rungs read `(c, ¬c)` then
// `(¬c, c)`.
const T_BASE_000: &str = "BWWBBBWWBBWWWBWBBWWWBB";
const T_BASE_100: &str = "BBWWBWWBBWBBBWBWWWBBBWWWWB";
const T_BASE_110: &str = "BBWWBWWBBWBBBWBWWWBBWWBBWBWWWB";
const T_BASE_111: &str = "BBWWBWWBBWBBBWBWWWBBWWBWWBBWWBBWWB";

/// A 3-bisection of `T_ijk` whose parts are isomorphic linear forests.
///
/// Starts from a fixed colouring of the graph with every `h` capped at 1,
/// then inserts pairs of rungs between the first two rungs of each `L_h`
/// with `h >= 2`. With the first two rungs coloured `(c, ¬c), (¬c, c)`, the
/// inserted pair is coloured the same way, so all four new vertices are
/// isolated in their class and the rail edges stay bichromatic.
pub fn three_bisection_t(i: usize, j: usize, k: usize) -> Bisection {
    let hs = [i, j, k];
    let capped = hs.map(|h| h.min(1));
    let mut order = [0, 1, 2];
    // Base colourings are stored for non-increasing parameters.
    order.sort_by_key(|&t| std::cmp::Reverse(capped[t]));
    let sorted = order.map(|t| capped[t]);
    let base = Bisection::from_letters(t_base_letters(sorted)).expect("stored colouring");
    let base_g = build_t(sorted[0], sorted[1], sorted[2]);
    debug_assert_eq!(base.len(), base_g.order());
    // Per-module colours in the base, by slot.
    let mut module_colours: Vec<Vec<Colour>> = Vec::new();
    let mut off = 0;
    for &h in &sorted {
        let len = 7 + 4 * h;
        module_colours.push(base.colours()[off..off + len].to_vec());
        off += len;
    }
    let centre = base.colour(off);
    let mut colours = Vec::new();
    for (t, &h) in hs.iter().enumerate() {
        let slot = order.iter().position(|&x| x == t).unwrap();
        colours.extend(expand_l(&module_colours[slot], h));
    }
    colours.push(centre);
    Bisection::new(colours)
}

/// Colours of `L_h` from those of `L_0` or `L_1`.
fn expand_l(base: &[Colour], h: usize) -> Vec<Colour> {
    if h <= 1 {
        return base.to_vec();
    }
    let small = l_layout(1);
    let big = l_layout(h);
    let mut out = vec![Colour::Black; 7 + 4 * h];
    out[..6].copy_from_slice(&base[..6]);
    out[big.w] = base[small.w];
    let (r1, s1) = small.rungs[0];
    let (r2, s2) = small.rungs[1];
    let c = base[r1];
    debug_assert!(base[s1] == c.flip() && base[r2] == c.flip() && base[s2] == c);
    let n = big.rungs.len();
    for (q, &(r, s)) in big.rungs.iter().enumerate() {
        let (cr, cs) = if q == n - 1 {
            (base[r2], base[s2])
        } else if q % 2 == 0 {
            (c, c.flip())
        } else {
            (c.flip(), c)
        };
        out[r] = cr;
        out[s] = cs;
    }
    out
}

/// Petersen colourings on the labelling of [`petersen`]: a 3-bisection, a
/// bisection with isomorphic parts (the two 5-cycles), and a 4-bisection
/// whose parts are isomorphic linear forests.
pub mod petersen_fixtures {
    use crate::colour::Bisection;

    pub fn three_bisection() -> Bisection {
        Bisection::from_letters(PETERSEN_3).unwrap()
    }

    pub fn cycles() -> Bisection {
        Bisection::from_black(10, &[0, 1, 2, 3, 4])
    }

    pub fn four_bisection_linear_forests() -> Bisection {
        Bisection::from_letters(PETERSEN_4).unwrap()
    }

    const PETERSEN_3: &str = "BBBWWWWWBB";
    const PETERSEN_4: &str = "BBBBWWWWWB";
}
