//! Cycle permutation graphs C(n, p) and generalised Petersen graphs, with a
//! constructive 2-bisection for every cycle permutation graph other than
//! the Petersen graph.
//!
//! Labelling: the outer cycle C1 is `u_0..u_{n-1}` (vertices `0..n`), the
//! inner cycle C2 is `v_0..v_{n-1}` (vertices `n..2n`), and the spokes are
//! `v_i u_{p_i}`.

use serde::Serialize;
use thiserror::Error;

use crate::bisection::{find_k_bisection, two_bisection_from_3ec, verify_k_bisection};
use crate::canon::{are_isomorphic, canonical_code};
use crate::colour::{Bisection, Colour, EdgeColouring3};
use crate::error::{invalid, Error};
use crate::graph::CubicGraph;
use crate::structure::proper_3_edge_colouring;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CpgError {
    #[error("the Petersen graph has no 2-bisection")]
    PetersenException,
    #[error(transparent)]
    Invalid(#[from] Error),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CpgSpec {
    n: usize,
    p: Vec<usize>,
}

impl CpgSpec {
    pub fn new(p: Vec<usize>) -> Result<Self, Error> {
        let n = p.len();
        if n < 3 {
            return Err(invalid("cycle permutation graphs need n >= 3"));
        }
        let mut seen = vec![false; n];
        for &x in &p {
            if x >= n || seen[x] {
                return Err(invalid(format!("{p:?} is not a permutation of 0..{n}")));
            }
            seen[x] = true;
        }
        Ok(Self { n, p })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn perm(&self) -> &[usize] {
        &self.p
    }

    pub fn p(&self, i: usize) -> usize {
        self.p[i % self.n]
    }

    pub fn inverse(&self) -> CpgSpec {
        let mut q = vec![0; self.n];
        for (i, &x) in self.p.iter().enumerate() {
            q[x] = i;
        }
        CpgSpec { n: self.n, p: q }
    }

    /// `p̄_i = n - p_i mod n`.
    pub fn bar(&self) -> CpgSpec {
        CpgSpec { n: self.n, p: self.p.iter().map(|&x| (self.n - x) % self.n).collect() }
    }

    pub fn u(&self, i: usize) -> usize {
        i % self.n
    }

    pub fn v(&self, i: usize) -> usize {
        self.n + i % self.n
    }

    /// The other endpoint of the spoke at `w`.
    pub fn partner(&self, w: usize) -> usize {
        if w < self.n {
            self.v(self.p.iter().position(|&x| x == w).unwrap())
        } else {
            self.u(self.p[w - self.n])
        }
    }

    /// Generalised Petersen graph GP(n, k) with gcd(n, k) = 1, with the inner
    /// cycle relabelled `v_i = GP's v_{ik}`.
    pub fn from_gp(n: usize, k: usize) -> Result<Self, Error> {
        check_gp(n, k)?;
        if gcd(n, k) != 1 {
            return Err(invalid(format!("GP({n},{k}) has a disconnected inner part")));
        }
        Self::new((0..n).map(|i| i * k % n).collect())
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn check_gp(n: usize, k: usize) -> Result<(), Error> {
    if !(2 <= 2 * k && 2 * k < n) {
        return Err(invalid(format!("GP({n},{k}) needs 2 <= 2k < n")));
    }
    Ok(())
}

pub fn build_cpg(spec: &CpgSpec) -> CubicGraph {
    let n = spec.n;
    let mut edges = Vec::with_capacity(3 * n);
    for i in 0..n {
        edges.push((spec.u(i), spec.u(i + 1)));
        edges.push((spec.v(i), spec.v(i + 1)));
        edges.push((spec.v(i), spec.u(spec.p[i])));
    }
    CubicGraph::from_edges(2 * n, edges).expect("a permutation gives a simple cubic graph")
}

/// GP(n, k): `u_i = i`, `v_i = n + i`, edges `u_i u_{i+1}`, `u_i v_i`,
/// `v_i v_{i+k}`.
pub fn build_gp(n: usize, k: usize) -> Result<CubicGraph, Error> {
    check_gp(n, k)?;
    let mut edges = Vec::with_capacity(3 * n);
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((i, n + i));
        edges.push((n + i, n + (i + k) % n));
    }
    CubicGraph::from_edges(2 * n, edges)
}

/// How a normalized spec relates to the original: normalized `u_j` is the
/// original `u_{shift + j}`, or `u_{shift - j}` when reflected. C2 is
/// unchanged.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Transform {
    pub shift: usize,
    pub reflected: bool,
}

impl Transform {
    /// `map[w]` is the original vertex for normalized vertex `w`.
    pub fn vertex_map(&self, n: usize) -> Vec<usize> {
        (0..2 * n)
            .map(|w| {
                if w >= n {
                    w
                } else if self.reflected {
                    (self.shift + n - w) % n
                } else {
                    (self.shift + w) % n
                }
            })
            .collect()
    }
}

/// Rotates C1 so that `p_0 = 0`, then reflects it if `p_1` is odd. For odd
/// `n` the result has `p_1` even.
pub fn normalize(spec: &CpgSpec) -> (CpgSpec, Transform) {
    let n = spec.n;
    let shift = spec.p[0];
    let mut p: Vec<usize> = spec.p.iter().map(|&x| (x + n - shift) % n).collect();
    let reflected = n % 2 == 1 && p[1] % 2 == 1;
    if reflected {
        p = p.iter().map(|&x| (n - x) % n).collect();
    }
    (CpgSpec { n, p }, Transform { shift, reflected })
}

/// `(p_{i+1} - p_i) mod n`: the length of the C1 path from `u_{p_i}` forward
/// to `u_{p_{i+1}}`.
pub fn gap(spec: &CpgSpec, i: usize) -> usize {
    (spec.p(i + 1) + spec.n - spec.p(i)) % spec.n
}

pub fn inverse_gap(spec: &CpgSpec, i: usize) -> usize {
    gap(&spec.inverse(), i)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ConfigSource {
    OddGap,
    EvenInverseGap,
    Exhaustive,
}

/// Six vertices: `a_r, a_{r+1}, a` on C1 and `b_s, b_{s+1}, b` on C2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GoodConfiguration {
    pub a_r: usize,
    pub a_r1: usize,
    pub a: usize,
    pub b_s: usize,
    pub b_s1: usize,
    pub b: usize,
    pub source: ConfigSource,
}

/// Position of `w` on its own cycle.
fn pos(spec: &CpgSpec, w: usize) -> usize {
    w % spec.n
}

/// Length of the path from `from` to `to` on their common cycle that starts
/// by stepping away from the neighbour `avoid` of `from`.
fn path_away(spec: &CpgSpec, avoid: usize, from: usize, to: usize) -> usize {
    let n = spec.n;
    let (x, f, t) = (pos(spec, avoid), pos(spec, from), pos(spec, to));
    if (x + 1) % n == f { (t + n - f) % n } else { (f + n - t) % n }
}

fn cycle_adjacent(spec: &CpgSpec, a: usize, b: usize) -> bool {
    let n = spec.n;
    (a < n) == (b < n) && {
        let (x, y) = (pos(spec, a), pos(spec, b));
        (x + 1) % n == y || (y + 1) % n == x
    }
}

pub fn is_good_configuration(spec: &CpgSpec, gc: &GoodConfiguration) -> bool {
    let n = spec.n;
    let all = [gc.a_r, gc.a_r1, gc.a, gc.b_s, gc.b_s1, gc.b];
    let distinct = (0..6).all(|i| (i + 1..6).all(|j| all[i] != all[j]));
    distinct
        && [gc.a_r, gc.a_r1, gc.a].iter().all(|&w| w < n)
        && [gc.b_s, gc.b_s1, gc.b].iter().all(|&w| w >= n && w < 2 * n)
        && cycle_adjacent(spec, gc.a_r, gc.a_r1)
        && cycle_adjacent(spec, gc.b_s, gc.b_s1)
        && spec.partner(gc.a_r) == gc.b
        && spec.partner(gc.a_r1) == gc.b_s
        && spec.partner(gc.a) == gc.b_s1
        && path_away(spec, gc.a_r, gc.a_r1, gc.a).is_multiple_of(2)
        && path_away(spec, gc.b_s1, gc.b_s, gc.b).is_multiple_of(2)
}

fn check_config_pre(spec: &CpgSpec) -> Result<(), Error> {
    let n = spec.n;
    if n.is_multiple_of(2) || spec.p[0] != 0 || spec.p[1] % 2 == 1 {
        return Err(invalid("expected a normalized spec with n odd"));
    }
    if (0..n).any(|i| matches!(gap(spec, i), g if g == 1 || g == n - 1)) {
        return Err(invalid("spec has consecutive spoke feet (gap 1)"));
    }
    Ok(())
}

/// Direct construction for the smallest odd gap, else the smallest
/// even inverse gap; each candidate is validated and an exhaustive scan over
/// all `4n` sextuples is the last resort.
pub fn find_good_configuration(spec: &CpgSpec) -> Result<Option<GoodConfiguration>, Error> {
    check_config_pre(spec)?;
    if let Some(gc) = odd_gap_configuration(spec).filter(|gc| is_good_configuration(spec, gc)) {
        return Ok(Some(gc));
    }
    if let Some(gc) = even_inverse_gap_configuration(spec).filter(|gc| is_good_configuration(spec, gc)) {
        return Ok(Some(gc));
    }
    Ok(exhaustive_configuration(spec))
}

/// `u` is the forward neighbour of `u_{p_t}`, on the odd path towards
/// `u_{p_{t+1}}`. The case split is on the parity of the C2 path from `v_t`
/// back to `v` (the one avoiding `v_{t+1}`).
fn odd_gap_configuration(spec: &CpgSpec) -> Option<GoodConfiguration> {
    let n = spec.n;
    let t = (0..n).find(|&i| gap(spec, i) % 2 == 1)?;
    let (pm, pt, pp) = (spec.p(t + n - 1), spec.p(t), spec.p(t + 1));
    let u = spec.u(pt + 1);
    let v = spec.partner(u);
    let (vt, vt1, vtm) = (spec.v(t), spec.v(t + 1), spec.v(t + n - 1));
    let back = path_away(spec, vt1, vt, v);
    let gc = if back % 2 == 1 {
        GoodConfiguration { b_s1: vtm, b_s: vt, b: v, a_r: u, a_r1: spec.u(pt), a: spec.u(pm), source: ConfigSource::OddGap }
    } else {
        GoodConfiguration { b_s: vt, b_s1: vt1, b: v, a_r1: spec.u(pt), a_r: u, a: spec.u(pp), source: ConfigSource::OddGap }
    };
    Some(gc)
}

/// The labels here put `a_{r+1}` at `u_t` so that the spoke `a_{r+1} b_s`
/// exists.
fn even_inverse_gap_configuration(spec: &CpgSpec) -> Option<GoodConfiguration> {
    let n = spec.n;
    let inv = spec.inverse();
    let t = (0..n).find(|&i| gap(&inv, i).is_multiple_of(2))?;
    let b_s = spec.v(inv.p(t));
    let b = spec.v(inv.p(t + 1));
    // Neighbour of b_s not on its even path to b.
    let [n1, n2] = [spec.v(inv.p(t) + 1), spec.v(inv.p(t) + n - 1)];
    let b_s1 = if path_away(spec, n2, b_s, b).is_multiple_of(2) { n2 } else { n1 };
    Some(GoodConfiguration {
        a_r1: spec.u(t),
        a_r: spec.u(t + 1),
        a: spec.partner(b_s1),
        b_s,
        b_s1,
        b,
        source: ConfigSource::EvenInverseGap,
    })
}

fn exhaustive_configuration(spec: &CpgSpec) -> Option<GoodConfiguration> {
    let n = spec.n;
    for r in 0..n {
        for (a_r, a_r1) in [(spec.u(r), spec.u(r + 1)), (spec.u(r + 1), spec.u(r))] {
            let b = spec.partner(a_r);
            let b_s = spec.partner(a_r1);
            for b_s1 in [spec.v(pos(spec, b_s) + 1), spec.v(pos(spec, b_s) + n - 1)] {
                let gc = GoodConfiguration {
                    a_r,
                    a_r1,
                    a: spec.partner(b_s1),
                    b_s,
                    b_s1,
                    b,
                    source: ConfigSource::Exhaustive,
                };
                if is_good_configuration(spec, &gc) {
                    return Some(gc);
                }
            }
        }
    }
    None
}

/// Alternating colouring of both cycles with the doubled white pair
/// `a_r a_{r+1}` and the doubled black pair `b_s b_{s+1}`.
pub fn colour_from_good_configuration(spec: &CpgSpec, gc: &GoodConfiguration) -> Result<Bisection, Error> {
    if !is_good_configuration(spec, gc) {
        return Err(invalid("not a good configuration"));
    }
    let n = spec.n;
    let mut colours = vec![Colour::Black; 2 * n];
    let walk = |colours: &mut Vec<Colour>, avoid: usize, start: usize, first: Colour, offset: usize| {
        let step = if (pos(spec, avoid) + 1) % n == pos(spec, start) { 1 } else { n - 1 };
        for k in 0..n {
            let w = offset + (pos(spec, start) + k * step) % n;
            colours[w] = if k % 2 == 0 { first } else { first.flip() };
        }
    };
    walk(&mut colours, gc.a_r, gc.a_r1, Colour::White, 0);
    walk(&mut colours, gc.b_s1, gc.b_s, Colour::Black, n);
    Ok(Bisection::new(colours))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CpgMethod {
    EvenCycles,
    Hamiltonian,
    OddGap,
    EvenInverseGap,
    GoodConfigurationSearch,
    EdgeColouring,
    TypeI,
    TypeII,
    Fallback,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CpgBisection {
    /// On the original spec's labelling.
    pub bisection: Bisection,
    pub method: CpgMethod,
}

/// Constructive 2-bisection. The constructed colouring is always verified;
/// if verification fails, the exhaustive solver is used instead and the
/// discrepancy is logged.
pub fn two_bisection_cpg(spec: &CpgSpec) -> Result<CpgBisection, CpgError> {
    let g = build_cpg(spec);
    let (norm, transform) = normalize(spec);
    let map = transform.vertex_map(spec.n);
    let constructed = construct(&norm).map(|(b, method)| {
        let mut colours = vec![Colour::Black; 2 * spec.n];
        for (w, &c) in b.colours().iter().enumerate() {
            colours[map[w]] = c;
        }
        (Bisection::new(colours), method)
    });
    match constructed {
        Ok((b, method)) if verify_k_bisection(&g, &b, 2)?.is_none() => Ok(CpgBisection { bisection: b, method }),
        Err(CpgError::PetersenException) => Err(CpgError::PetersenException),
        other => {
            log::warn!("construction for {:?} did not verify ({:?}); searching", spec.p, other.map(|x| x.1));
            match find_k_bisection(&g, 2) {
                Some(w) => Ok(CpgBisection { bisection: w.bisection, method: CpgMethod::Fallback }),
                None if are_isomorphic(&g, &build_gp(5, 2).unwrap()) => Err(CpgError::PetersenException),
                None => Err(invalid(format!("no 2-bisection for C({}, {:?})", spec.n, spec.p)).into()),
            }
        }
    }
}

fn from_3ec(g: &CubicGraph, colours: Vec<u8>) -> Result<Bisection, CpgError> {
    let ec = EdgeColouring3::new(g, colours)?;
    Ok(two_bisection_from_3ec(g, &ec)?.bisection)
}

fn construct(spec: &CpgSpec) -> Result<(Bisection, CpgMethod), CpgError> {
    let n = spec.n;
    let g = build_cpg(spec);
    if n.is_multiple_of(2) {
        let colours = g
            .edges()
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (a % n, b % n);
                // Edge from position i to i + 1 gets i mod 2.
                let i = if (x + 1) % n == y { x } else { y };
                if (a < n) != (b < n) { 2 } else { (i % 2) as u8 }
            })
            .collect();
        return Ok((from_3ec(&g, colours)?, CpgMethod::EvenCycles));
    }
    if let Some(i) = (0..n).find(|&i| matches!(gap(spec, i), x if x == 1 || x == n - 1)) {
        return Ok((from_3ec(&g, hamiltonian_colouring(spec, &g, i))?, CpgMethod::Hamiltonian));
    }
    if let Some(gc) = odd_gap_configuration(spec).filter(|gc| is_good_configuration(spec, gc)) {
        return Ok((colour_from_good_configuration(spec, &gc)?, CpgMethod::OddGap));
    }
    if let Some(gc) = even_inverse_gap_configuration(spec).filter(|gc| is_good_configuration(spec, gc)) {
        return Ok((colour_from_good_configuration(spec, &gc)?, CpgMethod::EvenInverseGap));
    }
    let all_even = (0..n).all(|i| gap(spec, i).is_multiple_of(2));
    let inv_all_odd = (0..n).all(|i| inverse_gap(spec, i) % 2 == 1);
    if !(all_even && inv_all_odd) {
        // A direct construction applied but its labels did not validate.
        if let Some(gc) = exhaustive_configuration(spec) {
            return Ok((colour_from_good_configuration(spec, &gc)?, CpgMethod::GoodConfigurationSearch));
        }
    }
    if n >= 5 && canonical_code(&g) == canonical_code(&build_gp(n, (n - 1) / 2).unwrap()) {
        if n == 5 {
            return Err(CpgError::PetersenException);
        }
        let ec = proper_3_edge_colouring(&g).ok_or_else(|| invalid("GP(n,(n-1)/2) should be 3-edge-colourable"))?;
        return Ok((two_bisection_from_3ec(&g, &ec)?.bisection, CpgMethod::EdgeColouring));
    }
    type_colouring(spec).ok_or_else(|| invalid("no Type I/II candidate verified").into())
}

/// C1 minus `u_{p_i} u_{p_{i+1}}`, a spoke, C2 minus `v_i v_{i+1}`, a spoke:
/// a Hamiltonian cycle, coloured alternately 0/1; the rest get 2.
fn hamiltonian_colouring(spec: &CpgSpec, g: &CubicGraph, i: usize) -> Vec<u8> {
    let n = spec.n;
    let (a, b) = (spec.u(spec.p(i)), spec.u(spec.p(i + 1)));
    let (c, d) = (spec.v(i), spec.v(i + 1));
    let mut cycle = Vec::with_capacity(2 * n);
    // From a, walk C1 away from b until b.
    let step = if (b + 1) % n == a { 1 } else { n - 1 };
    for k in 0..n {
        cycle.push((a + k * step) % n);
    }
    debug_assert_eq!(*cycle.last().unwrap(), b);
    // Spoke b-d, then C2 from d away from c until c, then spoke c-a.
    let step = if (pos(spec, c) + 1) % n == pos(spec, d) { 1 } else { n - 1 };
    for k in 0..n {
        cycle.push(n + (pos(spec, d) + k * step) % n);
    }
    debug_assert_eq!(*cycle.last().unwrap(), c);
    let mut colours = vec![2u8; g.size()];
    for k in 0..cycle.len() {
        let e = g.edge_index(cycle[k], cycle[(k + 1) % cycle.len()]).expect("Hamiltonian cycle edge");
        colours[e] = (k % 2) as u8;
    }
    colours
}

/// Candidates `i` whose spoke partners on C2 are at distance at least 2 in
/// both directions, in increasing order; the first verified colouring wins.
/// This choice of starting pair is a reconstruction, so the caller keeps the
/// exhaustive search as a fallback.
fn type_colouring(spec: &CpgSpec) -> Option<(Bisection, CpgMethod)> {
    let n = spec.n;
    let g = build_cpg(spec);
    for i in 0..n {
        let y = spec.partner(spec.u(i));
        let x = spec.partner(spec.u(i + 1));
        let fwd = (pos(spec, y) + n - pos(spec, x)) % n;
        if fwd < 2 || n - fwd < 2 {
            continue;
        }
        if let Some((b, m)) = type_colouring_at(spec, i) {
            if verify_k_bisection(&g, &b, 2).ok()?.is_none() {
                return Some((b, m));
            }
        }
    }
    None
}

fn type_colouring_at(spec: &CpgSpec, i: usize) -> Option<(Bisection, CpgMethod)> {
    use Colour::{Black as B, White as W};
    let n = spec.n;
    let mut col: Vec<Option<Colour>> = vec![None; 2 * n];
    col[spec.u(i)] = Some(W);
    for j in 1..n {
        col[spec.u(i + j)] = Some(if j % 2 == 1 { W } else { B });
    }
    let y = spec.partner(spec.u(i));
    let x = spec.partner(spec.u(i + 1));
    col[x] = Some(B);
    col[y] = Some(B);
    // Walk C2 from x forward to y; the even arc is P1, the odd one P2.
    let fwd = (pos(spec, y) + n - pos(spec, x)) % n;
    let arc = |dir: usize, len: usize| -> Vec<usize> { (0..=len).map(|k| spec.v(pos(spec, x) + k * dir)).collect() };
    let (p1, p2) = if fwd.is_multiple_of(2) { (arc(1, fwd), arc(n - 1, n - fwd)) } else { (arc(n - 1, n - fwd), arc(1, fwd)) };
    // p2 = x, x1, ..., xt, yt, ..., y1, y.
    let inner = &p2[1..p2.len() - 1];
    let t = inner.len() / 2;
    let xs: Vec<usize> = inner[..t].to_vec();
    let ys: Vec<usize> = inner[t..].iter().rev().copied().collect();
    col[xs[0]] = Some(W);
    col[ys[0]] = Some(W);
    let outer = |w: usize, col: &[Option<Colour>]| col[spec.partner(w)].unwrap();
    // Index (into xs or ys) where the doubled pair ends, and which side.
    let mut pair: Option<(usize, bool, Colour)> = None;
    for k in 1..t {
        let c = col[xs[k - 1]].unwrap();
        if outer(xs[k], &col) == c && outer(ys[k], &col) == c {
            col[xs[k]] = Some(c.flip());
            col[ys[k]] = Some(c.flip());
            continue;
        }
        let on_x = outer(xs[k], &col) != c;
        pair = Some((k, on_x, c));
        break;
    }
    let pair_colour;
    match pair {
        Some((k, on_x, c)) => {
            pair_colour = c;
            // Fill the rest of P2 alternately, starting from the doubled pair.
            let (side, other) = if on_x { (&xs, &ys) } else { (&ys, &xs) };
            let mut seq: Vec<usize> = side[k..].to_vec();
            seq.extend(other[k..].iter().rev());
            let mut cur = c;
            for &w in &seq {
                col[w] = Some(cur);
                cur = cur.flip();
            }
        }
        None => {
            // Everything forced: x_t and y_t share a colour (t = 1 is the
            // trivial case, a white pair).
            pair_colour = col[xs[t - 1]].unwrap();
        }
    }
    let (method, first) = match pair_colour {
        W => (CpgMethod::TypeII, B),
        B => (CpgMethod::TypeI, W),
    };
    let mut cur = first;
    for &w in &p1[1..p1.len() - 1] {
        col[w] = Some(cur);
        cur = cur.flip();
    }
    let colours: Option<Vec<Colour>> = col.into_iter().collect();
    Some((Bisection::new(colours?), method))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bisection::is_k_bisection;
    use crate::graph::named;

    #[test]
    fn petersen_specs() {
        let spec = CpgSpec::new(vec![0, 2, 4, 1, 3]).unwrap();
        let g = build_cpg(&spec);
        assert!(are_isomorphic(&g, &build_gp(5, 2).unwrap()));
        assert_eq!(normalize(&spec).0, spec);
        assert!((0..5).all(|i| gap(&spec, i) == 2));
        assert!((0..5).all(|i| inverse_gap(&spec, i) % 2 == 1));
        assert_eq!(two_bisection_cpg(&spec), Err(CpgError::PetersenException));
    }

    #[test]
    fn identity_is_prism() {
        for n in 3..8 {
            let spec = CpgSpec::new((0..n).collect()).unwrap();
            assert!(are_isomorphic(&build_cpg(&spec), &named::prism(n)));
        }
    }

    #[test]
    fn gp_as_cpg() {
        let spec = CpgSpec::from_gp(9, 2).unwrap();
        assert_eq!(spec.perm(), &[0, 2, 4, 6, 8, 1, 3, 5, 7]);
        assert!(are_isomorphic(&build_cpg(&spec), &build_gp(9, 2).unwrap()));
        assert!(build_gp(4, 2).is_err());
        assert!(CpgSpec::new(vec![0, 1, 1]).is_err());
    }

    #[test]
    fn gp_9_2_has_no_good_configuration() {
        let spec = CpgSpec::from_gp(9, 2).unwrap();
        let (norm, _) = normalize(&spec);
        assert_eq!(find_good_configuration(&norm).unwrap(), None);
        let r = two_bisection_cpg(&spec).unwrap();
        assert!(is_k_bisection(&build_cpg(&spec), &r.bisection, 2));
        assert_ne!(r.method, CpgMethod::Fallback);
    }

    #[test]
    fn normalize_reflects_odd_p1() {
        let spec = CpgSpec::new(vec![2, 5, 0, 4, 1, 3, 6]).unwrap();
        let (norm, t) = normalize(&spec);
        assert_eq!(norm.p(0), 0);
        assert_eq!(norm.p(1) % 2, 0);
        assert!(t.reflected);
        let map = t.vertex_map(7);
        assert_eq!(build_cpg(&norm).relabel(&map), build_cpg(&spec));
    }

    #[test]
    fn triple_isomorphism() {
        let spec = CpgSpec::new(vec![0, 3, 6, 1, 5, 2, 4]).unwrap();
        let g = build_cpg(&spec);
        assert!(are_isomorphic(&g, &build_cpg(&spec.inverse())));
        assert!(are_isomorphic(&g, &build_cpg(&spec.bar())));
    }

    #[test]
    fn even_and_hamiltonian_cases() {
        let spec = CpgSpec::new(vec![0, 2, 4, 1, 5, 3]).unwrap();
        assert_eq!(two_bisection_cpg(&spec).unwrap().method, CpgMethod::EvenCycles);
        let spec = CpgSpec::new(vec![0, 1, 3, 2, 4]).unwrap();
        assert_eq!(two_bisection_cpg(&spec).unwrap().method, CpgMethod::Hamiltonian);
    }

    fn type_case(p: Vec<usize>, want: CpgMethod) {
        let spec = CpgSpec::new(p).unwrap();
        let n = spec.n();
        let r = two_bisection_cpg(&spec).unwrap();
        assert_eq!(r.method, want);
        assert!(is_k_bisection(&build_cpg(&spec), &r.bisection, 2));
        let white_c1 = (0..n).filter(|&w| r.bisection.colour(w) == Colour::White).count();
        let black_c2 = (n..2 * n).filter(|&w| r.bisection.colour(w) == Colour::Black).count();
        assert_eq!(white_c1, n / 2 + 1);
        assert_eq!(black_c2, n / 2 + 1);
    }

    #[test]
    fn type_two_colouring() {
        type_case(vec![0, 4, 8, 1, 5, 9, 2, 6, 10, 3, 7], CpgMethod::TypeII);
        type_case(vec![0, 2, 4, 1, 3, 7, 9, 6, 8, 10, 12, 5, 11], CpgMethod::TypeII);
    }

    #[test]
    fn type_one_colouring() {
        type_case(vec![0, 8, 3, 11, 6, 1, 9, 4, 12, 7, 2, 10, 5], CpgMethod::TypeI);
    }

    #[test]
    fn constructed_configurations_validate() {
        // Odd gap at t = 5.
        let spec = CpgSpec::new(vec![0, 2, 4, 6, 1, 5, 3]).unwrap();
        let gc = find_good_configuration(&spec).unwrap().unwrap();
        assert_eq!(gc.source, ConfigSource::OddGap);
        let b = colour_from_good_configuration(&spec, &gc).unwrap();
        assert!(is_k_bisection(&build_cpg(&spec), &b, 2));
        assert!(colour_from_good_configuration(&spec, &GoodConfiguration { a: gc.a_r, ..gc }).is_err());
    }
}
