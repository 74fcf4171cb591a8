//! End-to-end checks of the reproducible results. Runs with its own harness
//! and prints one line per criterion.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use bisectlab::ando::{find_ando, find_k_bisection_iso_linear_forests, is_ando, is_strong_ando};
use bisectlab::arboricity::{
    decomposition_counts_hold, find_two_colouring_max4_edge_components, find_two_k_linear_forests,
};
use bisectlab::bisection::{find_k_bisection, is_k_bisection};
use bisectlab::cyperm::{build_cpg, two_bisection_cpg, CpgError, CpgMethod, CpgSpec};
use bisectlab::enumerate::Catalogue;
use bisectlab::families::{build_gk, build_t, heawood, petersen, petersen_fixtures, three_bisection_t};
use bisectlab::graph::named;
use bisectlab::random::{random_cpg_spec, random_cubic, random_relabelling};
use bisectlab::scan::{run_scan, Property, ScanBudget, ScanMethod};
use bisectlab::structure::{has_perfect_matching, vertex_connectivity};
use bisectlab::wormald::{
    ando_from_wormald, find_pair_removed_strong_wormald, find_strong_wormald_within, find_wormald, Method,
};
use bisectlab::{canonical_code, parse_graph6, write_graph6, Bisection, Budget, CanonicalCode, CubicGraph, SimpleGraph};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Check = Result<String, String>;
type Criterion = (&'static str, Box<dyn FnMut(&mut Catalogue) -> Check>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn code(g: &CubicGraph) -> CanonicalCode {
    canonical_code(g.as_simple())
}

fn graphs(cat: &mut Catalogue, orders: impl IntoIterator<Item = usize>) -> Vec<CubicGraph> {
    orders.into_iter().flat_map(|n| cat.connected(n).to_vec()).collect()
}

fn failures_by_order(r: &bisectlab::scan::ScanReport) -> Vec<(usize, usize)> {
    r.rows.iter().map(|r| (r.order, r.failures)).collect()
}

fn no_inconclusive(r: &bisectlab::scan::ScanReport) -> Result<(), String> {
    ensure(r.inconclusive() == 0, || format!("{} inconclusive", r.inconclusive()))
}

fn c1_ban_linial(cat: &mut Catalogue) -> Check {
    let gs = graphs(cat, (10..=18).step_by(2));
    let r = run_scan(&gs, Property::KBisection { k: 2 }, ScanBudget::default());
    no_inconclusive(&r)?;
    let got = failures_by_order(&r);
    ensure(got == vec![(10, 1), (12, 0), (14, 0), (16, 0), (18, 0)], || format!("failures {got:?}"))?;
    let w = parse_graph6(&r.row(10).unwrap().witnesses[0].graph6).unwrap();
    ensure(canonical_code(&w) == code(&petersen()), || "order-10 failure is not Petersen".into())?;
    Ok(format!("failures {got:?}, scanned {}", gs.len()))
}

fn c2_strong_wormald(cat: &mut Catalogue) -> Check {
    let gs = graphs(cat, [4, 8, 12, 16]);
    let r = run_scan(&gs, Property::StrongWormald { method: ScanMethod::Bisection }, ScanBudget::default());
    no_inconclusive(&r)?;
    let got = failures_by_order(&r);
    ensure(got == vec![(4, 0), (8, 0), (12, 0), (16, 3)], || format!("failures {got:?}"))?;
    let mut conn: Vec<usize> = r.row(16).unwrap().witnesses.iter().map(|w| w.connectivity).collect();
    conn.sort();
    ensure(conn == vec![1, 2, 3], || format!("connectivities {conn:?}"))?;
    Ok(format!("failures {got:?}, order-16 connectivities {conn:?}"))
}

fn c3_two_mod_four(cat: &mut Catalogue) -> Check {
    let gs = graphs(cat, [6, 10, 14]);
    let r = run_scan(&gs, Property::StrongWormald2Mod4 { method: ScanMethod::Bisection }, ScanBudget::default());
    no_inconclusive(&r)?;
    ensure(r.failures() == 0, || format!("failures {:?}", failures_by_order(&r)))?;
    Ok(format!("0 failures over {} graphs", gs.len()))
}

fn c4_method_agreement(cat: &mut Catalogue) -> Check {
    let gs = graphs(cat, (4..=14).step_by(2));
    for g in &gs {
        let a = find_strong_wormald_within(g, Method::Bisection, &Budget::unlimited());
        let b = find_strong_wormald_within(g, Method::Direct, &Budget::unlimited());
        ensure(a.is_found() == b.is_found(), || format!("disagree on {}", write_graph6(g.as_simple())))?;
    }
    Ok(format!("agree on {} graphs", gs.len()))
}

fn c5_wormald(cat: &mut Catalogue) -> Check {
    let gs = graphs(cat, [4, 8, 12, 16]);
    for g in &gs {
        ensure(find_wormald(g).unwrap().is_some(), || format!("no Wormald colouring: {}", write_graph6(g.as_simple())))?;
    }
    Ok(format!("all {} graphs admit one", gs.len()))
}

fn c6_petersen() -> Check {
    let p = petersen();
    ensure(find_k_bisection(&p, 2).is_none(), || "2-bisection found".into())?;
    ensure(find_k_bisection(&p, 3).is_some(), || "no 3-bisection".into())?;
    ensure(is_k_bisection(&p, &petersen_fixtures::three_bisection(), 3), || "3-bisection fixture".into())?;
    // Girth 5: components with at most 3 vertices are paths, so this is the
    // same as asking for isomorphic parts.
    ensure(find_k_bisection_iso_linear_forests(&p, 3).is_none(), || "isomorphic 3-bisection found".into())?;
    ensure(find_k_bisection_iso_linear_forests(&p, 4).is_some(), || "no isomorphic 4-bisection".into())?;
    let c = petersen_fixtures::four_bisection_linear_forests();
    ensure(is_k_bisection(&p, &c, 4) && is_strong_ando(&p, &c).unwrap(), || "4-bisection fixture".into())?;
    Ok("all four certificates hold".into())
}

/// Permutations of `0..n` with `p_0 = 0`.
fn anchored_perms(n: usize) -> Vec<Vec<usize>> {
    fn rec(p: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if p.len() == used.len() {
            out.push(p.clone());
            return;
        }
        for x in 1..used.len() {
            if !used[x] {
                used[x] = true;
                p.push(x);
                rec(p, used, out);
                p.pop();
                used[x] = false;
            }
        }
    }
    let mut used = vec![false; n];
    used[0] = true;
    let mut out = Vec::new();
    rec(&mut vec![0], &mut used, &mut out);
    out
}

fn c7_cycle_permutation() -> Check {
    let petersen_code = code(&petersen());
    let mut summary = Vec::new();
    for n in [5, 7, 9] {
        let mut exist = std::collections::HashMap::new();
        let mut petersens = 0;
        let mut fallbacks = 0;
        let perms = anchored_perms(n);
        for p in &perms {
            let spec = CpgSpec::new(p.clone()).unwrap();
            let g = build_cpg(&spec);
            let c = code(&g);
            let has = *exist.entry(c.clone()).or_insert_with(|| find_k_bisection(&g, 2).is_some());
            match two_bisection_cpg(&spec) {
                Ok(b) => {
                    ensure(is_k_bisection(&g, &b.bisection, 2), || format!("{p:?}: unverified"))?;
                    ensure(has, || format!("{p:?}: solver finds none"))?;
                    fallbacks += usize::from(b.method == CpgMethod::Fallback);
                }
                Err(CpgError::PetersenException) => {
                    ensure(c == petersen_code && !has, || format!("{p:?}: spurious exception"))?;
                    petersens += 1;
                }
                Err(e) => return Err(format!("{p:?}: {e}")),
            }
        }
        summary.push(format!("n={n}: {} specs, {petersens} Petersen, {fallbacks} fallback", perms.len()));
    }
    Ok(summary.join("; "))
}

fn c8_families() -> Check {
    let mut triples = Vec::new();
    for i in 0..=2 {
        for j in 0..=2 - i {
            for k in 0..=2 - i - j {
                triples.push((i, j, k));
            }
        }
    }
    for &(i, j, k) in &triples {
        let g = build_t(i, j, k);
        let name = format!("T{i}{j}{k}");
        ensure(g.order() == 22 + 4 * (i + j + k), || format!("{name}: order"))?;
        ensure(find_k_bisection(&g, 2).is_none(), || format!("{name}: has a 2-bisection"))?;
        ensure(!has_perfect_matching(g.as_simple()), || format!("{name}: has a perfect matching"))?;
        ensure(vertex_connectivity(g.as_simple()) == 1, || format!("{name}: connectivity"))?;
        let c = three_bisection_t(i, j, k);
        ensure(is_k_bisection(&g, &c, 3) && is_strong_ando(&g, &c).unwrap(), || format!("{name}: recipe"))?;
    }
    let g1 = build_gk(1).unwrap();
    ensure(g1.order() == 28, || "G_1 order".into())?;
    for m in [Method::Bisection, Method::Direct] {
        ensure(find_strong_wormald_within(&g1, m, &Budget::unlimited()).is_absent(), || format!("G_1 {m:?}"))?;
    }
    Ok(format!("{} graphs T_ijk; G_1 absent by both methods", triples.len()))
}

fn c9_arboricity(cat: &mut Catalogue) -> Check {
    let gs = graphs(cat, (4..=14).step_by(2));
    let mut fails = Vec::new();
    for g in &gs {
        match find_two_k_linear_forests(g, 4) {
            Some(d) => ensure(decomposition_counts_hold(g, &d), || format!("counts: {}", write_graph6(g.as_simple())))?,
            None => fails.push(code(g)),
        }
    }
    fails.sort();
    let mut want = vec![code(&named::k33()), code(&named::prism(3)), code(&heawood())];
    want.sort();
    ensure(fails == want, || format!("{} graphs with la_4 > 2", fails.len()))?;
    let h = heawood();
    let d = find_two_k_linear_forests(&h, 5).ok_or("la_5(Heawood) > 2")?;
    ensure(decomposition_counts_hold(&h, &d), || "Heawood counts".into())?;
    for g in [named::k33(), named::prism(3), heawood()] {
        ensure(find_two_colouring_max4_edge_components(&g).is_some(), || "no <=4-edge colouring".into())?;
    }
    Ok(format!("la_4 > 2 for exactly K33, prism, Heawood among {} graphs", gs.len()))
}

fn triangle_expanded_k33() -> SimpleGraph {
    // Side {0, 1, 2} of K33 replaced by triangles {6,7,8}, {9,10,11}, {12,13,14}.
    let mut edges = Vec::new();
    for x in 0..3 {
        let t = [3 * x, 3 * x + 1, 3 * x + 2];
        edges.extend([(t[0], t[1]), (t[1], t[2]), (t[0], t[2])]);
        for (i, y) in (9..12).enumerate() {
            edges.push((t[i], y));
        }
    }
    SimpleGraph::from_edges(12, edges).unwrap()
}

fn c10_pair_removed(cat: &mut Catalogue) -> Check {
    let mut out = Vec::new();
    for n in [12, 16] {
        let exceptions: Vec<CubicGraph> =
            cat.connected(n).iter().filter(|g| find_pair_removed_strong_wormald(g).unwrap().is_none()).cloned().collect();
        ensure(exceptions.len() == 1, || format!("order {n}: {} exceptions", exceptions.len()))?;
        let g = &exceptions[0];
        if n == 12 {
            ensure(code(g) == canonical_code(&triangle_expanded_k33()), || "order 12: not triangle-expanded K33".into())?;
        } else {
            ensure(!has_perfect_matching(g.as_simple()), || "order 16: has a perfect matching".into())?;
            let none_smaller = (4..16).step_by(2).all(|m| cat.connected(m).iter().all(|h| has_perfect_matching(h.as_simple())));
            let unique = cat.connected(16).iter().filter(|h| !has_perfect_matching(h.as_simple())).count() == 1;
            ensure(none_smaller && unique, || "order 16: not the smallest graph without a perfect matching".into())?;
        }
        out.push(format!("n={n}: {}", write_graph6(g.as_simple())));
    }
    Ok(out.join("; "))
}

/// All balanced colourings with vertex 0 black.
fn balanced(n: usize) -> Vec<Bisection> {
    (0u32..1 << n)
        .filter(|m| m & 1 == 1 && m.count_ones() as usize == n / 2)
        .map(|m| Bisection::from_black(n, &(0..n).filter(|&v| m >> v & 1 == 1).collect::<Vec<_>>()))
        .collect()
}

fn c11_properties(cat: &mut Catalogue) -> Check {
    let mut rng = StdRng::seed_from_u64(2024);
    for _ in 0..10_000 {
        let n = 2 * rng.gen_range(2..=20);
        let g = random_cubic(n, &mut rng).unwrap();
        let line = write_graph6(g.as_simple());
        ensure(parse_graph6(&line).unwrap() == *g.as_simple(), || format!("round trip {line}"))?;
    }
    for g in [petersen(), heawood(), build_t(0, 0, 0), random_cubic(20, &mut rng).unwrap()] {
        let c = code(&g);
        for _ in 0..10_000 {
            let p = random_relabelling(g.order(), &mut rng);
            ensure(code(&g.relabel(&p)) == c, || "relabelling changed the code".into())?;
        }
    }
    for _ in 0..1_000 {
        let n = rng.gen_range(3..=16);
        let s = random_cpg_spec(n, &mut rng).unwrap();
        let c = code(&build_cpg(&s));
        ensure(code(&build_cpg(&s.inverse())) == c && code(&build_cpg(&s.bar())) == c, || format!("{s:?}"))?;
    }
    let mut derived = 0;
    for g in graphs(cat, (4..=14).step_by(2)) {
        if let Some(ec) = find_strong_wormald_within(&g, Method::Bisection, &Budget::unlimited()).found() {
            let b = ando_from_wormald(&g, &ec).map_err(|e| e.to_string())?;
            ensure(is_strong_ando(&g, &b).unwrap(), || format!("derived bisection: {}", write_graph6(g.as_simple())))?;
            derived += 1;
        }
    }
    let mut oracle = 0;
    for g in graphs(cat, (4..=10).step_by(2)) {
        let all = balanced(g.order());
        for k in 1..=4 {
            let brute = all.iter().any(|b| is_k_bisection(&g, b, k));
            ensure(brute == find_k_bisection(&g, k).is_some(), || format!("k={k}: {}", write_graph6(g.as_simple())))?;
        }
        let brute = all.iter().any(|b| is_ando(&g, b).unwrap());
        ensure(brute == find_ando(&g).is_some(), || format!("ando: {}", write_graph6(g.as_simple())))?;
        oracle += 1;
    }
    Ok(format!("{derived} derived bisections, {oracle} oracle graphs"))
}

fn main() {
    let mut cat = Catalogue::new();
    let criteria: Vec<Criterion> = vec![
        ("2-bisection scan n=10..18", Box::new(c1_ban_linial)),
        ("Strong Wormald scan n=4..16", Box::new(c2_strong_wormald)),
        ("Strong Wormald 2 mod 4 n=6,10,14", Box::new(c3_two_mod_four)),
        ("solver agreement n<=14", Box::new(c4_method_agreement)),
        ("Wormald n=4..16", Box::new(c5_wormald)),
        ("Petersen certificates", Box::new(|_| c6_petersen())),
        ("cycle permutation graphs n=5,7,9", Box::new(|_| c7_cycle_permutation())),
        ("families T_ijk and G_1", Box::new(|_| c8_families())),
        ("linear arboricity n<=14", Box::new(c9_arboricity)),
        ("pair-removed n=12,16", Box::new(c10_pair_removed)),
        ("property suites", Box::new(c11_properties)),
    ];
    let mut failed = 0;
    for (i, (name, mut run)) in criteria.into_iter().enumerate() {
        let t = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(|| run(&mut cat))).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panic: {}", msg.unwrap_or_default()))
        });
        let secs = t.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({secs:.1}s): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({secs:.1}s): {detail}", i + 1);
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
}
