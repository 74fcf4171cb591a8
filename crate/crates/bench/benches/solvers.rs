use std::hint::black_box;

use bisectlab::arboricity::find_two_k_linear_forests;
use bisectlab::bisection::find_k_bisection;
use bisectlab::canonical_code;
use bisectlab::cyperm::{two_bisection_cpg, CpgSpec};
use bisectlab::enumerate::enumerate_cubic;
use bisectlab::families::{build_gk, build_t, heawood, petersen};
use bisectlab::wormald::{find_strong_wormald_within, Method};
use bisectlab::Budget;
use criterion::{criterion_group, criterion_main, Criterion};

fn bisections(c: &mut Criterion) {
    let t = build_t(0, 0, 0);
    c.bench_function("no 2-bisection T000", |b| b.iter(|| find_k_bisection(black_box(&t), 2)));
    let p = petersen();
    c.bench_function("3-bisection petersen", |b| b.iter(|| find_k_bisection(black_box(&p), 3)));
}

fn wormald(c: &mut Criterion) {
    let g1 = build_gk(1).unwrap();
    let mut group = c.benchmark_group("strong wormald G1");
    group.sample_size(10);
    for m in [Method::Bisection, Method::Direct] {
        group.bench_function(format!("{m:?}"), |b| b.iter(|| find_strong_wormald_within(&g1, m, &Budget::unlimited())));
    }
    group.finish();
}

fn cycle_permutation(c: &mut Criterion) {
    let spec = CpgSpec::new(vec![0, 2, 4, 1, 3, 7, 9, 6, 8, 10, 12, 5, 11]).unwrap();
    c.bench_function("cpg type II n=13", |b| b.iter(|| two_bisection_cpg(black_box(&spec))));
}

fn arboricity(c: &mut Criterion) {
    let h = heawood();
    c.bench_function("la_4 heawood", |b| b.iter(|| find_two_k_linear_forests(black_box(&h), 4)));
}

fn plumbing(c: &mut Criterion) {
    let t = build_t(1, 1, 1);
    c.bench_function("canonical code T111", |b| b.iter(|| canonical_code(black_box(t.as_simple()))));
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    group.bench_function("n=14", |b| b.iter(|| enumerate_cubic(14, true).unwrap()));
    group.finish();
}

criterion_group!(benches, bisections, wormald, cycle_permutation, arboricity, plumbing);
criterion_main!(benches);
