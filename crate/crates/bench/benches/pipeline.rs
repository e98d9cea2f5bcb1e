use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use toric_bench::bench_graphs;
use toric_core::atlas::enumerate_connected_bipartite;
use toric_core::graph::enumerate_cycles;
use toric_core::groebner::{buchberger, initial_ideal};
use toric_core::hilbert::{hilbert_numerator, invariant_tuple};
use toric_core::toric::toric_generators;
use toric_core::MonomialOrder;

fn bench_cycles(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_cycles");
    for (name, g) in bench_graphs() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| {
            b.iter(|| enumerate_cycles(black_box(g)))
        });
    }
    group.finish();
}

fn bench_buchberger(c: &mut Criterion) {
    let mut group = c.benchmark_group("buchberger");
    for (name, g) in bench_graphs() {
        let gens = toric_generators(&g).unwrap().generators;
        for order in [MonomialOrder::default(), MonomialOrder::lex()] {
            let id = BenchmarkId::new(order.kind().to_string(), name);
            group.bench_with_input(id, &gens, |b, gens| b.iter(|| buchberger(&order, black_box(gens))));
        }
    }
    group.finish();
}

fn bench_hilbert(c: &mut Criterion) {
    let mut group = c.benchmark_group("hilbert_numerator");
    for (name, g) in bench_graphs() {
        let gens = toric_generators(&g).unwrap().generators;
        let ideal = initial_ideal(&buchberger(&MonomialOrder::default(), &gens));
        group.bench_with_input(BenchmarkId::from_parameter(name), &ideal, |b, ideal| {
            b.iter(|| hilbert_numerator(black_box(ideal)))
        });
    }
    group.finish();
}

fn bench_invariants(c: &mut Criterion) {
    let mut group = c.benchmark_group("invariant_tuple");
    for (name, g) in bench_graphs() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| {
            b.iter(|| invariant_tuple(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn bench_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_connected_bipartite");
    group.sample_size(10);
    for n in [6, 7, 8] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| enumerate_connected_bipartite(black_box(n), false).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_cycles, bench_buchberger, bench_hilbert, bench_invariants, bench_enumeration);
criterion_main!(benches);
