use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use tjoin_core::coloring::{find_six_edge_coloring, SolverConfig};
use tjoin_core::cuts::min_odd_cut;
use tjoin_core::discharging::{audit, discharge, AuditOptions};
use tjoin_core::plane_graph::classify;
use tjoin_core::reductions::match_catalog;
use tjoin_core::workbench::{generate, InstanceSpec};

fn instances() -> Vec<InstanceSpec> {
    vec![
        InstanceSpec::Dk4,
        InstanceSpec::C4x3,
        InstanceSpec::Dq3,
        InstanceSpec::DoubledPrism(5),
    ]
}

fn generation(c: &mut Criterion) {
    let mut grp = c.benchmark_group("generate");
    for s in InstanceSpec::named() {
        grp.bench_with_input(BenchmarkId::from_parameter(s), &s, |b, s| {
            b.iter(|| generate(black_box(s)).unwrap())
        });
    }
    grp.finish();
}

fn structure(c: &mut Criterion) {
    let mut grp = c.benchmark_group("classify+discharge");
    for s in instances() {
        let g = generate(&s).unwrap();
        grp.bench_with_input(BenchmarkId::from_parameter(s), &g, |b, g| {
            b.iter(|| discharge(&classify(black_box(g)).unwrap()))
        });
    }
    grp.finish();
}

fn cuts(c: &mut Criterion) {
    let mut grp = c.benchmark_group("min_odd_cut");
    for s in instances() {
        let g = generate(&s).unwrap();
        grp.bench_with_input(BenchmarkId::from_parameter(s), &g, |b, g| {
            b.iter(|| min_odd_cut(black_box(g), 16).unwrap())
        });
    }
    grp.finish();
}

fn solve(c: &mut Criterion) {
    let mut grp = c.benchmark_group("six_edge_coloring");
    let cfg = SolverConfig::default();
    for s in instances() {
        let g = generate(&s).unwrap();
        grp.bench_with_input(BenchmarkId::from_parameter(s), &g, |b, g| {
            b.iter(|| find_six_edge_coloring(black_box(g), &cfg).unwrap())
        });
    }
    grp.finish();
}

fn catalog_and_audit(c: &mut Criterion) {
    let mut grp = c.benchmark_group("catalog");
    for s in instances() {
        let g = generate(&s).unwrap();
        grp.bench_with_input(BenchmarkId::new("match", s), &g, |b, g| {
            b.iter(|| match_catalog(black_box(g), 16))
        });
        grp.bench_with_input(BenchmarkId::new("audit", s), &g, |b, g| {
            b.iter(|| audit(black_box(g), &AuditOptions::default()))
        });
    }
    grp.finish();
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = generation, structure, cuts, solve, catalog_and_audit
}
criterion_main!(benches);
