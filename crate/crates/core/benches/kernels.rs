//! Sequential versus parallel batch throughput, plus the per-group kernels.
//!
//! Run with `--no-default-features` to measure the sequential fallback of the
//! inner loops as well.

use std::hint::black_box;
use std::path::PathBuf;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use camina_core::camina::{
    analyze_center_pair, camina_by_centralizers, camina_by_classes, camina_by_commutators, AnalysisOptions,
};
use camina_core::characters::dixon_character_table;
use camina_core::corpus::{parse_corpus, FamilySpec, GroupLabel};
use camina_core::exec::default_workers;
use camina_core::report::run_harness;
use camina_core::FiniteGroup;

fn order32() -> Vec<(GroupLabel, FiniteGroup)> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/order32.grp");
    let text = std::fs::read_to_string(path).unwrap();
    parse_corpus(&text, 2048)
        .unwrap()
        .into_iter()
        .map(|e| (e.label(), e.group))
        .collect()
}

fn family(spec: &str) -> FiniteGroup {
    spec.parse::<FamilySpec>().unwrap().build(4096).unwrap()
}

fn harness(c: &mut Criterion) {
    let groups = order32();
    let opts = AnalysisOptions::default();
    let mut group = c.benchmark_group("harness_order32");
    group.sample_size(10);
    let mut counts = vec![1, default_workers()];
    counts.dedup();
    for workers in counts {
        group.bench_with_input(BenchmarkId::from_parameter(workers), &workers, |b, &w| {
            b.iter(|| run_harness(black_box(&groups), w, &opts).unwrap())
        });
    }
    group.finish();
}

fn kernels(c: &mut Criterion) {
    let mut group = c.benchmark_group("kernels");
    group.sample_size(20);
    for spec in ["extraspecial_p:2,2", "T:3,1", "heisenberg:2,3"] {
        let g = family(spec);
        let z = g.center();
        group.bench_function(BenchmarkId::new("conjugacy_classes", spec), |b| {
            b.iter(|| black_box(&g).conjugacy_classes())
        });
        group.bench_function(BenchmarkId::new("dixon", spec), |b| {
            b.iter(|| dixon_character_table(black_box(&g)).unwrap())
        });
        group.bench_function(BenchmarkId::new("by_classes", spec), |b| {
            b.iter(|| camina_by_classes(&g, &z).unwrap())
        });
        group.bench_function(BenchmarkId::new("by_commutators", spec), |b| {
            b.iter(|| camina_by_commutators(&g, &z).unwrap())
        });
        group.bench_function(BenchmarkId::new("by_centralizers", spec), |b| {
            b.iter(|| camina_by_centralizers(&g, &z).unwrap())
        });
    }
    let t5 = family("T:5,1");
    let opts = AnalysisOptions::default();
    group.bench_function("analyze_center_pair/T:5,1", |b| {
        b.iter(|| analyze_center_pair(black_box(&t5), &opts).unwrap())
    });
    group.finish();
}

criterion_group!(benches, harness, kernels);
criterion_main!(benches);
