use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use linkdim::generate::erdos_renyi;
use linkdim::landmarks::ambiguity_report_with;
use linkdim::solvers::greedy_resolution_set;
use linkdim::{
    all_pairs_distances, all_pairs_distances_with, link_dimension, metric_dimension,
    strong_metric_dimension, SearchOptions, Strategy,
};

const STRATEGIES: [(&str, Strategy); 2] = [
    ("sequential", Strategy::Sequential),
    ("parallel", Strategy::Parallel),
];

fn distances(c: &mut Criterion) {
    let g = erdos_renyi(600, 0.01, 11).unwrap();
    let mut group = c.benchmark_group("all_pairs_distances/n600");
    for (name, s) in STRATEGIES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| all_pairs_distances_with(black_box(&g), s).unwrap())
        });
    }
    group.finish();
}

fn exact_search(c: &mut Criterion) {
    let g = erdos_renyi(14, 0.3, 5).unwrap();
    let h = all_pairs_distances(&g).unwrap();
    let mut group = c.benchmark_group("exact/n14");
    group.sample_size(10);
    for (name, s) in STRATEGIES {
        let opts = SearchOptions::exact().with_strategy(s);
        group.bench_function(BenchmarkId::new("metric", name), |b| {
            b.iter(|| metric_dimension(black_box(&h), opts).unwrap())
        });
        group.bench_function(BenchmarkId::new("link", name), |b| {
            b.iter(|| link_dimension(black_box(&g), &h, opts).unwrap())
        });
        group.bench_function(BenchmarkId::new("strong", name), |b| {
            b.iter(|| strong_metric_dimension(black_box(&h), opts).unwrap())
        });
    }
    group.finish();
}

fn report(c: &mut Criterion) {
    let g = erdos_renyi(250, 0.03, 3).unwrap();
    let h = all_pairs_distances(&g).unwrap();
    let m = greedy_resolution_set(&h, Strategy::Parallel);
    let mut group = c.benchmark_group("ambiguity_report/n250");
    group.sample_size(10);
    for (name, s) in STRATEGIES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| ambiguity_report_with(black_box(&g), &h, &m, s))
        });
    }
    group.finish();
}

criterion_group!(benches, distances, exact_search, report);
criterion_main!(benches);
