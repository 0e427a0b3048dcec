use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use ocpoly::harness::{random_poset, run_property_suite_with, Density, SuiteConfig};
use ocpoly::oracle::geometric_edges;
use ocpoly::polytope::{enumerate_psi, skeleton_with, vertices};
use ocpoly::{Exec, Kind, Poset};

const MODES: [(&str, Exec); 2] = [
    ("sequential", Exec::Sequential),
    ("parallel", Exec::Parallel),
];

fn skeletons(c: &mut Criterion) {
    let mut group = c.benchmark_group("skeleton");
    for (d, seed) in [(10, 3), (14, 5)] {
        let p = random_poset(d, Density::new(1, 3).unwrap(), seed).unwrap();
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, d), &p, |b, p| {
                b.iter(|| skeleton_with(black_box(p), Kind::Chain, exec))
            });
        }
    }
    group.finish();
}

fn psi(c: &mut Criterion) {
    let p = random_poset(12, Density::new(1, 3).unwrap(), 11).unwrap();
    let mut group = c.benchmark_group("enumerate_psi");
    for (name, exec) in MODES {
        group.bench_function(name, |b| b.iter(|| enumerate_psi(black_box(&p), exec)));
    }
    group.finish();
}

fn oracle_edges(c: &mut Criterion) {
    let points = vertices(&Poset::x_poset(), Kind::Chain);
    let mut group = c.benchmark_group("geometric_edges");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| geometric_edges(black_box(&points), exec))
        });
    }
    group.finish();
}

fn suite(c: &mut Criterion) {
    let cfg = SuiteConfig {
        exhaustive_max_d: 3,
        random_trials: 40,
        random_d_range: (5, 7),
        oracle_max_d: 4,
        ..SuiteConfig::default()
    };
    let mut group = c.benchmark_group("suite");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(name, |b| b.iter(|| run_property_suite_with(&cfg, exec)));
    }
    group.finish();
}

criterion_group!(benches, skeletons, psi, oracle_edges, suite);
criterion_main!(benches);
