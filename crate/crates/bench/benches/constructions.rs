use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use rainbow_core::geometry::PointSet;
use rainbow_core::matchings::{explicit_rainbows, hm_components};
use rainbow_core::permutations::{rainbow_sequence, Permutation, PermutationFlips};
use rainbow_core::spanning_trees::rainbow_cycle as tree_cycle;
use rainbow_core::subsets::{enumerate_rainbow_sequences, rainbow_cycle as subset_cycle};
use rainbow_core::triangulations::{rainbow1_cycle, rainbow2_cycle, TriangulationFlips};
use rainbow_core::{exhaustive_rainbow_search, CycleRecord, SearchConfig};

fn triangulations(c: &mut Criterion) {
    let mut g = c.benchmark_group("triangulations");
    for n in [8u32, 12, 16] {
        g.bench_with_input(BenchmarkId::new("rainbow1", n), &n, |b, &n| {
            b.iter(|| rainbow1_cycle(black_box(n)))
        });
        g.bench_with_input(BenchmarkId::new("rainbow2", n), &n, |b, &n| {
            b.iter(|| rainbow2_cycle(black_box(n)))
        });
    }
    g.finish();
}

fn trees(c: &mut Criterion) {
    // points in convex position with a few pushed inside
    let coords: Vec<(i64, i64)> = vec![
        (0, 0),
        (100, 3),
        (205, 40),
        (230, 150),
        (160, 260),
        (40, 220),
        (90, 110),
        (140, 90),
    ];
    let x = PointSet::from_coords(&coords).expect("general position");
    c.bench_function("trees/rainbow r=3 n=8", |b| b.iter(|| tree_cycle(black_box(&x), 3)));
}

fn matchings(c: &mut Criterion) {
    let mut g = c.benchmark_group("matchings");
    g.sample_size(10);
    g.bench_function("explicit", |b| b.iter(explicit_rainbows));
    g.bench_function("hm_components m=10", |b| b.iter(|| hm_components(black_box(10))));
    g.finish();
}

fn permutations(c: &mut Criterion) {
    c.bench_function("permutations/sequence n=13", |b| {
        b.iter(|| rainbow_sequence(black_box(13)))
    });
    let fam = PermutationFlips { n: 5 };
    let start = [Permutation::identity(5)];
    c.bench_function("permutations/search n=5", |b| {
        b.iter(|| exhaustive_rainbow_search(&fam, &start, &SearchConfig::new(1)))
    });
}

fn subsets(c: &mut Criterion) {
    let mut g = c.benchmark_group("subsets");
    g.sample_size(10);
    g.bench_function("rainbow n=15 k=4", |b| b.iter(|| subset_cycle(black_box(15), 4)));
    g.bench_function("enumerate l=5", |b| {
        b.iter(|| enumerate_rainbow_sequences(black_box(5), None))
    });
    g.finish();
}

fn verification(c: &mut Criterion) {
    let fam = TriangulationFlips::new(14);
    let cycle = rainbow2_cycle(14).expect("n >= 7");
    let record = CycleRecord::new(&fam, &cycle, 2);
    c.bench_function("verify/triangulation n=14 r=2", |b| b.iter(|| record.verify()));
}

criterion_group!(
    benches,
    triangulations,
    trees,
    matchings,
    permutations,
    subsets,
    verification
);
criterion_main!(benches);
