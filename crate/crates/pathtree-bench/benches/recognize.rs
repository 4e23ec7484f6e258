use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use pathtree::oracle::oracle_is_path_graph;
use pathtree::{is_chordal, recognize_directed_path_graph, recognize_path_graph};
use pathtree_bench::{positive, small_chordal};

fn bench_recognize(c: &mut Criterion) {
    let mut group = c.benchmark_group("recognize");
    for &n in &[250usize, 500, 1000, 2000] {
        let g = positive(n, 7);
        group.bench_with_input(BenchmarkId::new("path", n), &g, |b, g| {
            b.iter(|| recognize_path_graph(black_box(g)).is_ok())
        });
    }
    for &n in &[250usize, 500] {
        let g = positive(n, 7);
        group.bench_with_input(BenchmarkId::new("directed", n), &g, |b, g| {
            b.iter(|| recognize_directed_path_graph(black_box(g)).is_ok())
        });
    }
    group.finish();
}

fn bench_chordality(c: &mut Criterion) {
    let g = positive(2000, 7);
    c.bench_function("is_chordal/2000", |b| {
        b.iter(|| is_chordal(black_box(&g)))
    });
}

fn bench_oracle(c: &mut Criterion) {
    let g = small_chordal(6, 11);
    c.bench_function("oracle/6-cliques", |b| {
        b.iter(|| oracle_is_path_graph(black_box(&g)).unwrap())
    });
}

criterion_group!(benches, bench_recognize, bench_chordality, bench_oracle);
criterion_main!(benches);
