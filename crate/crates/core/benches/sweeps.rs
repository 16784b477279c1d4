use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use reembed::census::{census_levels, oracle_sweep, table_row, DEFAULT_SWEEP_CAP};
use reembed::{enumerate_reembeddings, families, planar_embed, Execution, Surface};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle_sweep");
    group.sample_size(10);
    // 15 edges: 32768 twist sets.
    let g = census_levels(10, Execution::Sequential).pop().unwrap().swap_remove(0);
    let pe = planar_embed(&g).unwrap();
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::new(name, "n10"), &exec, |b, &exec| {
            b.iter(|| oracle_sweep(black_box(&g), &pe, DEFAULT_SWEEP_CAP, exec).unwrap())
        });
    }
    group.finish();
}

fn enumerate(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    let g = families::dodecahedron();
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::new(name, "dodecahedron"), &exec, |b, &exec| {
            b.iter(|| {
                for s in Surface::TARGETS {
                    black_box(enumerate_reembeddings(&g, s, false, exec).unwrap());
                }
            })
        });
    }
    group.finish();
}

fn census(c: &mut Criterion) {
    let mut group = c.benchmark_group("census");
    group.sample_size(10);
    let levels = census_levels(14, Execution::Parallel);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::new(name, "levels14"), &exec, |b, &exec| {
            b.iter(|| census_levels(black_box(14), exec))
        });
        group.bench_with_input(BenchmarkId::new(name, "row14"), &exec, |b, &exec| {
            b.iter(|| table_row(14, black_box(&levels[5]), exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, oracle, enumerate, census);
criterion_main!(benches);
