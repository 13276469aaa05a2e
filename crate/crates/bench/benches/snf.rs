use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use jt_core::jacobitrudi::{build, NPoly, QyPoly};
use jt_core::Partition;

fn reduce_vs_minors(c: &mut Criterion) {
    let mut group = c.benchmark_group("snf_npoly");
    for (shape, t) in [("3,2,1", 3), ("7,5,5,2", 4), ("5,4,3,2,1", 5)] {
        let shape: Partition = shape.parse().unwrap();
        let m = build::<NPoly>(&shape, t).unwrap();
        let id = format!("{shape}/t={t}");
        group.bench_with_input(BenchmarkId::new("reduce", &id), &m, |b, m| {
            b.iter(|| black_box(m).snf_reduce())
        });
        group.bench_with_input(BenchmarkId::new("minors", &id), &m, |b, m| {
            b.iter(|| black_box(m).snf_via_minors().unwrap())
        });
    }
    group.finish();
}

fn reduce_q(c: &mut Criterion) {
    let shape: Partition = "3,2,1".parse().unwrap();
    let m = build::<QyPoly>(&shape, 3).unwrap();
    c.bench_function("snf_qy/3,2,1/t=3", |b| b.iter(|| black_box(&m).snf_reduce()));
}

criterion_group!(benches, reduce_vs_minors, reduce_q);
criterion_main!(benches);
