use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use spherecert::oracle;
use spherecert::Exec;

fn modes() -> Vec<(&'static str, Exec)> {
    let mut m = vec![("sequential", Exec::Sequential)];
    if Exec::parallel_available() {
        m.push(("parallel", Exec::Parallel));
    }
    m
}

fn sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweeps");
    group.sample_size(10);
    for (name, exec) in modes() {
        group.bench_with_input(BenchmarkId::new("pairs_n5", name), &exec, |b, &e| {
            b.iter(|| assert!(oracle::cross_check_pairs(5, e).passed()))
        });
        group.bench_with_input(BenchmarkId::new("triples_n4", name), &exec, |b, &e| {
            b.iter(|| assert!(oracle::cross_check_triples(4, e).passed()))
        });
        group.bench_with_input(BenchmarkId::new("mesh_n5", name), &exec, |b, &e| {
            b.iter(|| assert!(oracle::sweep_mesh(5, e).passed()))
        });
    }
    group.finish();
}

criterion_group!(benches, sweeps);
criterion_main!(benches);
