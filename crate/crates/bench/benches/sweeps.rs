use circsq_core::verify::{run_check, CheckId, SweepConfig};
use criterion::{criterion_group, criterion_main, Criterion};

fn sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweeps");
    group.sample_size(10);
    for (id, n) in [
        (CheckId::MainBound, 12),
        (CheckId::CaseBounds, 12),
        (CheckId::PowerChain, 10),
    ] {
        let cfg = SweepConfig::new(2, n);
        group.bench_function(format!("{id} k=2 n<={n}"), |b| {
            b.iter(|| run_check(&cfg, id).unwrap())
        });
        let parallel = cfg.clone().with_jobs(4);
        group.bench_function(format!("{id} k=2 n<={n} jobs=4"), |b| {
            b.iter(|| run_check(&parallel, id).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, sweeps);
criterion_main!(benches);
