use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use mwidth::checks::{run_check, CheckConfig, Theorem};
use mwidth::Execution;

const BATCHES: [(Theorem, u64); 5] = [
    (Theorem::TreeEquality, 200),
    (Theorem::IntervalEquality, 200),
    (Theorem::ImwIw, 200),
    (Theorem::SigmaNu, 100),
    (Theorem::DeficiencyChoice, 100),
];

fn execution_modes(c: &mut Criterion) {
    for (theorem, trials) in BATCHES {
        let mut group = c.benchmark_group(theorem.id());
        group.sample_size(10);
        for (name, exec) in [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)] {
            let mut cfg = CheckConfig::new(theorem, 42, trials);
            cfg.exec = exec;
            group.bench_with_input(BenchmarkId::new(name, trials), &cfg, |b, cfg| {
                b.iter(|| {
                    let s = run_check(cfg);
                    assert!(s.all_passed());
                    s
                })
            });
        }
        group.finish();
    }
}

criterion_group!(benches, execution_modes);
criterion_main!(benches);
