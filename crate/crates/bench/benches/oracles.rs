use antiramsey_bench::forest;
use antiramsey_core::oracles::{brute_force_ar, brute_force_ex, SearchBudget};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn anti_ramsey(c: &mut Criterion) {
    let mut group = c.benchmark_group("brute_force_ar");
    group.sample_size(10);
    for (n, spec) in [(5, "3,2"), (6, "3,2"), (6, "4"), (6, "4,2")] {
        let f = forest(spec);
        for workers in [1, 4] {
            let budget = SearchBudget { parallelism: workers, ..SearchBudget::default() };
            group.bench_function(BenchmarkId::new(format!("n{n}/{spec}"), workers), |b| {
                b.iter(|| assert!(brute_force_ar(n, &f, budget).unwrap().exhausted))
            });
        }
    }
    group.finish();
}

fn turan(c: &mut Criterion) {
    let mut group = c.benchmark_group("brute_force_ex");
    group.sample_size(10);
    for (n, spec) in [(8, "5"), (8, "7"), (8, "4,3"), (10, "3")] {
        let f = forest(spec);
        let budget = SearchBudget::single_threaded();
        group.bench_function(BenchmarkId::new(spec, n), |b| {
            b.iter(|| assert!(brute_force_ex(n, &f, budget).unwrap().exhausted))
        });
    }
    group.finish();
}

criterion_group!(benches, anti_ramsey, turan);
criterion_main!(benches);
