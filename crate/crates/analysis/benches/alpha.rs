use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use streamcsp_analysis::alpha_with;
use streamcsp_core::{Exec, SymmetricPredicate};

fn bench_alpha(c: &mut Criterion) {
    let mut group = c.benchmark_group("alpha");
    group.sample_size(10);
    let preds = [
        ("4AND", SymmetricPredicate::kand(4).unwrap()),
        ("Th56", SymmetricPredicate::threshold(5, 6).unwrap()),
        ("f3_4", SymmetricPredicate::new(4, &[3]).unwrap()),
    ];
    for (name, f) in &preds {
        for exec in [Exec::Sequential, Exec::Parallel] {
            group.bench_with_input(BenchmarkId::new(format!("{exec:?}"), name), f, |b, f| {
                b.iter(|| alpha_with(f, exec))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, bench_alpha);
criterion_main!(benches);
