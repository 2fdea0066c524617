use criterion::{criterion_group, criterion_main, Criterion};
use novikov_bench::odd_pair_rational;

fn bench_law_checks(c: &mut Criterion) {
    let alg = odd_pair_rational();
    c.bench_function("novikov_super_check_1_2_rational", |b| {
        b.iter(|| novikov::laws::novikov_superalgebra_holds(std::hint::black_box(&alg)))
    });
}

criterion_group!(benches, bench_law_checks);
criterion_main!(benches);
