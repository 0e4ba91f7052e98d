use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use skeinmagma::evaluate::{compute, state_sum};
use skeinmagma::magma::builtin;
use skeinmagma_bench::{fixture, twist};

fn fixtures(c: &mut Criterion) {
    let mut g = c.benchmark_group("fixtures");
    for (name, magma) in [("3_1", "kb-poly"), ("2_1m", "mkb-lee"), ("6_1_01", "mkb-lee"), ("spun_trefoil", "mkb-poly")] {
        let d = fixture(name);
        let m = builtin(magma).unwrap();
        g.bench_function(format!("{name}/{magma}"), |b| b.iter(|| state_sum(black_box(&d), &m).unwrap()));
    }
    let d = fixture("6_1_01");
    let m = builtin("mkb-quotient").unwrap();
    g.bench_function("6_1_01/mkb-quotient+rho", |b| b.iter(|| compute(black_box(&d), &m, &["rho-writhe"]).unwrap()));
    g.finish();
}

fn scaling(c: &mut Criterion) {
    let mut g = c.benchmark_group("twist");
    g.sample_size(10);
    let m = builtin("kb-poly").unwrap();
    for n in [4, 6, 8, 10] {
        let d = twist(n);
        g.bench_with_input(BenchmarkId::from_parameter(n), &d, |b, d| b.iter(|| state_sum(d, &m).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, fixtures, scaling);
criterion_main!(benches);
