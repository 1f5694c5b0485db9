use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use num_complex::Complex64;
use smirnov_bench::disk_polynomial;
use smirnov_core::{
    certified_max_modulus, certified_min_modulus, check_with, find_roots, modified_smirnov,
    CheckOptions, CompositeParams, GridOptions, InequalityInstance, OperatorContext,
};

fn bench_polynomial_ops(c: &mut Criterion) {
    let mut group = c.benchmark_group("polynomial");
    for &degree in &[4usize, 12, 32] {
        let p = disk_polynomial(1, degree);
        let z = Complex64::new(0.7, -0.4);
        group.bench_with_input(BenchmarkId::new("eval", degree), &p, |b, p| {
            b.iter(|| black_box(p.eval(black_box(z))))
        });
        group.bench_with_input(BenchmarkId::new("mul_self", degree), &p, |b, p| {
            b.iter(|| black_box(p.mul(p)))
        });
    }
    group.finish();
}

fn bench_operator(c: &mut Criterion) {
    let mut group = c.benchmark_group("operator");
    for &degree in &[4usize, 12] {
        let p = disk_polynomial(2, degree);
        let ctx = OperatorContext::new(Complex64::new(0.4, 0.3), degree).unwrap();
        group.bench_with_input(BenchmarkId::new("modified", degree), &p, |b, p| {
            b.iter(|| modified_smirnov(p, &ctx).unwrap())
        });
        let cp = CompositeParams::new(
            Complex64::new(0.3, 0.1),
            Complex64::new(-0.2, 0.4),
            1.5,
        )
        .unwrap();
        group.bench_with_input(BenchmarkId::new("composite", degree), &p, |b, p| {
            b.iter(|| smirnov_core::composite_transform(p, &ctx, &cp).unwrap())
        });
    }
    group.finish();
}

fn bench_roots(c: &mut Criterion) {
    let mut group = c.benchmark_group("roots");
    for &degree in &[4usize, 8, 12] {
        let p = disk_polynomial(3, degree);
        group.bench_with_input(BenchmarkId::new("find_all", degree), &p, |b, p| {
            b.iter(|| find_roots(p).unwrap())
        });
    }
    group.finish();
}

fn bench_circle(c: &mut Criterion) {
    let mut group = c.benchmark_group("circle");
    group.sample_size(20);
    let p = disk_polynomial(4, 8);
    group.bench_function("certified_max_1e-8", |b| {
        b.iter(|| certified_max_modulus(&p, 1e-8).unwrap())
    });
    group.bench_function("certified_min_capped", |b| {
        b.iter(|| {
            let opts = GridOptions {
                initial: 4096,
                cap: 1 << 15,
            };
            smirnov_core::circle::min_modulus_lenient(&p, 1e-8, opts)
        })
    });
    group.finish();
}

fn bench_check(c: &mut Criterion) {
    let mut group = c.benchmark_group("check");
    group.sample_size(20);
    let p = disk_polynomial(5, 8);
    let mut inst = InequalityInstance::new("thm1-2.1", p);
    inst.a = Complex64::new(0.3, 0.2);
    inst.alpha = Complex64::new(0.2, -0.4);
    inst.beta = Complex64::new(-0.1, 0.3);
    inst.r = 1.7;
    inst.z = Complex64::new(1.2, 0.4);
    inst.trusted = true;
    let opts = CheckOptions {
        grid_cap: 1 << 15,
        ..CheckOptions::default()
    };
    group.bench_function("thm1_instance", |b| {
        b.iter(|| check_with(&inst, &opts).unwrap())
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_polynomial_ops,
    bench_operator,
    bench_roots,
    bench_circle,
    bench_check
);
criterion_main!(benches);
