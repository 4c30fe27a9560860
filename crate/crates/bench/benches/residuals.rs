use criterion::{criterion_group, criterion_main, Criterion};
use hombrax_bench::{extension_pair, phi_pair};
use hombrax_core::braid::{hexagon_target, tensor_power_solution, theta_operator};
use hombrax_core::hybe::{braid_relation_residuals, hybe_residual, ybe_residual};
use hombrax_core::quantum::{bql, phi};

fn symbolic(c: &mut Criterion) {
    let p = phi();
    c.bench_function("ybe phi symbolic", |b| b.iter(|| ybe_residual(&p).unwrap()));
    let b3 = bql(3).unwrap();
    c.bench_function("ybe bql N=3 symbolic", |b| {
        b.iter(|| ybe_residual(&b3).unwrap())
    });
}

fn numeric(c: &mut Criterion) {
    let (b, a) = extension_pair();
    c.bench_function("hybe extension", |x| {
        x.iter(|| hybe_residual(&b, &a).unwrap())
    });
    c.bench_function("braid relations extension n=4", |x| {
        x.iter(|| braid_relation_residuals(&b, &a, 4).unwrap())
    });
    let (b, a) = phi_pair();
    c.bench_function("theta hexagon n=2", |x| {
        x.iter(|| theta_operator(&hexagon_target(2), &b, &a).unwrap())
    });
    let (b2, a2) = tensor_power_solution(&b, &a, 2).unwrap();
    c.bench_function("hybe tensor power n=2", |x| {
        x.iter(|| hybe_residual(&b2, &a2).unwrap())
    });
}

criterion_group!(benches, symbolic, numeric);
criterion_main!(benches);
