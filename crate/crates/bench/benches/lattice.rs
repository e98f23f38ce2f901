use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use scoid_bench::lattice_cases;
use scoid_core::elementwise::ElementSpace;
use scoid_core::{enumerate_submodules, ModuleContext};

fn enumerate(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate");
    for (name, m) in lattice_cases() {
        g.bench_function(name, |b| b.iter(|| enumerate_submodules(black_box(&m)).unwrap().len()));
    }
    g.finish();
}

fn oracle(c: &mut Criterion) {
    let mut g = c.benchmark_group("naive_oracle");
    g.sample_size(10);
    for (name, m) in lattice_cases() {
        g.bench_function(name, |b| b.iter(|| ElementSpace::new(black_box(&m)).unwrap().submodules().len()));
    }
    g.finish();
}

fn context(c: &mut Criterion) {
    let mut g = c.benchmark_group("context_tables");
    g.sample_size(10);
    for (name, m) in lattice_cases() {
        g.bench_function(name, |b| {
            b.iter(|| {
                let ctx = ModuleContext::new(black_box(&m)).unwrap();
                ctx.properties().coidempotent.len()
            })
        });
    }
    g.finish();
}

criterion_group!(benches, enumerate, oracle, context);
criterion_main!(benches);
