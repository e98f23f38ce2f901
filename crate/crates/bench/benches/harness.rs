use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use scoid_bench::module;
use scoid_core::predicates::fully_view;
use scoid_core::{generate_corpus, verify_all, CorpusConfig, MultSet, Options, Property, VerifyConfig, Workbench};

fn verify_small(c: &mut Criterion) {
    let corpus = generate_corpus(&CorpusConfig::with_max_order(8)).unwrap();
    let mut g = c.benchmark_group("verify");
    g.sample_size(10);
    g.bench_function("max_order_8", |b| {
        b.iter(|| verify_all(black_box(&corpus), &Workbench::new(), &VerifyConfig::new()).unwrap().violations)
    });
    g.finish();
}

fn fully_queries(c: &mut Criterion) {
    let m = module(4, &[2, 4, 4]);
    let ctx = Workbench::new().context(&m).unwrap();
    let s = ctx.view(&MultSet::units(m.ring()).unwrap()).unwrap();
    let mut g = c.benchmark_group("fully");
    for prop in Property::ALL {
        g.bench_function(prop.name(), |b| b.iter(|| fully_view(&ctx, prop, black_box(&s), Options::default()).holds));
    }
    g.finish();
}

criterion_group!(benches, verify_small, fully_queries);
criterion_main!(benches);
