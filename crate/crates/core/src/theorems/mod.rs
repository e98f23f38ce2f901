//! Executable theorem harness over a generated corpus of finite instances.

pub mod audit;
pub mod corpus;
pub mod examples;
pub mod registry;
pub mod report;

use std::time::Instant;

use rayon::prelude::*;
use serde_json::json;

use crate::context::Workbench;
use crate::error::Result;
use crate::predicates::{fully_view, property_ideal, Options, Property};

pub use audit::{AuditStats, WitnessAudit};
pub use corpus::{generate_corpus, Corpus, CorpusConfig, Instance, RingMenu, SChoice};
pub use examples::{reproduce_examples, ExampleOutcome};
pub use registry::{theorem_registry, Status, Theorem};
pub use report::{Probe, Report, TheoremResult};

#[derive(Clone, Debug, Default)]
pub struct VerifyConfig {
    /// Theorem ids to run; all when empty.
    pub theorems: Vec<String>,
    pub timings: bool,
    pub strict_ds: bool,
    /// Worker threads; rayon's default when zero.
    pub jobs: usize,
}

impl VerifyConfig {
    pub fn new() -> VerifyConfig {
        VerifyConfig { strict_ds: true, ..Default::default() }
    }
}

struct InstanceRun {
    results: Vec<TheoremResult>,
    probes: [bool; 3],
    uniform_mismatch: Option<String>,
}

fn run_instance(
    corpus: &Corpus,
    bench: &Workbench,
    audit: &WitnessAudit,
    theorems: &[Theorem],
    inst: &Instance,
    cfg: &VerifyConfig,
) -> Result<InstanceRun> {
    let env = registry::Env { corpus, bench, strict_ds: cfg.strict_ds };
    let spec = corpus.describe(inst);
    let mut results = Vec::with_capacity(theorems.len());
    for t in theorems {
        let start = Instant::now();
        let out = (t.check)(&env, inst)?;
        let millis = cfg.timings.then(|| start.elapsed().as_secs_f64() * 1e3);
        results.push(TheoremResult::new(t, &spec, out, millis));
    }

    let ctx = bench.context(&inst.module)?;
    let s = &corpus.choice(inst).view;
    audit.audit_module(&ctx, s)?;

    let opts = Options::default();
    let fully = |prop, uniform| fully_view(&ctx, prop, s, Options { uniform, ..opts }).holds;
    let coid = fully(Property::Coidempotent, false);
    let comult = ctx.properties().comultiplication.iter().all(|&i| s.meets(i));
    let one = ctx.view(&crate::multset::MultSet::one(ctx.module().ring())?)?;
    let classical = fully_view(&ctx, Property::Coidempotent, &one, opts).holds;
    let copure = fully(Property::Copure, false);
    let probes = [comult && !coid, coid && !classical, copure && !coid && !comult];

    let mut uniform_mismatch = None;
    let monotone = Property::ALL.into_iter().filter(|&p| property_ideal(&ctx, p, ctx.top()).is_some());
    for prop in monotone {
        if fully(prop, false) != fully(prop, true) {
            uniform_mismatch = Some(format!("{prop} on {spec}"));
            break;
        }
    }
    Ok(InstanceRun { results, probes, uniform_mismatch })
}

/// Runs the selected theorems on every instance of `corpus`.
pub fn verify_all(corpus: &Corpus, bench: &Workbench, cfg: &VerifyConfig) -> Result<Report> {
    let theorems: Vec<Theorem> = theorem_registry()
        .into_iter()
        .filter(|t| cfg.theorems.is_empty() || cfg.theorems.iter().any(|x| x.eq_ignore_ascii_case(t.id)))
        .collect();
    let audit = WitnessAudit::new();
    let work = || -> Result<Vec<InstanceRun>> {
        corpus
            .instances
            .par_iter()
            .map(|inst| run_instance(corpus, bench, &audit, &theorems, inst, cfg))
            .collect()
    };
    let runs = if cfg.jobs > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs)
            .build()
            .map_err(|e| crate::Error::Unsupported(format!("thread pool: {e}")))?
            .install(work)?
    } else {
        work()?
    };

    let mut report = Report::new(corpus, &theorems);
    let labels = [
        "S-comultiplication but not fully S-coidempotent",
        "fully S-coidempotent but not fully coidempotent",
        "fully S-copure but neither fully S-coidempotent nor S-comultiplication",
    ];
    let mut probes: Vec<Probe> = labels.iter().map(|l| Probe::new(l)).collect();
    let mut checked = 0u64;
    let mut mismatches = Vec::new();
    for (inst, run) in corpus.instances.iter().zip(runs) {
        for (p, hit) in probes.iter_mut().zip(run.probes) {
            if hit {
                p.record(corpus.describe(inst));
            }
        }
        checked += 1;
        mismatches.extend(run.uniform_mismatch);
        report.results.extend(run.results);
    }
    report.probes = probes;
    report.witness_audit = audit.stats();
    report.uniform_consistency = json!({"instances": checked, "mismatches": mismatches});
    report.notes.push(format!(
        "T16 checks families of size at most {} (at most {} on lattices above 100 submodules) together with the whole lattice",
        registry::family_bound(0),
        registry::family_bound(101)
    ));
    report.notes.push("T09 instantiates monomorphisms as submodule inclusions only".into());
    report.notes.push(format!(
        "direct summands use the {} reading",
        if cfg.strict_ds { "strict (N ∩ K = 0)" } else { "loose" }
    ));
    report.finish();
    Ok(report)
}
