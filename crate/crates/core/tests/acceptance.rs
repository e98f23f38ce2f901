//! One line per acceptance criterion. Run with `--nocapture` to see them.

use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use scoid_core::elementwise::ElementSpace;
use scoid_core::module::module_from_factors;
use scoid_core::predicates::pointwise_at;
use scoid_core::theorems::corpus::invariant_factor_lists;
use scoid_core::{
    enumerate_submodules, generate_corpus, reproduce_examples, verify_all, CorpusConfig, FinModule, ModuleContext,
    MultSet, Options, Property, Ring, VerifyConfig, Workbench,
};

const EXAMPLES_BUDGET: Duration = Duration::from_secs(1);
const HARNESS_BUDGET: Duration = Duration::from_secs(600);
const SAMPLE_SEED: u64 = 20_240_601;
const SAMPLES: usize = 50;

struct Line {
    id: u32,
    name: &'static str,
    ok: bool,
    detail: String,
}

fn modules_up_to(max_order: u128, moduli: std::ops::RangeInclusive<u64>) -> Vec<Arc<FinModule>> {
    let mut out = Vec::new();
    for n in moduli {
        let ring = Ring::modular(n).unwrap();
        for fs in invariant_factor_lists(n, max_order) {
            out.push(Arc::new(module_from_factors(&ring, &fs).unwrap()));
        }
    }
    out
}

/// Modules over `Z/n` for `n` up to 16 and over the product rings of the default corpus.
fn small_modules() -> Vec<Arc<FinModule>> {
    let mut out = modules_up_to(16, 2..=16);
    let corpus = generate_corpus(&CorpusConfig::with_max_order(16)).unwrap();
    for inst in &corpus.instances {
        if !inst.factors.is_empty() && !out.contains(&inst.module) {
            out.push(inst.module.clone());
        }
    }
    out
}

fn lattice_matches_oracle(m: &Arc<FinModule>) -> bool {
    let lattice = enumerate_submodules(m).unwrap();
    let space = ElementSpace::new(m).unwrap();
    let mut ours: Vec<Vec<usize>> = lattice.all().iter().map(|n| space.set_of(n).ones().collect()).collect();
    ours.sort();
    ours == space.sorted_submodules()
}

fn count(n: u64, fs: &[u64]) -> usize {
    let m = Arc::new(module_from_factors(&Ring::modular(n).unwrap(), fs).unwrap());
    enumerate_submodules(&m).unwrap().len()
}

fn divisor_count(n: u64) -> usize {
    (1..=n).filter(|d| n.is_multiple_of(*d)).count()
}

fn golden() -> Line {
    let start = Instant::now();
    let out = reproduce_examples(&Workbench::new()).unwrap();
    let took = start.elapsed();
    let matched = out.iter().filter(|o| o.matched).count();
    let mut detail = format!("{matched}/{} matched in {took:.2?} (budget {EXAMPLES_BUDGET:?})", out.len());
    for o in out.iter().filter(|o| !o.matched) {
        detail.push_str(&format!("; {}: observed {}", o.id, o.observed));
    }
    Line { id: 1, name: "golden examples", ok: matched == out.len() && took < EXAMPLES_BUDGET, detail }
}

fn harness() -> (Line, Line) {
    let bench = Workbench::new();
    let cfg = CorpusConfig::default();
    let start = Instant::now();
    let corpus = generate_corpus(&cfg).unwrap();
    let report = verify_all(&corpus, &bench, &VerifyConfig::new()).unwrap();
    let took = start.elapsed();
    let few_sets: Vec<String> = corpus
        .menus
        .iter()
        .filter(|m| m.labeled < 6)
        .map(|m| m.ring.to_string())
        .collect();
    let vacuous = report.vacuous();
    let probes_found = report.probes.iter().all(|p| p.found > 0);
    let ok = report.violations == 0 && vacuous.is_empty() && few_sets.is_empty() && probes_found && took < HARNESS_BUDGET;
    let two = Line {
        id: 2,
        name: "theorem harness",
        ok,
        detail: format!(
            "{} instances, {} violations, vacuous {:?}, rings with < 6 set choices {:?}, probes found {}, {took:.1?} (budget {HARNESS_BUDGET:?})",
            report.corpus.instances, report.violations, vacuous, few_sets, probes_found
        ),
    };

    let again = verify_all(&corpus, &Workbench::new(), &VerifyConfig::new()).unwrap();
    let identical = report.to_json() == again.to_json();
    let a = &report.witness_audit;
    let five = Line {
        id: 5,
        name: "witness soundness",
        ok: a.witnesses_failed == 0 && a.refutations_failed == 0 && a.skipped_modules == 0 && a.witnesses_checked > 0 && identical,
        detail: format!(
            "{} witnesses re-validated ({} rejected), {} refutations ({} contradicted), {} modules skipped, reports identical: {identical}",
            a.witnesses_checked, a.witnesses_failed, a.refutations_checked, a.refutations_failed, a.skipped_modules
        ),
    };
    (two, five)
}

fn oracle() -> Line {
    let small = small_modules();
    let bad_small: Vec<String> = small.iter().filter(|m| !lattice_matches_oracle(m)).map(|m| m.to_string()).collect();

    let pool = modules_up_to(64, 2..=64);
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    let sample: Vec<&Arc<FinModule>> = pool.choose_multiple(&mut rng, SAMPLES).collect();
    let bad_sample: Vec<String> = sample.iter().filter(|m| !lattice_matches_oracle(m)).map(|m| m.to_string()).collect();

    let mut closed = Vec::new();
    for n in 2..=64 {
        if count(n, &[n]) != divisor_count(n) {
            closed.push(format!("Z/{n}"));
        }
    }
    for p in [2u64, 3, 5] {
        if count(p, &[p, p]) != p as usize + 3 {
            closed.push(format!("Z/{p} + Z/{p}"));
        }
    }
    // (M1 over Z/a) + (M2 over Z/b) with gcd(a, b) = 1, as one module over Z/ab
    let pairs: [(u64, &[u64], u64, &[u64]); 4] =
        [(4, &[2, 4], 3, &[3, 3]), (8, &[8], 9, &[3, 9]), (2, &[2, 2, 2], 5, &[5]), (4, &[4, 4], 3, &[3])];
    for (a, f1, b, f2) in pairs {
        let k = f1.len().max(f2.len());
        let pad = |f: &[u64]| -> Vec<u64> { std::iter::repeat_n(1, k - f.len()).chain(f.iter().copied()).collect() };
        let combined: Vec<u64> =
            pad(f1).iter().zip(pad(f2)).map(|(x, y)| x * y).filter(|&d| d > 1).collect();
        if count(a * b, &combined) != count(a, f1) * count(b, f2) {
            closed.push(format!("{combined:?} over Z/{}", a * b));
        }
    }
    Line {
        id: 3,
        name: "oracle equivalence",
        ok: bad_small.is_empty() && bad_sample.is_empty() && closed.is_empty(),
        detail: format!(
            "{} small modules (mismatch {:?}), {} sampled with seed {SAMPLE_SEED} (mismatch {:?}), closed-form failures {:?}",
            small.len(),
            bad_small,
            sample.len(),
            bad_sample,
            closed
        ),
    }
}

fn laws_hold(ctx: &ModuleContext) -> Option<String> {
    let ns = ctx.len() as u32;
    let ni = ctx.n_ideals() as u32;
    let top = ctx.top();
    let zero = ctx.zero();
    for n in 0..ns {
        let ann = ctx.ann(n);
        if !ctx.subset(n, ctx.colon_into(zero, ctx.imul(ann, ann))) {
            return Some(format!("N inside (0 : Ann^2 N) at {}", ctx.sub(n)));
        }
        let c = ctx.whole_colon(n);
        if !ctx.subset(ctx.action(ctx.imul(c, c), top), n) {
            return Some(format!("(N : M)^2 M inside N at {}", ctx.sub(n)));
        }
        for k in 0..ns {
            if ctx.ann(ctx.sum(n, k)) != ctx.imeet(ctx.ann(n), ctx.ann(k)) {
                return Some(format!("Ann(N + K) at {}, {}", ctx.sub(n), ctx.sub(k)));
            }
            for i in 0..ni {
                let a = ctx.subset(ctx.action(i, n), k);
                let b = ctx.ideal_subset(i, ctx.colon_ring(k, n));
                let c = ctx.subset(n, ctx.colon_into(k, i));
                if a != b || b != c {
                    return Some(format!("adjunction at {}, {}, {}", ctx.ideal(i), ctx.sub(n), ctx.sub(k)));
                }
            }
        }
    }
    None
}

fn algebra() -> Line {
    let bench = Workbench::new();
    let mods = small_modules();
    let failures: Vec<String> = mods
        .iter()
        .filter_map(|m| laws_hold(&bench.context(m).unwrap()).map(|e| format!("{m}: {e}")))
        .collect();
    Line {
        id: 4,
        name: "operator algebra laws",
        ok: failures.is_empty(),
        detail: format!("{} modules, all triples; failures {:?}", mods.len(), failures),
    }
}

fn classical_disagreements(bench: &Workbench, m: &Arc<FinModule>) -> Vec<String> {
    let ctx = bench.context(m).unwrap();
    let space = ElementSpace::new(m).unwrap();
    let one = ctx.view(&MultSet::one(m.ring()).unwrap()).unwrap();
    let opts = Options::default();
    let mut bad = Vec::new();
    for (i, n) in ctx.lattice().all().iter().enumerate() {
        let x = space.set_of(n);
        let checks = [
            (Property::Coidempotent, space.is_coidempotent(&x)),
            (Property::Idempotent, space.is_idempotent(&x)),
            (Property::Pure, space.is_pure(&x)),
            (Property::Copure, space.is_copure(&x)),
            (Property::DirectSummand, space.is_direct_summand(&x)),
            (Property::SFinite, true),
        ];
        for (prop, expected) in checks {
            if pointwise_at(&ctx, prop, i as u32, &one, opts).holds != expected {
                bad.push(format!("{prop} at {n} in {m}"));
            }
        }
    }
    let module_level = [
        ("comultiplication", ctx.properties().comultiplication.iter().all(|&i| one.meets(i)), space.is_comultiplication()),
        ("multiplication", ctx.properties().multiplication.iter().all(|&i| one.meets(i)), space.is_multiplication()),
        (
            "semisimple",
            scoid_core::predicates::fully_view(&ctx, Property::DirectSummand, &one, opts).holds,
            space.is_semisimple(),
        ),
    ];
    for (name, ours, expected) in module_level {
        if ours != expected {
            bad.push(format!("{name} of {m}"));
        }
    }
    bad
}

fn classical() -> Line {
    let bench = Workbench::new();
    let mods = small_modules();
    let bad: Vec<String> = mods.iter().flat_map(|m| classical_disagreements(&bench, m)).collect();
    Line {
        id: 6,
        name: "classical specialization",
        ok: bad.is_empty(),
        detail: format!("{} modules, every property at S = {{1}}; disagreements {:?}", mods.len(), bad),
    }
}

#[test]
fn acceptance() {
    let mut lines = vec![golden()];
    let (two, five) = harness();
    lines.push(two);
    lines.push(oracle());
    lines.push(algebra());
    lines.push(five);
    lines.push(classical());
    lines.sort_by_key(|l| l.id);
    for l in &lines {
        println!("[{}] {}. {}: {}", if l.ok { "PASS" } else { "FAIL" }, l.id, l.name, l.detail);
    }
    let failed: Vec<u32> = lines.iter().filter(|l| !l.ok).map(|l| l.id).collect();
    assert!(failed.is_empty(), "criteria failed: {failed:?}");
}
