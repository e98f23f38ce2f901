//! Golden reproductions of the worked examples.

use std::sync::Arc;

use serde::Serialize;

use crate::context::{ModuleContext, Workbench};
use crate::dsl::{parse_module, parse_set, resolve_set, ModuleSpec};
use crate::error::{Error, Result};
use crate::module::{submodule_from_generators, FinModule, Submodule};
use crate::multset::{MultSet, ZMultSet};
use crate::predicates::{comultiplication, fully, fully_coidempotent_z, pointwise, Options, Property};
use crate::ring::Ring;

use super::corpus::{generate_corpus, CorpusConfig};

#[derive(Clone, Debug, Serialize)]
pub struct ExampleOutcome {
    pub id: String,
    pub claim: String,
    pub expected: String,
    pub observed: String,
    pub matched: bool,
}

fn outcome(id: &str, claim: &str, expected: String, observed: String) -> ExampleOutcome {
    let matched = expected == observed;
    ExampleOutcome { id: id.into(), claim: claim.into(), expected, observed, matched }
}

fn z_module(spec: &str) -> Result<Arc<FinModule>> {
    match parse_module(&Ring::Integers, spec)? {
        ModuleSpec::Finite(m) => Ok(m),
        ModuleSpec::Integers => Err(Error::Unsupported("expected a finite module".into())),
    }
}

fn z_set(m: &FinModule, spec: &str) -> Result<MultSet> {
    resolve_set(&parse_set(spec)?, m.ring())
}

fn line(m: &Arc<FinModule>, coords: &[u64]) -> Result<Submodule> {
    submodule_from_generators(m, &[m.element(coords)?])
}

fn show(n: &Option<Submodule>) -> String {
    n.as_ref().map_or("none".into(), |n| n.to_string())
}

fn integers() -> ExampleOutcome {
    let s = fully_coidempotent_z(&ZMultSet::NonZero);
    let one = fully_coidempotent_z(&ZMultSet::Units);
    outcome(
        "integers",
        "Z over Z with S = Z \\ {0}: fully S-coidempotent, not fully coidempotent",
        "fully S-coidempotent = true; fully coidempotent = false".into(),
        format!("fully S-coidempotent = {}; fully coidempotent = {}", s.holds, one.holds),
    )
}

fn klein(bench: &Workbench) -> Result<ExampleOutcome> {
    let m = z_module("Z/2 + Z/2")?;
    let ctx = bench.context(&m)?;
    let s = fully(&ctx, Property::Coidempotent, &z_set(&m, "gen:2")?, Options::default())?;
    let one = fully(&ctx, Property::Coidempotent, &z_set(&m, "trivial")?, Options::default())?;
    let axes = [line(&m, &[1, 0])?, line(&m, &[0, 1])?];
    let cx = match &one.counterexample {
        Some(n) if axes.contains(n) => "a coordinate line".to_string(),
        other => show(other),
    };
    Ok(outcome(
        "klein",
        "Z/2 + Z/2 over Z with S = {2^n}: fully S-coidempotent, not fully coidempotent",
        "fully S-coidempotent = true; fully coidempotent = false at a coordinate line".into(),
        format!("fully S-coidempotent = {}; fully coidempotent = {} at {cx}", s.holds, one.holds),
    ))
}

fn cyclic_four(bench: &Workbench) -> Result<ExampleOutcome> {
    let m = z_module("Z/4")?;
    let ctx = bench.context(&m)?;
    let set = z_set(&m, "comp-primes:2")?;
    let c = comultiplication(&ctx, &set)?;
    let f = fully(&ctx, Property::Coidempotent, &set, Options::default())?;
    let cx = if f.counterexample.as_ref() == Some(&line(&m, &[2])?) { "2Z/4".into() } else { show(&f.counterexample) };
    Ok(outcome(
        "cyclic-four",
        "Z/4 over Z with S = Z \\ 2Z: S-comultiplication, not fully S-coidempotent",
        "S-comultiplication = true; fully S-coidempotent = false at 2Z/4".into(),
        format!("S-comultiplication = {}; fully S-coidempotent = {} at {cx}", c.holds, f.holds),
    ))
}

fn square(bench: &Workbench, p: u64) -> Result<ExampleOutcome> {
    let m = z_module(&format!("Z/{p} + Z/{p}"))?;
    let ctx = bench.context(&m)?;
    let set = z_set(&m, &format!("comp-primes:{p}"))?;
    let copure = fully(&ctx, Property::Copure, &set, Options::default())?;
    let coid = fully(&ctx, Property::Coidempotent, &set, Options::default())?;
    let axis = pointwise(&ctx, Property::Coidempotent, &line(&m, &[0, 1])?, &set, Options::default())?;
    Ok(outcome(
        &format!("square-{p}"),
        &format!("Z/{p} + Z/{p} over Z with S = Z \\ {p}Z: fully S-copure, not fully S-coidempotent"),
        "fully S-copure = true; fully S-coidempotent = false; 0 + Z/p S-coidempotent = false".into(),
        format!(
            "fully S-copure = {}; fully S-coidempotent = {}; 0 + Z/p S-coidempotent = {}",
            copure.holds, coid.holds, axis.holds
        ),
    ))
}

/// Whenever `S` meets `Ann(M)`, that element witnesses every submodule.
fn annihilated(bench: &Workbench) -> Result<ExampleOutcome> {
    let corpus = generate_corpus(&CorpusConfig::with_max_order(16))?;
    let mut instances = 0u64;
    let mut bad = Vec::new();
    for inst in &corpus.instances {
        let ctx: Arc<ModuleContext> = bench.context(&inst.module)?;
        let s = &corpus.choice(inst).view;
        let Some(t) = s.witness(ctx.ann(ctx.top())) else { continue };
        instances += 1;
        let uniform = Options { uniform: true, ..Options::default() };
        let pointwise_ok = ctx.properties().coidempotent.iter().all(|&i| ctx.ideal(i).contains(t));
        let fully_ok = crate::predicates::fully_view(&ctx, Property::Coidempotent, s, Options::default()).holds;
        let uniform_ok = crate::predicates::fully_view(&ctx, Property::Coidempotent, s, uniform).holds;
        if !(pointwise_ok && fully_ok && uniform_ok) {
            bad.push(corpus.describe(inst));
        }
    }
    Ok(outcome(
        "annihilated",
        "S meeting Ann(M) makes M fully S-coidempotent with the annihilating witness",
        "failures = 0 over a nonempty family".into(),
        format!("failures = {}{}", bad.len(), if instances == 0 { " over an empty family" } else { " over a nonempty family" }),
    ))
}

/// Checks the five worked examples.
pub fn reproduce_examples(bench: &Workbench) -> Result<Vec<ExampleOutcome>> {
    let mut out = vec![integers(), klein(bench)?, cyclic_four(bench)?];
    for p in [2, 3, 5] {
        out.push(square(bench, p)?);
    }
    out.push(annihilated(bench)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_examples_match() {
        for o in reproduce_examples(&Workbench::new()).unwrap() {
            assert!(o.matched, "{}: expected {}, observed {}", o.id, o.expected, o.observed);
        }
    }
}
