//! Independent re-validation of verdicts on explicit element sets.
//!
//! Every positive verdict's witness is re-checked against the defining
//! inclusion, and every negative verdict is re-checked by trying each
//! element of `S`. Results of the element-level checks are memoised per
//! module, property, submodule and scalar, since the same checks recur
//! across the multiplicative sets of one ring.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex};

use serde::Serialize;

use crate::context::{ModuleContext, SView};
use crate::elementwise::{ElemSet, ElementSpace};
use crate::error::Result;
use crate::module::FinModule;
use crate::predicates::{comultiplication_at, multiplication_at, pointwise_at, Options, Property};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Check {
    Coidempotent,
    Idempotent,
    Pure,
    Copure,
    Summand { strict: bool },
    Comultiplication,
    Multiplication,
}

struct Space {
    space: ElementSpace,
    sets: Vec<ElemSet>,
    memo: Mutex<HashMap<(Check, u32, usize), bool>>,
}

impl Space {
    fn eval(&self, check: Check, n: u32, s: usize) -> bool {
        if let Some(&v) = self.memo.lock().expect("audit memo").get(&(check, n, s)) {
            return v;
        }
        let x = &self.sets[n as usize];
        let v = match check {
            Check::Coidempotent => self.space.coidempotent_with(x, s),
            Check::Idempotent => self.space.idempotent_with(x, s),
            Check::Pure => self.space.pure_with(x, s),
            Check::Copure => self.space.copure_with(x, s),
            Check::Summand { strict } => self.space.direct_summand_with(x, s, strict),
            Check::Comultiplication => self.space.comultiplication_at(x, s),
            Check::Multiplication => self.space.multiplication_at(x, s),
        };
        self.memo.lock().expect("audit memo").insert((check, n, s), v);
        v
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AuditStats {
    pub witnesses_checked: u64,
    pub witnesses_failed: u64,
    pub refutations_checked: u64,
    pub refutations_failed: u64,
    pub skipped_modules: u64,
    pub failures: Vec<String>,
}

/// Shared across parallel workers.
#[derive(Default)]
pub struct WitnessAudit {
    spaces: Mutex<HashMap<FinModule, Option<Arc<Space>>>>,
    witnesses: AtomicU64,
    witness_failures: AtomicU64,
    refutations: AtomicU64,
    refutation_failures: AtomicU64,
    skipped: AtomicU64,
    failures: Mutex<Vec<String>>,
}

impl WitnessAudit {
    pub fn new() -> WitnessAudit {
        WitnessAudit::default()
    }

    fn space(&self, ctx: &ModuleContext) -> Option<Arc<Space>> {
        let key = (**ctx.module()).clone();
        if let Some(s) = self.spaces.lock().expect("audit spaces").get(&key) {
            return s.clone();
        }
        let built = ElementSpace::new(ctx.module()).ok().map(|space| {
            let sets = ctx.lattice().all().iter().map(|n| space.set_of(n)).collect();
            Arc::new(Space { space, sets, memo: Mutex::default() })
        });
        if built.is_none() {
            self.skipped.fetch_add(1, Ordering::Relaxed);
        }
        self.spaces.lock().expect("audit spaces").entry(key).or_insert(built).clone()
    }

    fn fail(&self, msg: String) {
        let mut f = self.failures.lock().expect("audit failures");
        if f.len() < 20 {
            f.push(msg);
        }
    }

    /// Re-check every pointwise verdict and every per-submodule
    /// (co)multiplication verdict of `ctx` under `s`.
    pub fn audit_module(&self, ctx: &ModuleContext, s: &SView) -> Result<()> {
        let Some(space) = self.space(ctx) else { return Ok(()) };
        let scalars: Vec<usize> =
            s.set().elements().iter().map(|x| space.space.ring_index(x)).collect::<Result<_>>()?;
        let props = [
            (Property::Coidempotent, Check::Coidempotent, true),
            (Property::Idempotent, Check::Idempotent, true),
            (Property::Pure, Check::Pure, true),
            (Property::Copure, Check::Copure, true),
            (Property::DirectSummand, Check::Summand { strict: true }, true),
            (Property::DirectSummand, Check::Summand { strict: false }, false),
        ];
        for n in 0..ctx.len() as u32 {
            for (prop, check, strict) in props {
                let v = pointwise_at(ctx, prop, n, s, Options { strict_ds: strict, uniform: false });
                let what = format!("{prop} (strict {strict}) of {} in {}", ctx.sub(n), ctx.module());
                self.record(&space, check, n, &scalars, v.holds, v.witness.as_ref().and_then(|w| w.s.as_ref()), &what)?;
                if let (Some(w), Check::Summand { strict }) = (&v.witness, check) {
                    let k = ctx.index(w.complement.as_ref().expect("summand witness has K"))?;
                    let si = space.space.ring_index(w.s.as_ref().expect("summand witness has s"))?;
                    if !space.space.summand_with(&space.sets[n as usize], &space.sets[k as usize], si, strict) {
                        self.witness_failures.fetch_add(1, Ordering::Relaxed);
                        self.fail(format!("complement {} rejected for {what}", ctx.sub(k)));
                    }
                }
            }
            for (check, v) in [
                (Check::Comultiplication, comultiplication_at(ctx, n, s)),
                (Check::Multiplication, multiplication_at(ctx, n, s)),
            ] {
                let what = format!("{check:?} condition at {} in {}", ctx.sub(n), ctx.module());
                self.record(&space, check, n, &scalars, v.holds, v.witness.as_ref().and_then(|w| w.s.as_ref()), &what)?;
                if let Some(w) = &v.witness {
                    let i = space.space.ideal_set(w.ideal.as_ref().expect("ideal witness"));
                    let si = space.space.ring_index(w.s.as_ref().expect("scalar witness"))?;
                    let x = &space.sets[n as usize];
                    let whole = space.space.whole();
                    let ok = match check {
                        Check::Comultiplication => {
                            let t = space.space.colon_into(&space.space.zero_sub(), &i);
                            x.is_subset(&t) && space.space.scalar(si, &t).is_subset(x)
                        }
                        _ => {
                            let im = space.space.action(&i, &whole);
                            im.is_subset(x) && space.space.scalar(si, x).is_subset(&im)
                        }
                    };
                    self.witnesses.fetch_add(1, Ordering::Relaxed);
                    if !ok {
                        self.witness_failures.fetch_add(1, Ordering::Relaxed);
                        self.fail(format!("ideal {} rejected for {what}", w.ideal.as_ref().expect("ideal witness")));
                    }
                }
            }
        }
        Ok(())
    }

    #[allow(clippy::too_many_arguments)]
    fn record(
        &self,
        space: &Space,
        check: Check,
        n: u32,
        scalars: &[usize],
        holds: bool,
        witness: Option<&crate::ring::RingElement>,
        what: &str,
    ) -> Result<()> {
        if holds {
            let s = witness.expect("positive pointwise verdicts carry s");
            let si = space.space.ring_index(s)?;
            self.witnesses.fetch_add(1, Ordering::Relaxed);
            if !space.eval(check, n, si) {
                self.witness_failures.fetch_add(1, Ordering::Relaxed);
                self.fail(format!("witness {s} rejected for {what}"));
            }
        } else {
            self.refutations.fetch_add(1, Ordering::Relaxed);
            if let Some(&si) = scalars.iter().find(|&&si| space.eval(check, n, si)) {
                self.refutation_failures.fetch_add(1, Ordering::Relaxed);
                self.fail(format!("{what} refuted, yet {} works", space.space.ring_element(si)));
            }
        }
        Ok(())
    }

    pub fn stats(&self) -> AuditStats {
        AuditStats {
            witnesses_checked: self.witnesses.load(Ordering::Relaxed),
            witnesses_failed: self.witness_failures.load(Ordering::Relaxed),
            refutations_checked: self.refutations.load(Ordering::Relaxed),
            refutations_failed: self.refutation_failures.load(Ordering::Relaxed),
            skipped_modules: self.skipped.load(Ordering::Relaxed),
            failures: self.failures.lock().expect("audit failures").clone(),
        }
    }
}
