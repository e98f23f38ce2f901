//! One executable check per result, each a material implication evaluated
//! on a single instance.

use std::sync::Arc;

use serde_json::{json, Value};

use crate::context::{ModuleContext, SView, Workbench};
use crate::error::Result;
use crate::module::{annihilator, colon_into, localize_module, s_torsion, Submodule};
use crate::multset::MultSet;
use crate::predicates::{fully_view, Options, Property};
use crate::ring::{maximal_ideals, prime_ideals};

use super::corpus::{Corpus, Instance};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Violation,
    Inapplicable,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Violation => "violation",
            Status::Inapplicable => "inapplicable",
        }
    }
}

/// Outcome of one theorem on one instance.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub status: Status,
    pub parts: Vec<Value>,
    pub witness: Option<Value>,
    pub counterexample: Option<Value>,
    pub note: Option<String>,
}

/// Collects the parts of a multi-part statement.
#[derive(Default)]
struct Parts {
    parts: Vec<Value>,
    applied: bool,
    violated: bool,
    counterexample: Option<Value>,
    witness: Option<Value>,
    note: Option<String>,
}

impl Parts {
    fn imply(&mut self, name: &str, premise: bool, conclusion: bool) -> &mut Self {
        let state = match (premise, conclusion) {
            (false, _) => "vacuous",
            (true, true) => "holds",
            (true, false) => "violated",
        };
        self.applied |= premise;
        if premise && !conclusion {
            self.violated = true;
        }
        self.parts.push(json!({"part": name, "result": state}));
        self
    }

    fn equiv(&mut self, name: &str, left: bool, right: bool) -> &mut Self {
        self.applied = true;
        let state = if left == right { "holds" } else { "violated" };
        if left != right {
            self.violated = true;
        }
        self.parts.push(json!({"part": name, "left": left, "right": right, "result": state}));
        self
    }

    fn cert(&mut self, v: Value) {
        if self.counterexample.is_none() {
            self.counterexample = Some(v);
        }
    }

    fn finish(self) -> Outcome {
        let status = if self.violated {
            Status::Violation
        } else if self.applied {
            Status::Pass
        } else {
            Status::Inapplicable
        };
        Outcome {
            status,
            parts: self.parts,
            witness: self.witness,
            counterexample: if self.violated { self.counterexample } else { None },
            note: self.note,
        }
    }
}

fn inapplicable(reason: &str) -> Outcome {
    Outcome { status: Status::Inapplicable, parts: Vec::new(), witness: None, counterexample: None, note: Some(reason.into()) }
}

/// Shared state for evaluating checks.
pub struct Env<'a> {
    pub corpus: &'a Corpus,
    pub bench: &'a Workbench,
    pub strict_ds: bool,
}

fn fully(ctx: &ModuleContext, prop: Property, s: &SView) -> bool {
    fully_view(ctx, prop, s, Options::default()).holds
}

fn first_failure(ctx: &ModuleContext, prop: Property, s: &SView) -> Option<Submodule> {
    fully_view(ctx, prop, s, Options::default()).counterexample
}

fn comult(ctx: &ModuleContext, s: &SView) -> bool {
    ctx.properties().comultiplication.iter().all(|&i| s.meets(i))
}

fn mult(ctx: &ModuleContext, s: &SView) -> bool {
    ctx.properties().multiplication.iter().all(|&i| s.meets(i))
}

fn one_view(ctx: &ModuleContext) -> Result<SView> {
    ctx.view(&MultSet::one(ctx.module().ring())?)
}

fn view_of(ctx: &ModuleContext, s: &MultSet) -> Result<SView> {
    ctx.view(s)
}

impl Env<'_> {
    fn ctx_of(&self, inst: &Instance) -> Result<Arc<ModuleContext>> {
        self.bench.context(&inst.module)
    }

    fn s<'b>(&'b self, inst: &Instance) -> &'b SView {
        &self.corpus.choice(inst).view
    }
}

type CheckFn = fn(&Env, &Instance) -> Result<Outcome>;

pub struct Theorem {
    pub id: &'static str,
    pub anchor: &'static str,
    pub check: CheckFn,
}

pub fn theorem_registry() -> Vec<Theorem> {
    vec![
        Theorem { id: "T01", anchor: "fully coidempotent implies fully S-coidempotent; the converse when S consists of units", check: t01 },
        Theorem { id: "T02", anchor: "fully S-coidempotent modules are S-comultiplication modules", check: t02 },
        Theorem { id: "T03", anchor: "fully S-coidempotent iff completely irreducible submodules are S-coidempotent iff s(0:Ann(N)Ann(K)) lies in N+K", check: t03 },
        Theorem { id: "T04", anchor: "S-comultiplication plus S-direct-summand completely irreducibles (or S-semisimple) gives fully S-coidempotent", check: t04 },
        Theorem { id: "T05", anchor: "enlarging S preserves fully S-coidempotent", check: t05 },
        Theorem { id: "T06", anchor: "fully S-coidempotent iff fully S*-coidempotent for the saturation S*", check: t06 },
        Theorem { id: "T07", anchor: "quotients of fully S-coidempotent modules are fully S-coidempotent", check: t07 },
        Theorem { id: "T08", anchor: "fully coidempotent iff fully (R-P)-coidempotent for all primes, all maximals, or maximals with nonzero localization", check: t08 },
        Theorem { id: "T09", anchor: "submodules inherit fully S-coidempotent; the converse along inclusions with tM inside N (inclusions only)", check: t09 },
        Theorem { id: "T10", anchor: "a product is fully S1xS2-coidempotent iff each factor is", check: t10 },
        Theorem { id: "T11", anchor: "localization commutes with (0:_M I) and with annihilators", check: t11 },
        Theorem { id: "T12", anchor: "fully S-coidempotent iff the localization is fully coidempotent", check: t12 },
        Theorem { id: "T13", anchor: "over an S-Noetherian ring fully S-coidempotent localizes to fully coidempotent", check: t13 },
        Theorem { id: "T14", anchor: "in an S-comultiplication module, S-copure is equivalent to three quotient conditions", check: t14 },
        Theorem { id: "T15", anchor: "fully S-coidempotent implies fully S-copure; the converse for S-comultiplication modules", check: t15 },
        Theorem { id: "T16", anchor: "s times the meet of (N_i + K) lies in (meet of N_i) + K for fully S-coidempotent modules", check: t16 },
        Theorem { id: "T17", anchor: "S-pure submodules of S-comultiplication modules are S-coidempotent", check: t17 },
        Theorem { id: "T18", anchor: "four transfers between fully S-pure, S-copure, S-idempotent and S-coidempotent under (co)multiplication", check: t18 },
        Theorem { id: "T19", anchor: "in S-comultiplication modules (0:I) inside (0:J) gives sJM inside IM", check: t19 },
        Theorem { id: "T20", anchor: "for S-finite modules fully S-coidempotent iff fully S-idempotent", check: t20 },
    ]
}

fn t01(env: &Env, inst: &Instance) -> Result<Outcome> {
    let ctx = env.ctx_of(inst)?;
    let s = env.s(inst);
    let one = one_view(&ctx)?;
    let classical = fully(&ctx, Property::Coidempotent, &one);
    let with_s = fully(&ctx, Property::Coidempotent, s);
    let mut p = Parts::default();
    p.imply("classical implies S-variant", classical, with_s);
    p.imply("S-variant implies classical when S is within the units", s.set().within_units() && with_s, classical);
    if let Some(n) = first_failure(&ctx, Property::Coidempotent, if classical { s } else { &one }) {
        p.cert(json!({"submodule": n.to_string()}));
    }
    Ok(p.finish())
}

fn t02(env: &Env, inst: &Instance) -> Result<Outcome> {
    let ctx = env.ctx_of(inst)?;
    let s = env.s(inst);
    let mut p = Parts::default();
    let f = fully(&ctx, Property::Coidempotent, s);
    let c = comult(&ctx, s);
    p.imply("fully S-coidempotent implies S-comultiplication", f, c);
    if f && !c {
        let n = ctx.properties().comultiplication.iter().position(|&i| !s.meets(i)).expect("fails somewhere");
        p.cert(json!({"submodule": ctx.sub(n as u32).to_string()}));
    }
    Ok(p.finish())
}

fn t03(env: &Env, inst: &Instance) -> Result<Outcome> {
    let ctx = env.ctx_of(inst)?;
    let s = env.s(inst);
    let props = ctx.properties();
    let a = fully(&ctx, Property::Coidempotent, s);
    let b = ctx.completely_irreducibles().iter().all(|&l| s.meets(props.coidempotent[l as usize]));
    let ns = ctx.len() as u32;
    let mut c = true;
    let mut bad = None;
    'outer: for n in 0..ns {
        for k in n..ns {
            let i = ctx.imul(ctx.ann(n), ctx.ann(k));
            if !s.meets(ctx.colon_ring(ctx.sum(n, k), ctx.torsion(i))) {
                c = false;
                bad = Some((n, k));
                break 'outer;
            }
        }
    }
    let mut p = Parts::default();
    p.equiv("fully iff completely irreducibles", a, b);
    p.equiv("fully iff pairwise sum condition", a, c);
    if let Some((n, k)) = bad {
        p.cert(json!({"pair": [ctx.sub(n).to_string(), ctx.sub(k).to_string()]}));
    }
    Ok(p.finish())
}

fn t04(env: &Env, inst: &Instance) -> Result<Outcome> {
    let ctx = env.ctx_of(inst)?;
    let s = env.s(inst);
    let f = fully(&ctx, Property::Coidempotent, s);
    let c = comult(&ctx, s);
    let mut p = Parts::default();
    for (label, strict) in [("strict", true), ("loose", false)] {
        let opts = Options { strict_ds: strict, uniform: false };
        let ci_summands = ctx
            .completely_irreducibles()
            .iter()
            .all(|&l| crate::predicates::pointwise_at(&ctx, Property::DirectSummand, l, s, opts).holds);
        let semisimple = fully_view(&ctx, Property::DirectSummand, s, opts).holds;
        if strict == env.strict_ds {
            p.imply("completely irreducibles are S-direct summands", c && ci_summands, f);
            p.imply("S-semisimple", c && semisimple, f);
        } else {
            p.parts.push(json!({
                "part": format!("{label} reading of direct summands (informational)"),
                "premise": c && ci_summands,
                "conclusion": f,
            }));
        }
    }
    if let Some(n) = first_failure(&ctx, Property::Coidempotent, s) {
        p.cert(json!({"submodule": n.to_string()}));
    }
    Ok(p.finish())
}

fn t05(env: &Env, inst: &Instance) -> Result<Outcome> {
    let ctx = env.ctx_of(inst)?;
    let menu = env.corpus.menu(inst);
    let s1 = env.s(inst);
    let f1 = fully(&ctx, Property::Coidempotent, s1);
    let mut p = Parts::default();
    for (i, c) in menu.choices.iter().enumerate() {
        if i == inst.choice || !s1.set().is_subset(&c.set) {
            continue;
        }
        let f2 = fully(&ctx, Property::Coidempotent, &c.view);
        p.imply(&format!("to {}", c.label()), f1, f2);
        if f1 && !f2 {
            p.cert(json!({"larger_set": c.label()}));
        }
    }
    if p.parts.is_empty() {
        return Ok(inapplicable("no larger set in the menu"));
    }
    Ok(p.finish())
}

fn t06(env: &Env, inst: &Instance) -> Result<Outcome> {
    let ctx = env.ctx_of(inst)?;
    let s = env.s(inst);
    let sat = s.set().saturation();
    let sv = view_of(&ctx, &sat)?;
    let mut p = Parts::default();
    p.equiv("S versus its saturation", fully(&ctx, Property::Coidempotent, s), fully(&ctx, Property::Coidempotent, &sv));
    p.witness = Some(json!({"saturation": sat.to_string()}));
    p.cert(json!({"saturation": sat.to_string()}));
    Ok(p.finish())
}

fn t07(env: &Env, inst: &Instance) -> Result<Outcome> {
    let ctx = env.ctx_of(inst)?;
    let s = env.s(inst);
    let f = fully(&ctx, Property::Coidempotent, s);
    let mut p = Parts::default();
    if !f {
        p.imply("all quotients", false, true);
        return Ok(p.finish());
    }
    let mut all = true;
    for n in 0..ctx.len() as u32 {
        let q = env.bench.context(&ctx.quotient_module(n))?;
        if !fully(&q, Property::Coidempotent, s) {
            all = false;
            p.cert(json!({"kernel": ctx.sub(n).to_string(), "quotient": q.module().to_string()}));
            break;
        }
    }
    p.imply("all quotients", f, all);
    Ok(p.finish())
}

fn t08(env: &Env, inst: &Instance) -> Result<Outcome> {
    let ctx = env.ctx_of(inst)?;
    let s = env.s(inst);
    if s.set().len() != 1 {
        return Ok(inapplicable("statement does not involve S; evaluated on S = {1} only"));
    }
    let m = ctx.module();
    let ring = m.ring();
    let fully_for = |set: &MultSet| -> Result<bool> { Ok(fully(&ctx, Property::Coidempotent, &view_of(&ctx, set)?)) };
    let a = fully(&ctx, Property::Coidempotent, s);
    let mut b = true;
    for p in prime_ideals(ring)? {
        b &= fully_for(&MultSet::complement_of_prime(ring, &p)?)?;
    }
    let mut c = true;
    let mut d = true;
    let mut supported = Vec::new();
    for mx in maximal_ideals(ring)? {
        let set = MultSet::complement_of_prime(ring, &mx)?;
        let holds = fully_for(&set)?;
        c &= holds;
        if s_torsion(m, &set)? != Submodule::whole(m) {
            supported.push(mx.to_string());
            d &= holds;
        }
    }
    let mut p = Parts::default();
    p.equiv("primes", a, b);
    p.equiv("maximal ideals", a, c);
    p.equiv("maximal ideals in the support", a, d);
    p.witness = Some(json!({"support": supported}));
    p.cert(json!({"support": supported}));
    Ok(p.finish())
}

fn t09(env: &Env, inst: &Instance) -> Result<Outcome> {
    let ctx = env.ctx_of(inst)?;
    let s = env.s(inst);
    let f = fully(&ctx, Property::Coidempotent, s);
    let mut p = Parts::default();
    p.note = Some("monomorphisms instantiated as submodule inclusions only".into());
    let mut sub_ok = true;
    let mut lift_premise = false;
    let mut lift_cert = None;
    for n in 0..ctx.len() as u32 {
        let sub = env.bench.context(&ctx.submodule_module(n))?;
        let fn_ = fully(&sub, Property::Coidempotent, s);
        if f && !fn_ && sub_ok {
            sub_ok = false;
            p.cert(json!({"submodule": ctx.sub(n).to_string()}));
        }
        // tM inside N for some t in S
        if fn_ && s.meets(ctx.whole_colon(n)) {
            lift_premise = true;
            if !f && lift_cert.is_none() {
                lift_cert = Some(json!({"submodule": ctx.sub(n).to_string()}));
            }
        }
    }
    p.imply("submodules of a fully S-coidempotent module", f, sub_ok);
    p.imply("inclusion with tM inside N", lift_premise, f);
    if let Some(c) = lift_cert {
        p.cert(c);
    }
    Ok(p.finish())
}

fn t10(env: &Env, inst: &Instance) -> Result<Outcome> {
    if inst.factors.is_empty() {
        return Ok(inapplicable("not a product module with S = S1 x S2"));
    }
    let ctx = env.ctx_of(inst)?;
    let whole = fully(&ctx, Property::Coidempotent, env.s(inst));
    let mut each = true;
    let mut per = Vec::new();
    for (m, set) in &inst.factors {
        let c = env.bench.context(m)?;
        let h = fully(&c, Property::Coidempotent, &view_of(&c, set)?);
        per.push(json!({"factor": m.to_string(), "set": set.to_string(), "fully": h}));
        each &= h;
    }
    let mut p = Parts::default();
    p.equiv("product versus factors", whole, each);
    p.cert(json!({"factors": per}));
    Ok(p.finish())
}

fn t11(env: &Env, inst: &Instance) -> Result<Outcome> {
    let ctx = env.ctx_of(inst)?;
    let s = env.s(inst);
    let m = ctx.module();
    let loc = localize_module(m, s.set())?;
    let mut p = Parts::default();
    let Some(lm) = loc.module.clone() else {
        p.equiv("localization is the zero module over the zero ring", true, true);
        p.note = Some("0 lies in S".into());
        return Ok(p.finish());
    };
    let zero = Submodule::zero(&lm);
    let mut torsion_ok = true;
    for i in ctx.ideals() {
        let left = loc.image(&colon_into(&Submodule::zero(m), i)?).expect("nonzero ring");
        let right = colon_into(&zero, &loc.image_ideal(i).expect("nonzero ring"))?;
        if left != right {
            torsion_ok = false;
            p.cert(json!({"ideal": i.to_string(), "image": left.to_string(), "torsion": right.to_string()}));
            break;
        }
    }
    let mut ann_ok = true;
    for n in ctx.lattice().all() {
        let left = loc.image_ideal(&annihilator(n)).expect("nonzero ring");
        let right = annihilator(&loc.image(n).expect("nonzero ring"));
        if left != right {
            ann_ok = false;
            p.cert(json!({"submodule": n.to_string(), "image": left.to_string(), "annihilator": right.to_string()}));
            break;
        }
    }
    p.equiv("torsion submodules", true, torsion_ok);
    p.equiv("annihilators", true, ann_ok);
    Ok(p.finish())
}

/// Whether `S⁻¹M` is fully coidempotent, with its description.
fn localized_fully(env: &Env, ctx: &ModuleContext, s: &SView) -> Result<(bool, String)> {
    let loc = localize_module(ctx.module(), s.set())?;
    match &loc.module {
        None => Ok((true, "0".into())),
        Some(lm) => {
            let lc = env.bench.context(lm)?;
            Ok((fully(&lc, Property::Coidempotent, &one_view(&lc)?), lm.to_string()))
        }
    }
}

fn t12(env: &Env, inst: &Instance) -> Result<Outcome> {
    let ctx = env.ctx_of(inst)?;
    let s = env.s(inst);
    let f = fully(&ctx, Property::Coidempotent, s);
    let (lf, desc) = localized_fully(env, &ctx, s)?;
    let mut p = Parts::default();
    p.equiv("module versus localization", f, lf);
    p.witness = Some(json!({"localization": desc}));
    p.cert(json!({"localization": desc}));
    Ok(p.finish())
}

fn t13(env: &Env, inst: &Instance) -> Result<Outcome> {
    let ctx = env.ctx_of(inst)?;
    let s = env.s(inst);
    let f = fully(&ctx, Property::Coidempotent, s);
    let (lf, desc) = localized_fully(env, &ctx, s)?;
    let mut p = Parts::default();
    p.imply("localization of a fully S-coidempotent module", f, lf);
    p.cert(json!({"localization": desc}));
    Ok(p.finish())
}

fn t14(env: &Env, inst: &Instance) -> Result<Outcome> {
    let ctx = env.ctx_of(inst)?;
    let s = env.s(inst);
    if !comult(&ctx, s) {
        return Ok(inapplicable("not an S-comultiplication module"));
    }
    let props = ctx.properties();
    let ns = ctx.len() as u32;
    let mut p = Parts::default();
    let (mut ab, mut ac, mut ad) = (true, true, true);
    for n in 0..ns {
        let a = s.meets(props.copure[n as usize]);
        let q = env.bench.context(&ctx.quotient_module(n))?;
        let qc = comult(&q, s);
        let b = qc && s.meets(props.coidempotent[n as usize]);
        let mut ci = ctx.whole_ideal();
        let mut di = ctx.whole_ideal();
        for k in 0..ns {
            let left = ctx.colon_into(n, ctx.ann(k));
            if ctx.subset(n, k) {
                ci = ctx.imeet(ci, ctx.colon_ring(k, left));
            }
            let right = ctx.colon_into(n, ctx.colon_ring(n, k));
            di = ctx.imeet(di, ctx.colon_ring(right, left));
        }
        let c = qc && s.meets(ci);
        let d = qc && s.meets(di);
        if (a != b || a != c || a != d) && ab && ac && ad {
            p.cert(json!({"submodule": ctx.sub(n).to_string(), "a": a, "b": b, "c": c, "d": d}));
        }
        ab &= a == b;
        ac &= a == c;
        ad &= a == d;
    }
    p.equiv("copure iff quotient condition with S-coidempotent", true, ab);
    p.equiv("copure iff quotient condition over larger submodules", true, ac);
    p.equiv("copure iff quotient condition over all submodules", true, ad);
    Ok(p.finish())
}

fn t15(env: &Env, inst: &Instance) -> Result<Outcome> {
    let ctx = env.ctx_of(inst)?;
    let s = env.s(inst);
    let f = fully(&ctx, Property::Coidempotent, s);
    let fc = fully(&ctx, Property::Copure, s);
    let c = comult(&ctx, s);
    let mut p = Parts::default();
    p.imply("fully S-coidempotent implies fully S-copure", f, fc);
    p.imply("S-comultiplication and fully S-copure", c && fc, f);
    if let Some(n) = first_failure(&ctx, if f { Property::Copure } else { Property::Coidempotent }, s) {
        p.cert(json!({"submodule": n.to_string()}));
    }
    Ok(p.finish())
}

/// Largest family size tried for a lattice with `ns` members.
pub fn family_bound(ns: usize) -> usize {
    if ns <= 100 {
        3
    } else {
        2
    }
}

fn t16(env: &Env, inst: &Instance) -> Result<Outcome> {
    let ctx = env.ctx_of(inst)?;
    let s = env.s(inst);
    let mut p = Parts::default();
    if !fully(&ctx, Property::Coidempotent, s) {
        p.imply("family condition", false, true);
        return Ok(p.finish());
    }
    let ns = ctx.len() as u32;
    let bound = family_bound(ns as usize);
    p.note = Some(format!("families of size at most {bound} and the whole lattice"));
    let mut ok = true;
    let holds = |family: &[u32], k: u32| -> bool {
        let mut meet_n = ctx.top();
        let mut meet_sum = ctx.top();
        for &x in family {
            meet_n = ctx.meet(meet_n, x);
            meet_sum = ctx.meet(meet_sum, ctx.sum(x, k));
        }
        s.meets(ctx.colon_ring(ctx.sum(meet_n, k), meet_sum))
    };
    let all: Vec<u32> = (0..ns).collect();
    'k: for k in 0..ns {
        if !holds(&all, k) {
            ok = false;
            p.cert(json!({"k": ctx.sub(k).to_string(), "family": "whole lattice"}));
            break;
        }
        for a in 0..ns {
            for b in (a + 1)..ns {
                if !holds(&[a, b], k) {
                    ok = false;
                    p.cert(json!({"k": ctx.sub(k).to_string(), "family": [ctx.sub(a).to_string(), ctx.sub(b).to_string()]}));
                    break 'k;
                }
                if bound >= 3 {
                    for c in (b + 1)..ns {
                        if !holds(&[a, b, c], k) {
                            ok = false;
                            p.cert(json!({"k": ctx.sub(k).to_string(), "family": [
                                ctx.sub(a).to_string(), ctx.sub(b).to_string(), ctx.sub(c).to_string()
                            ]}));
                            break 'k;
                        }
                    }
                }
            }
        }
    }
    p.imply("family condition", true, ok);
    p.witness = Some(json!({"family_bound": bound}));
    Ok(p.finish())
}

fn t17(env: &Env, inst: &Instance) -> Result<Outcome> {
    let ctx = env.ctx_of(inst)?;
    let s = env.s(inst);
    if !comult(&ctx, s) {
        return Ok(inapplicable("not an S-comultiplication module"));
    }
    let props = ctx.properties();
    let mut p = Parts::default();
    let mut premise = false;
    let mut ok = true;
    for n in 0..ctx.len() {
        let pure = s.meets(props.pure[n]);
        premise |= pure;
        if pure && !s.meets(props.coidempotent[n]) && ok {
            ok = false;
            p.cert(json!({"submodule": ctx.sub(n as u32).to_string()}));
        }
    }
    p.imply("S-pure submodules are S-coidempotent", premise, ok);
    Ok(p.finish())
}

fn t18(env: &Env, inst: &Instance) -> Result<Outcome> {
    let ctx = env.ctx_of(inst)?;
    let s = env.s(inst);
    let c = comult(&ctx, s);
    let m = mult(&ctx, s);
    let fp = fully(&ctx, Property::Pure, s);
    let fc = fully(&ctx, Property::Copure, s);
    let fco = fully(&ctx, Property::Coidempotent, s);
    let fi = fully(&ctx, Property::Idempotent, s);
    let mut p = Parts::default();
    p.imply("multiplication and fully copure give fully pure", m && fc, fp);
    p.imply("comultiplication and fully pure give fully copure", c && fp, fc);
    p.imply("multiplication and fully coidempotent give fully idempotent", m && fco, fi);
    p.imply("comultiplication and fully idempotent give fully coidempotent", c && fi, fco);
    p.cert(json!({"multiplication": m, "comultiplication": c, "pure": fp, "copure": fc, "coidempotent": fco, "idempotent": fi}));
    Ok(p.finish())
}

fn t19(env: &Env, inst: &Instance) -> Result<Outcome> {
    let ctx = env.ctx_of(inst)?;
    let s = env.s(inst);
    if !comult(&ctx, s) {
        return Ok(inapplicable("not an S-comultiplication module"));
    }
    let ni = ctx.n_ideals() as u32;
    let top = ctx.top();
    let mut p = Parts::default();
    let mut pairs = 0u64;
    let mut ok = true;
    for i in 0..ni {
        for j in 0..ni {
            if !ctx.subset(ctx.torsion(i), ctx.torsion(j)) {
                continue;
            }
            pairs += 1;
            if !s.meets(ctx.colon_ring(ctx.action(i, top), ctx.action(j, top))) && ok {
                ok = false;
                p.cert(json!({"i": ctx.ideal(i).to_string(), "j": ctx.ideal(j).to_string()}));
            }
        }
    }
    p.imply("ideal pairs with nested torsion", pairs > 0, ok);
    p.witness = Some(json!({"pairs": pairs}));
    Ok(p.finish())
}

fn t20(env: &Env, inst: &Instance) -> Result<Outcome> {
    let ctx = env.ctx_of(inst)?;
    let s = env.s(inst);
    let fco = fully(&ctx, Property::Coidempotent, s);
    let fi = fully(&ctx, Property::Idempotent, s);
    let mut p = Parts::default();
    p.imply("S-finite and fully S-coidempotent give fully S-idempotent", fco, fi);
    p.imply("S-Noetherian and fully S-idempotent give fully S-coidempotent", fi, fco);
    if let Some(n) = first_failure(&ctx, if fco { Property::Idempotent } else { Property::Coidempotent }, s) {
        p.cert(json!({"submodule": n.to_string()}));
    }
    Ok(p.finish())
}
