//! Decision procedures for submodule and module properties relative to a
//! multiplicative set `S`, each returning a re-checkable [`Verdict`].
//!
//! Every "there is some `s ∈ S`" condition is an inclusion `sA ⊆ B` between
//! submodules, which holds iff `s ∈ (B :_R A)`. So each pointwise property is
//! "S meets one ideal", computed once per module in
//! [`PropertyIdeals`](crate::context::PropertyIdeals). The classical notion
//! is the case `S = {1}`: `S` meets an ideal iff the ideal is the whole ring.
//!
//! For pure and copure the quantifier order is "some `s` for every `I`", so
//! the ideals for all `I` are intersected before meeting `S`.
//!
//! Comultiplication asks for some ideal `I` with `s(0 :_M I) ⊆ N ⊆ (0 :_M I)`.
//! Taking `I = Ann(N)` loses nothing: `N ⊆ (0 :_M I)` forces `I ⊆ Ann(N)`,
//! hence `(0 :_M Ann N) ⊆ (0 :_M I)`. Dually multiplication may take
//! `I = (N :_R M)`, since `IM ⊆ N` forces `I ⊆ (N :_R M)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::arith;
use crate::context::{ModuleContext, SView};
use crate::error::{Error, Result};
use crate::module::{
    annihilator, colon_into, colon_ring, ideal_action, scalar_submodule, sub_intersect, sub_sum, FinModule,
    Submodule,
};
use crate::multset::{MultSet, ZMultSet};
use crate::ring::{ideal_product, Ideal, RingElement};
use crate::zmodule::{self, ZSubmodule};

/// A property of a single submodule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    Coidempotent,
    Idempotent,
    Pure,
    Copure,
    DirectSummand,
    SFinite,
}

impl Property {
    pub const ALL: [Property; 6] = [
        Property::Coidempotent,
        Property::Idempotent,
        Property::Pure,
        Property::Copure,
        Property::DirectSummand,
        Property::SFinite,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Coidempotent => "coidempotent",
            Property::Idempotent => "idempotent",
            Property::Pure => "pure",
            Property::Copure => "copure",
            Property::DirectSummand => "direct-summand",
            Property::SFinite => "s-finite",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// What a query asks about: one submodule, or the module as a whole.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Query {
    Pointwise(Property),
    Fully(Property),
    Comultiplication,
    Multiplication,
    Semisimple,
    Noetherian,
}

/// A parsed property name: the query and whether `S` is forced to `{1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PropertyName {
    pub query: Query,
    pub classical: bool,
}

/// Every accepted property name.
pub const PROPERTY_NAMES: &[&str] = &[
    "coidempotent",
    "s-coidempotent",
    "idempotent",
    "s-idempotent",
    "pure",
    "s-pure",
    "copure",
    "s-copure",
    "direct-summand",
    "s-direct-summand",
    "s-finite",
    "comultiplication",
    "s-comultiplication",
    "multiplication",
    "s-multiplication",
    "semisimple",
    "s-semisimple",
    "s-noetherian",
    "fully-coidempotent",
    "fully-s-coidempotent",
    "fully-idempotent",
    "fully-s-idempotent",
    "fully-pure",
    "fully-s-pure",
    "fully-copure",
    "fully-s-copure",
];

impl PropertyName {
    pub fn needs_submodule(&self) -> bool {
        matches!(self.query, Query::Pointwise(_))
    }
}

impl FromStr for PropertyName {
    type Err = Error;

    fn from_str(s: &str) -> Result<PropertyName> {
        let name = s.trim().to_ascii_lowercase();
        if !PROPERTY_NAMES.contains(&name.as_str()) {
            return Err(Error::Parse(format!("unknown property '{s}'")));
        }
        let (fully, rest) = match name.strip_prefix("fully-") {
            Some(r) => (true, r),
            None => (false, name.as_str()),
        };
        let (classical, base) = match rest.strip_prefix("s-") {
            Some(r) => (false, r),
            None => (true, rest),
        };
        let prop = |b: &str| -> Option<Property> {
            Some(match b {
                "coidempotent" => Property::Coidempotent,
                "idempotent" => Property::Idempotent,
                "pure" => Property::Pure,
                "copure" => Property::Copure,
                "direct-summand" => Property::DirectSummand,
                "finite" => Property::SFinite,
                _ => return None,
            })
        };
        let query = match (fully, base) {
            (true, b) => Query::Fully(prop(b).expect("listed")),
            (false, "comultiplication") => Query::Comultiplication,
            (false, "multiplication") => Query::Multiplication,
            (false, "semisimple") => Query::Semisimple,
            (false, "noetherian") => Query::Noetherian,
            (false, b) => Query::Pointwise(prop(b).expect("listed")),
        };
        Ok(PropertyName { query, classical })
    }
}

/// Data that re-validates a positive verdict.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Witness {
    pub s: Option<RingElement>,
    pub complement: Option<Submodule>,
    pub ideal: Option<Ideal>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
    pub counterexample: Option<Submodule>,
}

impl Verdict {
    fn yes(w: Witness) -> Verdict {
        Verdict { holds: true, witness: Some(w), counterexample: None }
    }

    fn no() -> Verdict {
        Verdict { holds: false, witness: None, counterexample: None }
    }

    fn fails_at(n: Submodule) -> Verdict {
        Verdict { holds: false, witness: None, counterexample: Some(n) }
    }

    fn holds_everywhere() -> Verdict {
        Verdict { holds: true, witness: None, counterexample: None }
    }

    pub fn to_json(&self) -> Value {
        let w = self.witness.as_ref().map(|w| {
            json!({
                "s": w.s.as_ref().map(|x| x.to_string()),
                "complement": w.complement.as_ref().map(|k| k.to_string()),
                "ideal": w.ideal.as_ref().map(|i| i.to_string()),
            })
        });
        json!({
            "holds": self.holds,
            "witness": w,
            "counterexample": self.counterexample.as_ref().map(|n| n.to_string()),
        })
    }
}

/// Flags that select between readings of the definitions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    /// Require `N ∩ K = 0` in addition to `sM = N + K`.
    pub strict_ds: bool,
    /// Require one `s` for all submodules in "fully" queries.
    pub uniform: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { strict_ds: true, uniform: false }
    }
}

fn s_only(s: &RingElement) -> Witness {
    Witness { s: Some(s.clone()), ..Witness::default() }
}

/// The witness ideal of a colon-based property at lattice position `n`.
pub fn property_ideal(ctx: &ModuleContext, prop: Property, n: u32) -> Option<u32> {
    let p = ctx.properties();
    let v = match prop {
        Property::Coidempotent => &p.coidempotent,
        Property::Idempotent => &p.idempotent,
        Property::Pure => &p.pure,
        Property::Copure => &p.copure,
        Property::DirectSummand | Property::SFinite => return None,
    };
    Some(v[n as usize])
}

/// Least `s ∈ S` and least `K` with `sM = N + K` (and `N ∩ K = 0` if strict).
pub fn summand_witness(ctx: &ModuleContext, n: u32, s: &SView, strict: bool) -> Option<(RingElement, u32)> {
    let t = ctx.summands();
    let table = if strict { &t.strict } else { &t.loose };
    for x in s.set().elements() {
        let j = ctx.principal(x).expect("same ring");
        if let Some(k) = table[n as usize][j as usize] {
            return Some((x.clone(), k));
        }
    }
    None
}

/// Pointwise verdict at lattice position `n`.
pub fn pointwise_at(ctx: &ModuleContext, prop: Property, n: u32, s: &SView, opts: Options) -> Verdict {
    match prop {
        Property::DirectSummand => match summand_witness(ctx, n, s, opts.strict_ds) {
            Some((x, k)) => Verdict::yes(Witness { s: Some(x), complement: Some(ctx.sub(k).clone()), ideal: None }),
            None => Verdict::no(),
        },
        Property::SFinite => {
            let one = ctx.module().ring().one();
            let w = Witness { s: Some(one), complement: Some(ctx.sub(n).clone()), ideal: None };
            if s.set().contains(&ctx.module().ring().one()) {
                Verdict::yes(w)
            } else {
                Verdict::no()
            }
        }
        _ => {
            let i = property_ideal(ctx, prop, n).expect("colon property");
            match s.witness(i) {
                Some(x) => Verdict::yes(s_only(x)),
                None => Verdict::no(),
            }
        }
    }
}

pub fn pointwise(ctx: &ModuleContext, prop: Property, n: &Submodule, s: &MultSet, opts: Options) -> Result<Verdict> {
    let idx = ctx.index(n)?;
    Ok(pointwise_at(ctx, prop, idx, &ctx.view(s)?, opts))
}

pub fn coidempotent(ctx: &ModuleContext, n: &Submodule, s: &MultSet) -> Result<Verdict> {
    pointwise(ctx, Property::Coidempotent, n, s, Options::default())
}

pub fn idempotent(ctx: &ModuleContext, n: &Submodule, s: &MultSet) -> Result<Verdict> {
    pointwise(ctx, Property::Idempotent, n, s, Options::default())
}

pub fn pure(ctx: &ModuleContext, n: &Submodule, s: &MultSet) -> Result<Verdict> {
    pointwise(ctx, Property::Pure, n, s, Options::default())
}

pub fn copure(ctx: &ModuleContext, n: &Submodule, s: &MultSet) -> Result<Verdict> {
    pointwise(ctx, Property::Copure, n, s, Options::default())
}

pub fn direct_summand(ctx: &ModuleContext, n: &Submodule, s: &MultSet, strict: bool) -> Result<Verdict> {
    pointwise(ctx, Property::DirectSummand, n, s, Options { strict_ds: strict, uniform: false })
}

/// Always true here: every submodule of a finite module is finitely
/// generated, so `K = N` and `s = 1` work.
pub fn s_finite(ctx: &ModuleContext, n: &Submodule, s: &MultSet) -> Result<Verdict> {
    pointwise(ctx, Property::SFinite, n, s, Options::default())
}

fn module_level(ctx: &ModuleContext, ideals: &[u32], s: &SView) -> Verdict {
    match ideals.iter().position(|&i| !s.meets(i)) {
        Some(n) => Verdict::fails_at(ctx.sub(n as u32).clone()),
        None => Verdict::holds_everywhere(),
    }
}

/// Every `N` has `s(0 :_M Ann N) ⊆ N` for some `s ∈ S`.
pub fn comultiplication_view(ctx: &ModuleContext, s: &SView) -> Verdict {
    module_level(ctx, &ctx.properties().comultiplication, s)
}

/// Every `N` has `sN ⊆ (N :_R M)M` for some `s ∈ S`.
pub fn multiplication_view(ctx: &ModuleContext, s: &SView) -> Verdict {
    module_level(ctx, &ctx.properties().multiplication, s)
}

pub fn comultiplication(ctx: &ModuleContext, s: &MultSet) -> Result<Verdict> {
    Ok(comultiplication_view(ctx, &ctx.view(s)?))
}

pub fn multiplication(ctx: &ModuleContext, s: &MultSet) -> Result<Verdict> {
    Ok(multiplication_view(ctx, &ctx.view(s)?))
}

/// Comultiplication witness at one submodule: `s` and `I = Ann(N)`.
pub fn comultiplication_at(ctx: &ModuleContext, n: u32, s: &SView) -> Verdict {
    match s.witness(ctx.properties().comultiplication[n as usize]) {
        Some(x) => Verdict::yes(Witness { s: Some(x.clone()), complement: None, ideal: Some(ctx.ideal(ctx.ann(n)).clone()) }),
        None => Verdict::no(),
    }
}

/// Multiplication witness at one submodule: `s` and `I = (N :_R M)`.
pub fn multiplication_at(ctx: &ModuleContext, n: u32, s: &SView) -> Verdict {
    match s.witness(ctx.properties().multiplication[n as usize]) {
        Some(x) => Verdict::yes(Witness {
            s: Some(x.clone()),
            complement: None,
            ideal: Some(ctx.ideal(ctx.whole_colon(n)).clone()),
        }),
        None => Verdict::no(),
    }
}

pub fn semisimple(ctx: &ModuleContext, s: &MultSet, strict: bool) -> Result<Verdict> {
    fully(ctx, Property::DirectSummand, s, Options { strict_ds: strict, uniform: false })
}

pub fn s_noetherian(ctx: &ModuleContext, s: &MultSet) -> Result<Verdict> {
    fully(ctx, Property::SFinite, s, Options::default())
}

/// Every submodule has `prop`. The first failing submodule in lattice order
/// is the counterexample. In uniform mode a single `s` must serve all
/// submodules; the counterexample is then the first submodule at which no
/// common `s` remains.
pub fn fully_view(ctx: &ModuleContext, prop: Property, s: &SView, opts: Options) -> Verdict {
    let ns = ctx.len() as u32;
    match property_ideal(ctx, prop, 0) {
        Some(_) if opts.uniform => {
            let mut acc = ctx.whole_ideal();
            for n in 0..ns {
                acc = ctx.imeet(acc, property_ideal(ctx, prop, n).expect("colon property"));
                if !s.meets(acc) {
                    return Verdict::fails_at(ctx.sub(n).clone());
                }
            }
            Verdict::yes(s_only(s.witness(acc).expect("checked")))
        }
        Some(_) => {
            for n in 0..ns {
                if !s.meets(property_ideal(ctx, prop, n).expect("colon property")) {
                    return Verdict::fails_at(ctx.sub(n).clone());
                }
            }
            Verdict::holds_everywhere()
        }
        None => {
            let mut common: Option<RingElement> = None;
            for n in 0..ns {
                let v = pointwise_at(ctx, prop, n, s, opts);
                if !v.holds {
                    return Verdict::fails_at(ctx.sub(n).clone());
                }
                if opts.uniform {
                    let x = v.witness.and_then(|w| w.s).expect("positive verdicts carry s");
                    match &common {
                        None => common = Some(x),
                        Some(c) if *c == x => {}
                        Some(_) => return uniform_summand(ctx, prop, s, opts),
                    }
                }
            }
            match common {
                Some(c) => Verdict::yes(s_only(&c)),
                None => Verdict::holds_everywhere(),
            }
        }
    }
}

/// One `s` making every submodule a summand, scanning `S` in order.
fn uniform_summand(ctx: &ModuleContext, prop: Property, s: &SView, opts: Options) -> Verdict {
    let ns = ctx.len() as u32;
    let t = ctx.summands();
    let table = if opts.strict_ds { &t.strict } else { &t.loose };
    debug_assert_eq!(prop, Property::DirectSummand);
    for x in s.set().elements() {
        let j = ctx.principal(x).expect("same ring") as usize;
        if (0..ns).all(|n| table[n as usize][j].is_some()) {
            return Verdict::yes(s_only(x));
        }
    }
    Verdict::no()
}

pub fn fully(ctx: &ModuleContext, prop: Property, s: &MultSet, opts: Options) -> Result<Verdict> {
    Ok(fully_view(ctx, prop, &ctx.view(s)?, opts))
}

/// Answer any query through one entry point.
pub fn decide(ctx: &ModuleContext, query: Query, n: Option<&Submodule>, s: &MultSet, opts: Options) -> Result<Verdict> {
    let view = ctx.view(s)?;
    Ok(match query {
        Query::Pointwise(p) => {
            let n = n.ok_or_else(|| Error::Parse("this property needs a submodule".into()))?;
            pointwise_at(ctx, p, ctx.index(n)?, &view, opts)
        }
        Query::Fully(p) => fully_view(ctx, p, &view, opts),
        Query::Comultiplication => comultiplication_view(ctx, &view),
        Query::Multiplication => multiplication_view(ctx, &view),
        Query::Semisimple => fully_view(ctx, Property::DirectSummand, &view, opts),
        Query::Noetherian => fully_view(ctx, Property::SFinite, &view, opts),
    })
}

/// The image of a `Z`-side set in the finite ring a `Z`-declared module was
/// re-based to.
pub fn reduce_for(m: &FinModule, s: &ZMultSet) -> Result<MultSet> {
    let e = m
        .integer_base()
        .ok_or_else(|| Error::Unsupported(format!("{m} was not declared over Z")))?;
    s.reduce(e)
}

/// Re-check a positive pointwise verdict from the defining inclusion,
/// without the colon-ideal reformulation.
pub fn recheck(prop: Property, n: &Submodule, w: &Witness, strict_ds: bool) -> Result<bool> {
    let m = n.parent();
    let ring = m.ring();
    let top = Submodule::whole(m);
    let zero = Submodule::zero(m);
    let s = w.s.as_ref().ok_or_else(|| Error::CrossCheck("witness without s".into()))?;
    Ok(match prop {
        Property::Coidempotent => {
            let ann = annihilator(n);
            let big = colon_into(&zero, &ideal_product(&ann, &ann)?)?;
            scalar_submodule(s, &big)?.is_subset(n)
        }
        Property::Idempotent => {
            let c = colon_ring(n, &top)?;
            let inner = ideal_action(&ideal_product(&c, &c)?, &top)?;
            scalar_submodule(s, n)?.is_subset(&inner) && inner.is_subset(n)
        }
        Property::Pure => {
            let mut ok = true;
            for i in crate::ring::all_ideals(ring)? {
                let left = sub_intersect(n, &ideal_action(&i, &top)?)?;
                ok &= scalar_submodule(s, &left)?.is_subset(&ideal_action(&i, n)?);
            }
            ok
        }
        Property::Copure => {
            let mut ok = true;
            for i in crate::ring::all_ideals(ring)? {
                let left = colon_into(n, &i)?;
                let right = sub_sum(n, &colon_into(&zero, &i)?)?;
                ok &= scalar_submodule(s, &left)?.is_subset(&right);
            }
            ok
        }
        Property::DirectSummand => {
            let k = w.complement.as_ref().ok_or_else(|| Error::CrossCheck("summand without K".into()))?;
            let sm = scalar_submodule(s, &top)?;
            sub_sum(n, k)? == sm && (!strict_ds || sub_intersect(n, k)?.is_zero())
        }
        Property::SFinite => {
            let k = w.complement.as_ref().ok_or_else(|| Error::CrossCheck("finite without K".into()))?;
            scalar_submodule(s, n)?.is_subset(k) && k.is_subset(n)
        }
    })
}

/// Re-check a comultiplication or multiplication witness at `n`.
pub fn recheck_module_witness(query: Query, n: &Submodule, w: &Witness) -> Result<bool> {
    let m = n.parent();
    let top = Submodule::whole(m);
    let zero = Submodule::zero(m);
    let s = w.s.as_ref().ok_or_else(|| Error::CrossCheck("witness without s".into()))?;
    let i = w.ideal.as_ref().ok_or_else(|| Error::CrossCheck("witness without I".into()))?;
    Ok(match query {
        Query::Comultiplication => {
            let t = colon_into(&zero, i)?;
            n.is_subset(&t) && scalar_submodule(s, &t)?.is_subset(n)
        }
        Query::Multiplication => {
            let im = ideal_action(i, &top)?;
            im.is_subset(n) && scalar_submodule(s, n)?.is_subset(&im)
        }
        _ => return Err(Error::Unsupported("not a module-level witness".into())),
    })
}

/// Verdict for the rank-one module `Z` over `Z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZVerdict {
    pub holds: bool,
    pub witness: Option<BigInt>,
    pub counterexample: Option<ZSubmodule>,
}

impl ZVerdict {
    pub fn to_json(&self) -> Value {
        json!({
            "holds": self.holds,
            "witness": self.witness.as_ref().map(|s| json!({"s": s.to_string(), "complement": null, "ideal": null})),
            "counterexample": self.counterexample.as_ref().map(|n| n.to_string()),
        })
    }
}

/// `tZ` is S-coidempotent iff `S` meets `(tZ :_Z (0 :_Z Ann²(tZ)))`.
pub fn coidempotent_z(n: &ZSubmodule, s: &ZMultSet) -> ZVerdict {
    let ideal = zmodule::coidempotent_ideal(n);
    let c = ideal.integer_generator().expect("ideal of Z");
    let w = s.meets_ideal(c);
    ZVerdict { holds: w.is_some(), witness: w, counterexample: None }
}

/// `Z` is fully S-coidempotent iff `S` meets `tZ` for every `t > 0`.
pub fn fully_coidempotent_z(s: &ZMultSet) -> ZVerdict {
    let fail = |t: BigUint| ZVerdict { holds: false, witness: None, counterexample: Some(ZSubmodule::new(t)) };
    let everywhere = ZVerdict { holds: true, witness: None, counterexample: None };
    match s {
        ZMultSet::NonZero => everywhere,
        ZMultSet::Units => fail(BigUint::from(2u32)),
        ZMultSet::ComplementOfPrimes(ps) => fail(BigUint::from(ps[0])),
        ZMultSet::GeneratedBy(gs) | ZMultSet::SaturatedGeneratedBy(gs) => {
            if gs.iter().any(|g| g.is_zero()) {
                return ZVerdict { holds: true, witness: Some(BigInt::zero()), counterexample: None };
            }
            let mut support: Vec<BigUint> = Vec::new();
            for g in gs.iter().filter(|g| g.magnitude() > &BigUint::one()) {
                support.extend(arith::big_prime_support(g.magnitude()));
            }
            let p = (2u64..).find(|&p| arith::is_prime(p) && !support.contains(&BigUint::from(p))).expect("primes are infinite");
            fail(BigUint::from(p))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::Workbench;
    use crate::module::{module_from_factors, submodule_from_generators};
    use crate::ring::Ring;
    use std::sync::Arc;

    fn setup(n: u64, fs: &[u64]) -> (Arc<ModuleContext>, Ring) {
        let ring = Ring::modular(n).unwrap();
        let m = module_from_factors(&ring, fs).unwrap();
        (Workbench::new().context(&m).unwrap(), ring)
    }

    fn sub(ctx: &ModuleContext, gens: &[&[u64]]) -> Submodule {
        let m = ctx.module();
        let g: Vec<_> = gens.iter().map(|x| m.element(x).unwrap()).collect();
        submodule_from_generators(m, &g).unwrap()
    }

    fn set(ring: &Ring, xs: &[i64]) -> MultSet {
        let els: Vec<_> = xs.iter().map(|&x| ring.element(x)).collect();
        MultSet::closure(ring, &els).unwrap()
    }

    #[test]
    fn names_parse() {
        let p: PropertyName = "fully-s-coidempotent".parse().unwrap();
        assert_eq!(p, PropertyName { query: Query::Fully(Property::Coidempotent), classical: false });
        let p: PropertyName = "coidempotent".parse().unwrap();
        assert!(p.classical);
        let p: PropertyName = "s-noetherian".parse().unwrap();
        assert_eq!(p.query, Query::Noetherian);
        assert!("coidempotnet".parse::<PropertyName>().is_err());
        for name in PROPERTY_NAMES {
            name.parse::<PropertyName>().unwrap();
        }
    }

    #[test]
    fn pointwise_examples() {
        let (ctx, r) = setup(4, &[4]);
        let two = sub(&ctx, &[&[2]]);
        assert!(!coidempotent(&ctx, &two, &set(&r, &[3])).unwrap().holds);
        assert!(!idempotent(&ctx, &two, &set(&r, &[])).unwrap().holds);
        assert!(!pure(&ctx, &two, &set(&r, &[])).unwrap().holds);
        assert!(!direct_summand(&ctx, &two, &set(&r, &[3]), true).unwrap().holds);
        let whole = Submodule::whole(ctx.module());
        let v = coidempotent(&ctx, &whole, &set(&r, &[])).unwrap();
        assert_eq!(v.witness.unwrap().s, Some(r.one()));
        assert!(comultiplication(&ctx, &set(&r, &[3])).unwrap().holds);

        let (ctx, r) = setup(6, &[6]);
        let two = sub(&ctx, &[&[2]]);
        assert!(coidempotent(&ctx, &two, &set(&r, &[])).unwrap().holds);
        assert!(idempotent(&ctx, &two, &set(&r, &[])).unwrap().holds);
        let v = direct_summand(&ctx, &two, &set(&r, &[]), true).unwrap();
        assert_eq!(v.witness.unwrap().complement.unwrap(), sub(&ctx, &[&[3]]));
        let zero = Submodule::zero(ctx.module());
        let v = direct_summand(&ctx, &zero, &set(&r, &[]), true).unwrap();
        assert!(v.witness.unwrap().complement.unwrap().is_whole());
        assert!(fully(&ctx, Property::Coidempotent, &set(&r, &[]), Options::default()).unwrap().holds);
    }

    #[test]
    fn vector_space_cases() {
        let (ctx, r) = setup(2, &[2, 2]);
        let one = set(&r, &[]);
        assert!(!comultiplication(&ctx, &one).unwrap().holds);
        assert!(fully(&ctx, Property::Pure, &one, Options::default()).unwrap().holds);
        let v = fully(&ctx, Property::Coidempotent, &one, Options::default()).unwrap();
        assert!(!v.holds);
        assert_eq!(v.counterexample.unwrap().order(), 2);
        assert!(fully(&ctx, Property::Coidempotent, &set(&r, &[0]), Options::default()).unwrap().holds);
    }

    #[test]
    fn uniform_mode() {
        let (ctx, r) = setup(12, &[12]);
        let s = set(&r, &[2]);
        let v = fully(&ctx, Property::Coidempotent, &s, Options { strict_ds: true, uniform: true }).unwrap();
        let p = fully(&ctx, Property::Coidempotent, &s, Options::default()).unwrap();
        assert_eq!(v.holds, p.holds);
        if let Some(w) = v.witness {
            for n in ctx.lattice().all() {
                assert!(recheck(Property::Coidempotent, n, &w, true).unwrap());
            }
        }
    }

    #[test]
    fn witnesses_recheck() {
        let (ctx, r) = setup(12, &[2, 6]);
        let s = set(&r, &[2, 5]);
        let view = ctx.view(&s).unwrap();
        for n in 0..ctx.len() as u32 {
            for p in Property::ALL {
                for strict in [true, false] {
                    let v = pointwise_at(&ctx, p, n, &view, Options { strict_ds: strict, uniform: false });
                    if let Some(w) = v.witness {
                        assert!(recheck(p, ctx.sub(n), &w, strict).unwrap(), "{p} at {}", ctx.sub(n));
                    }
                }
            }
            for (q, v) in [
                (Query::Comultiplication, comultiplication_at(&ctx, n, &view)),
                (Query::Multiplication, multiplication_at(&ctx, n, &view)),
            ] {
                if let Some(w) = v.witness {
                    assert!(recheck_module_witness(q, ctx.sub(n), &w).unwrap());
                }
            }
        }
    }

    #[test]
    fn integer_closed_forms() {
        assert!(fully_coidempotent_z(&ZMultSet::NonZero).holds);
        let v = fully_coidempotent_z(&ZMultSet::Units);
        assert_eq!(v.counterexample, Some(ZSubmodule::new(2u32.into())));
        let v = fully_coidempotent_z(&ZMultSet::generated_by([2]));
        assert_eq!(v.counterexample, Some(ZSubmodule::new(3u32.into())));
        let v = fully_coidempotent_z(&ZMultSet::complement_of_primes(&[5, 3]).unwrap());
        assert_eq!(v.counterexample, Some(ZSubmodule::new(3u32.into())));
        assert!(fully_coidempotent_z(&ZMultSet::generated_by([0, 7])).holds);
        // agree with the pointwise test on every t up to a bound
        let sets = [
            ZMultSet::NonZero,
            ZMultSet::Units,
            ZMultSet::generated_by([2]),
            ZMultSet::generated_by([6, 5]),
            ZMultSet::generated_by([0]),
            ZMultSet::complement_of_primes(&[2]).unwrap(),
        ];
        for s in &sets {
            let all = (0..200u32).all(|t| coidempotent_z(&ZSubmodule::new(t.into()), s).holds);
            assert_eq!(all, fully_coidempotent_z(s).holds, "{s}");
            if let Some(c) = fully_coidempotent_z(s).counterexample {
                assert!(!coidempotent_z(&c, s).holds);
            }
        }
    }
}
