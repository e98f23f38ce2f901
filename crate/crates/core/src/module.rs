//! Finite modules `⊕ Z/d_i` over modular rings and finite products of them,
//! submodules as canonical lattices, and the operator algebra on them.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};
use crate::lattice::{Hnf, Subquotient};
use crate::multset::MultSet;
use crate::ring::{Ideal, Ring, RingElement};

/// A finite module `⊕_c ⊕_i Z/d_{c,i}`, one group of cyclic factors per ring
/// component. Factors equal to 1 are dropped at construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FinModule {
    ring: Ring,
    components: Vec<Vec<u64>>,
    /// Set when the module was declared over `Z` and re-based to `Z/e`.
    over_integers: Option<u64>,
}

/// An element of a [`FinModule`]; coordinates of all components, flattened,
/// each reduced modulo its factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ModuleElement(pub Vec<u64>);

impl fmt::Display for ModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            return write!(f, "{}", self.0[0]);
        }
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Module with cyclic factors over a single modular ring, or over `Z` (then
/// re-based to `Z/e` with `e` the exponent).
pub fn module_from_factors(ring: &Ring, factors: &[u64]) -> Result<FinModule> {
    match ring {
        Ring::Integers => {
            if factors.contains(&0) {
                return Err(Error::UnsupportedInfinite);
            }
            let kept: Vec<u64> = factors.iter().copied().filter(|&f| f > 1).collect();
            let e = kept
                .iter()
                .try_fold(1u64, |acc, &f| arith::lcm(acc, f))
                .ok_or(Error::ModulusTooLarge(u64::MAX))?;
            if e == 1 {
                return Err(Error::Unsupported("the zero Z-module has no finite re-basing".into()));
            }
            let base = Ring::modular(e)?;
            Ok(FinModule { ring: base, components: vec![kept], over_integers: Some(e) })
        }
        Ring::Modular(_) => module_from_components(ring, &[factors.to_vec()]),
        Ring::Product(_) => Err(Error::Unsupported(
            "modules over a product ring take one factor list per component".into(),
        )),
    }
}

/// Module over a finite ring given one factor list per ring component.
pub fn module_from_components(ring: &Ring, components: &[Vec<u64>]) -> Result<FinModule> {
    let moduli = ring.moduli().ok_or(Error::UnsupportedInfinite)?;
    if components.len() != moduli.len() {
        return Err(Error::DimensionMismatch { expected: moduli.len(), got: components.len() });
    }
    let mut comps = Vec::with_capacity(components.len());
    for (fs, &n) in components.iter().zip(moduli) {
        let mut kept = Vec::new();
        for &f in fs {
            if f == 0 || n % f != 0 {
                return Err(Error::FactorDoesNotDivide { factor: f, modulus: n });
            }
            if f > 1 {
                kept.push(f);
            }
        }
        comps.push(kept);
    }
    Ok(FinModule { ring: ring.clone(), components: comps, over_integers: None })
}

impl FinModule {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn components(&self) -> &[Vec<u64>] {
        &self.components
    }

    /// All cyclic factors, flattened across components.
    pub fn factors(&self) -> Vec<u64> {
        self.components.iter().flatten().copied().collect()
    }

    /// The exponent `e` when the module was declared over `Z`.
    pub fn integer_base(&self) -> Option<u64> {
        self.over_integers
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_empty())
    }

    pub fn order(&self) -> u128 {
        self.components.iter().flatten().map(|&f| f as u128).product()
    }

    /// Total number of cyclic coordinates.
    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.len()).sum()
    }

    /// Same factors, viewed over another ring (used after localization and
    /// for the componentwise view of products).
    pub(crate) fn rehome(ring: Ring, components: Vec<Vec<u64>>, over_integers: Option<u64>) -> FinModule {
        FinModule { ring, components, over_integers }
    }

    /// The module over one ring component.
    pub fn component_module(&self, c: usize) -> Result<FinModule> {
        let n = self.ring.moduli().expect("finite")[c];
        Ok(FinModule { ring: Ring::modular(n)?, components: vec![self.components[c].clone()], over_integers: None })
    }

    pub fn element(&self, coords: &[u64]) -> Result<ModuleElement> {
        let fs = self.factors();
        if coords.len() != fs.len() {
            return Err(Error::DimensionMismatch { expected: fs.len(), got: coords.len() });
        }
        Ok(ModuleElement(coords.iter().zip(&fs).map(|(&x, &f)| x % f).collect()))
    }

    pub fn zero_element(&self) -> ModuleElement {
        ModuleElement(vec![0; self.rank()])
    }

    pub fn add(&self, a: &ModuleElement, b: &ModuleElement) -> ModuleElement {
        ModuleElement(
            a.0.iter().zip(&b.0).zip(self.factors()).map(|((&x, &y), f)| (x + y) % f).collect(),
        )
    }

    /// `r·m`.
    pub fn act(&self, r: &RingElement, m: &ModuleElement) -> ModuleElement {
        let res = r.residues_slice().expect("finite ring element");
        let mut out = Vec::with_capacity(m.0.len());
        let mut pos = 0;
        for (c, fs) in self.components.iter().enumerate() {
            for &f in fs {
                out.push(arith::mul_mod(res[c] % f, m.0[pos], f));
                pos += 1;
            }
        }
        ModuleElement(out)
    }

    /// All elements in coordinate-lexicographic order.
    pub fn elements(&self) -> Result<Vec<ModuleElement>> {
        let o = self.order();
        if o > 1 << 22 {
            return Err(Error::TooLarge { order: o.to_string(), bound: 1 << 22 });
        }
        let fs = self.factors();
        let mut out = Vec::with_capacity(o as usize);
        let mut cur = vec![0u64; fs.len()];
        loop {
            out.push(ModuleElement(cur.clone()));
            let mut i = fs.len();
            loop {
                if i == 0 {
                    return Ok(out);
                }
                i -= 1;
                cur[i] += 1;
                if cur[i] < fs[i] {
                    break;
                }
                cur[i] = 0;
            }
        }
    }

    fn split<'a>(&self, coords: &'a [u64]) -> Vec<&'a [u64]> {
        let mut out = Vec::with_capacity(self.components.len());
        let mut pos = 0;
        for fs in &self.components {
            out.push(&coords[pos..pos + fs.len()]);
            pos += fs.len();
        }
        out
    }
}

impl fmt::Display for FinModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |fs: &[u64]| -> String {
            if fs.is_empty() {
                "0".to_string()
            } else {
                fs.iter().map(|d| format!("Z/{d}")).collect::<Vec<_>>().join(" + ")
            }
        };
        let parts: Vec<String> = self.components.iter().map(|c| show(c)).collect();
        write!(f, "{}", parts.join(" x "))?;
        match self.over_integers {
            Some(_) => write!(f, " over Z"),
            None => write!(f, " over {}", self.ring),
        }
    }
}

/// A submodule: one canonical lattice per ring component.
#[derive(Clone, Debug)]
pub struct Submodule {
    parent: Arc<FinModule>,
    parts: Vec<Hnf>,
}

impl PartialEq for Submodule {
    fn eq(&self, other: &Self) -> bool {
        self.parts == other.parts && (Arc::ptr_eq(&self.parent, &other.parent) || self.parent == other.parent)
    }
}

impl Eq for Submodule {}

impl Hash for Submodule {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.parts.hash(state);
    }
}

impl PartialOrd for Submodule {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Submodule {
    /// Order ascending, then canonical basis.
    fn cmp(&self, other: &Self) -> Ordering {
        self.order().cmp(&other.order()).then_with(|| self.parts.cmp(&other.parts))
    }
}

fn check_parent(a: &Submodule, b: &Submodule) -> Result<()> {
    if Arc::ptr_eq(&a.parent, &b.parent) || a.parent == b.parent {
        Ok(())
    } else {
        Err(Error::ParentMismatch)
    }
}

fn check_ideal(m: &FinModule, i: &Ideal) -> Result<()> {
    if i.ring() != m.ring() {
        return Err(Error::RingMismatch { left: m.ring().to_string(), right: i.ring().to_string() });
    }
    Ok(())
}

impl Submodule {
    pub fn zero(parent: &Arc<FinModule>) -> Submodule {
        let parts = parent.components.iter().map(|d| Hnf::relations(d)).collect();
        Submodule { parent: parent.clone(), parts }
    }

    pub fn whole(parent: &Arc<FinModule>) -> Submodule {
        let parts = parent.components.iter().map(|d| Hnf::full(d.len())).collect();
        Submodule { parent: parent.clone(), parts }
    }

    pub(crate) fn from_parts(parent: &Arc<FinModule>, parts: Vec<Hnf>) -> Submodule {
        debug_assert_eq!(parts.len(), parent.components.len());
        Submodule { parent: parent.clone(), parts }
    }

    pub fn parent(&self) -> &Arc<FinModule> {
        &self.parent
    }

    pub fn parts(&self) -> &[Hnf] {
        &self.parts
    }

    pub fn order(&self) -> u128 {
        self.parts.iter().zip(&self.parent.components).map(|(h, d)| h.order(d)).product()
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().zip(&self.parent.components).all(|(h, d)| h.is_relations(d))
    }

    pub fn is_whole(&self) -> bool {
        self.parts.iter().all(|h| h.is_full())
    }

    pub fn contains(&self, m: &ModuleElement) -> bool {
        self.parent
            .split(&m.0)
            .iter()
            .zip(&self.parts)
            .zip(&self.parent.components)
            .all(|((x, h), d)| h.contains_u64(d, x))
    }

    pub fn is_subset(&self, other: &Submodule) -> bool {
        self.parts
            .iter()
            .zip(&other.parts)
            .zip(&self.parent.components)
            .all(|((a, b), d)| a.is_subset(d, b))
    }

    /// Elements in a deterministic order.
    pub fn elements(&self) -> Vec<ModuleElement> {
        let per: Vec<Vec<Vec<u64>>> = self
            .parts
            .iter()
            .zip(&self.parent.components)
            .map(|(h, d)| h.elements(d))
            .collect();
        let mut out: Vec<Vec<u64>> = vec![Vec::new()];
        for choices in &per {
            let mut next = Vec::with_capacity(out.len() * choices.len());
            for prefix in &out {
                for c in choices {
                    let mut v = prefix.clone();
                    v.extend_from_slice(c);
                    next.push(v);
                }
            }
            out = next;
        }
        out.into_iter().map(ModuleElement).collect()
    }

    /// A small generating set (canonical basis rows that are nonzero).
    pub fn generators(&self) -> Vec<ModuleElement> {
        let k = self.parent.rank();
        let mut out = Vec::new();
        let mut offset = 0;
        for (h, d) in self.parts.iter().zip(&self.parent.components) {
            for r in h.generators(d) {
                let mut v = vec![0u64; k];
                v[offset..offset + d.len()].copy_from_slice(&r);
                out.push(ModuleElement(v));
            }
            offset += d.len();
        }
        out
    }
}

impl fmt::Display for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens = self.generators();
        if gens.is_empty() {
            return write!(f, "<0>");
        }
        write!(f, "<")?;
        for (i, g) in gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

/// Canonical form of the span of `gens`.
pub fn submodule_from_generators(m: &Arc<FinModule>, gens: &[ModuleElement]) -> Result<Submodule> {
    let k = m.rank();
    for g in gens {
        if g.0.len() != k {
            return Err(Error::DimensionMismatch { expected: k, got: g.0.len() });
        }
    }
    let mut parts = Vec::with_capacity(m.components.len());
    let mut offset = 0;
    for d in &m.components {
        let rows: Vec<Vec<i128>> = gens
            .iter()
            .map(|g| g.0[offset..offset + d.len()].iter().map(|&x| x as i128).collect())
            .collect();
        parts.push(Hnf::from_generators(d, &rows));
        offset += d.len();
    }
    Ok(Submodule { parent: m.clone(), parts })
}

fn zip_parts(a: &Submodule, b: &Submodule, f: impl Fn(&[u64], &Hnf, &Hnf) -> Hnf) -> Submodule {
    let parts = a
        .parts
        .iter()
        .zip(&b.parts)
        .zip(&a.parent.components)
        .map(|((x, y), d)| f(d, x, y))
        .collect();
    Submodule { parent: a.parent.clone(), parts }
}

pub fn sub_sum(n: &Submodule, k: &Submodule) -> Result<Submodule> {
    check_parent(n, k)?;
    Ok(zip_parts(n, k, |d, x, y| x.sum(d, y)))
}

pub fn sub_intersect(n: &Submodule, k: &Submodule) -> Result<Submodule> {
    check_parent(n, k)?;
    Ok(zip_parts(n, k, |d, x, y| x.intersect(d, y)))
}

/// `IN`.
pub fn ideal_action(i: &Ideal, n: &Submodule) -> Result<Submodule> {
    check_ideal(&n.parent, i)?;
    let g = i.divisors().expect("finite");
    let parts = n
        .parts
        .iter()
        .zip(&n.parent.components)
        .zip(g)
        .map(|((h, d), &c)| h.scaled(d, c))
        .collect();
    Ok(Submodule { parent: n.parent.clone(), parts })
}

/// `(N :_M I) = {m : Im ⊆ N}`.
pub fn colon_into(n: &Submodule, i: &Ideal) -> Result<Submodule> {
    check_ideal(&n.parent, i)?;
    let g = i.divisors().expect("finite");
    let parts = n
        .parts
        .iter()
        .zip(&n.parent.components)
        .zip(g)
        .map(|((h, d), &c)| h.preimage_scalar(d, c))
        .collect();
    Ok(Submodule { parent: n.parent.clone(), parts })
}

/// `(N :_R K) = {r : rK ⊆ N}`.
pub fn colon_ring(n: &Submodule, k: &Submodule) -> Result<Ideal> {
    check_parent(n, k)?;
    let gens: Vec<u64> = n
        .parts
        .iter()
        .zip(&k.parts)
        .zip(&n.parent.components)
        .map(|((hn, hk), d)| hn.conductor(d, hk))
        .collect();
    Ideal::from_divisors(&n.parent.ring, &gens)
}

/// `Ann_R(N)`.
pub fn annihilator(n: &Submodule) -> Ideal {
    colon_ring(&Submodule::zero(&n.parent), n).expect("same parent")
}

/// `sN`.
pub fn scalar_submodule(s: &RingElement, n: &Submodule) -> Result<Submodule> {
    ideal_action(&Ideal::principal(&n.parent.ring, s)?, n)
}

/// `M/N` with the submodule correspondence.
#[derive(Clone, Debug)]
pub struct QuotientModule {
    source: Arc<FinModule>,
    kernel: Submodule,
    target: Arc<FinModule>,
    maps: Vec<Subquotient>,
}

pub fn quotient_module(m: &Arc<FinModule>, n: &Submodule) -> Result<QuotientModule> {
    if !Arc::ptr_eq(m, &n.parent) && **m != *n.parent {
        return Err(Error::ParentMismatch);
    }
    let maps: Vec<Subquotient> = n
        .parts
        .iter()
        .map(|h| Subquotient::new(&Hnf::full(h.dim()), h))
        .collect();
    let comps: Vec<Vec<u64>> = maps.iter().map(|s| s.factors().to_vec()).collect();
    let target = FinModule::rehome(m.ring.clone(), comps, m.over_integers);
    Ok(QuotientModule { source: m.clone(), kernel: n.clone(), target: Arc::new(target), maps })
}

impl QuotientModule {
    pub fn source(&self) -> &Arc<FinModule> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FinModule> {
        &self.target
    }

    pub fn kernel(&self) -> &Submodule {
        &self.kernel
    }

    pub fn project_element(&self, x: &ModuleElement) -> ModuleElement {
        let mut out = Vec::new();
        for (part, sq) in self.source.split(&x.0).iter().zip(&self.maps) {
            out.extend(sq.project(part));
        }
        ModuleElement(out)
    }

    /// `(K + N)/N`.
    pub fn project(&self, k: &Submodule) -> Submodule {
        let parts = k
            .parts
            .iter()
            .zip(&self.source.components)
            .zip(&self.maps)
            .zip(&self.target.components)
            .map(|(((h, d), sq), e)| {
                let rows: Vec<Vec<u64>> = h.rows().map(|r| sq.project(r)).collect();
                let _ = d;
                Hnf::from_u64_generators(e, &rows)
            })
            .collect();
        Submodule { parent: self.target.clone(), parts }
    }

    /// The submodule of `M` containing `N` that corresponds to `K'`.
    pub fn lift(&self, k: &Submodule) -> Submodule {
        let parts = k
            .parts
            .iter()
            .zip(&self.source.components)
            .zip(&self.maps)
            .zip(&self.kernel.parts)
            .zip(&self.target.components)
            .map(|((((h, d), sq), base), e)| {
                let rows: Vec<Vec<u64>> = h.rows().map(|r| r.to_vec()).collect();
                let gens = sq.lift_generators(&rows, d);
                let _ = e;
                base.sum(d, &Hnf::from_u64_generators(d, &gens))
            })
            .collect();
        Submodule { parent: self.source.clone(), parts }
    }
}

/// A submodule `N` viewed as a module in its own right.
#[derive(Clone, Debug)]
pub struct SubmoduleModule {
    sub: Submodule,
    module: Arc<FinModule>,
    maps: Vec<Subquotient>,
}

pub fn submodule_as_module(n: &Submodule) -> SubmoduleModule {
    let maps: Vec<Subquotient> = n
        .parts
        .iter()
        .zip(&n.parent.components)
        .map(|(h, d)| Subquotient::new(h, &Hnf::relations(d)))
        .collect();
    let comps: Vec<Vec<u64>> = maps.iter().map(|s| s.factors().to_vec()).collect();
    let module = FinModule::rehome(n.parent.ring.clone(), comps, n.parent.over_integers);
    SubmoduleModule { sub: n.clone(), module: Arc::new(module), maps }
}

impl SubmoduleModule {
    pub fn module(&self) -> &Arc<FinModule> {
        &self.module
    }

    pub fn submodule(&self) -> &Submodule {
        &self.sub
    }

    /// Image in the parent of a submodule of `N`.
    pub fn embed(&self, k: &Submodule) -> Submodule {
        let parent = self.sub.parent();
        let parts = k
            .parts
            .iter()
            .zip(&parent.components)
            .zip(&self.maps)
            .map(|((h, d), sq)| {
                let rows: Vec<Vec<u64>> = h.rows().map(|r| sq.lift(r, d)).collect();
                Hnf::from_u64_generators(d, &rows)
            })
            .collect();
        Submodule { parent: parent.clone(), parts }
    }

    /// `K ∩ N` as a submodule of `N`.
    pub fn restrict(&self, k: &Submodule) -> Result<Submodule> {
        let meet = sub_intersect(k, &self.sub)?;
        let parts = meet
            .parts
            .iter()
            .zip(&self.maps)
            .zip(&self.module.components)
            .map(|((h, sq), e)| {
                let rows: Vec<Vec<u64>> = h.rows().map(|r| sq.project(r)).collect();
                Hnf::from_u64_generators(e, &rows)
            })
            .collect();
        Ok(Submodule { parent: self.module.clone(), parts })
    }
}

/// `{m : sm = 0 for some s ∈ S}`, computed from the maximal multiple of `S`
/// and cross-checked against the sum of the `(0 :_M s)`.
pub fn s_torsion(m: &Arc<FinModule>, s: &MultSet) -> Result<Submodule> {
    if s.ring() != m.ring() {
        return Err(Error::RingMismatch { left: m.ring().to_string(), right: s.ring().to_string() });
    }
    let zero = Submodule::zero(m);
    let top = s.max_multiple().expect("finite sets have a maximal multiple");
    let via_max = colon_into(&zero, &Ideal::principal(m.ring(), top)?)?;
    let mut via_sum = zero.clone();
    for t in s.elements() {
        via_sum = sub_sum(&via_sum, &colon_into(&zero, &Ideal::principal(m.ring(), t)?)?)?;
    }
    if via_sum != via_max {
        return Err(Error::CrossCheck(format!("S-torsion of {m}: {via_max} vs {via_sum}")));
    }
    Ok(via_max)
}

/// `S⁻¹M` realised as `M / T_S(M)` over `S⁻¹R ≅ R / I_S`.
#[derive(Clone, Debug)]
pub struct ModuleLocalization {
    pub ring: Option<Ring>,
    pub module: Option<Arc<FinModule>>,
    pub torsion: Submodule,
    quotient: QuotientModule,
    kept: Vec<usize>,
}

pub fn localize_module(m: &Arc<FinModule>, s: &MultSet) -> Result<ModuleLocalization> {
    let loc = s.localize()?;
    let torsion = s_torsion(m, s)?;
    let quotient = quotient_module(m, &torsion)?;
    let kept = loc.quotient.kept_components().to_vec();
    let (ring, module) = match loc.quotient.target() {
        None => (None, None),
        Some(r) => {
            let comps: Vec<Vec<u64>> =
                kept.iter().map(|&c| quotient.target.components[c].clone()).collect();
            for (&c, &n) in kept.iter().zip(r.moduli().expect("finite")) {
                if let Some(&f) = quotient.target.components[c].iter().find(|&&f| n % f != 0) {
                    return Err(Error::CrossCheck(format!("factor {f} survives localization beyond {n}")));
                }
            }
            for (c, fs) in quotient.target.components.iter().enumerate() {
                if !kept.contains(&c) && !fs.is_empty() {
                    return Err(Error::CrossCheck("collapsed component keeps a nonzero module".into()));
                }
            }
            let module = FinModule::rehome(r.clone(), comps, None);
            (Some(r.clone()), Some(Arc::new(module)))
        }
    };
    Ok(ModuleLocalization { ring, module, torsion, quotient, kept })
}

impl ModuleLocalization {
    pub fn is_zero(&self) -> bool {
        self.module.as_ref().is_none_or(|m| m.is_zero())
    }

    /// Image of `N` in `S⁻¹M`.
    pub fn image(&self, n: &Submodule) -> Option<Submodule> {
        let module = self.module.as_ref()?;
        let q = self.quotient.project(n);
        let parts = self.kept.iter().map(|&c| q.parts[c].clone()).collect();
        Some(Submodule { parent: module.clone(), parts })
    }

    /// Image of an ideal of `R` in `S⁻¹R`.
    pub fn image_ideal(&self, i: &Ideal) -> Option<Ideal> {
        let ring = self.ring.as_ref()?;
        let d = i.divisors()?;
        let tm = ring.moduli().expect("finite");
        let gens: Vec<u64> = self.kept.iter().zip(tm).map(|(&c, &n)| arith::gcd(d[c], n)).collect();
        Ideal::from_divisors(ring, &gens).ok()
    }

    /// Image of a ring element in `S⁻¹R`.
    pub fn image_element(&self, r: &RingElement) -> Option<RingElement> {
        let ring = self.ring.as_ref()?;
        let res = r.residues_slice()?;
        let tm = ring.moduli().expect("finite");
        Some(RingElement::Residues(self.kept.iter().zip(tm).map(|(&c, &n)| res[c] % n).collect()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn z(n: u64) -> Ring {
        Ring::modular(n).unwrap()
    }

    fn module(n: u64, fs: &[u64]) -> Arc<FinModule> {
        Arc::new(module_from_factors(&z(n), fs).unwrap())
    }

    fn sub(m: &Arc<FinModule>, gens: &[&[u64]]) -> Submodule {
        let gens: Vec<ModuleElement> = gens.iter().map(|g| m.element(g).unwrap()).collect();
        submodule_from_generators(m, &gens).unwrap()
    }

    fn ideal(n: u64, g: u64) -> Ideal {
        Ideal::from_divisors(&z(n), &[g]).unwrap()
    }

    fn set(n: &Submodule) -> BTreeSet<Vec<u64>> {
        n.elements().into_iter().map(|e| e.0).collect()
    }

    #[test]
    fn construction() {
        let m = module_from_factors(&z(4), &[2, 4]).unwrap();
        assert_eq!(m.factors(), [2, 4]);
        let m = module_from_factors(&Ring::Integers, &[2, 2]).unwrap();
        assert_eq!(m.ring(), &z(2));
        assert_eq!(m.integer_base(), Some(2));
        assert_eq!(module_from_factors(&z(6), &[1, 6]).unwrap().factors(), [6]);
        assert!(module_from_factors(&z(6), &[4]).is_err());
        assert!(module_from_factors(&Ring::Integers, &[0]).is_err());
    }

    #[test]
    fn generated_submodules() {
        let m = module(4, &[4]);
        assert_eq!(set(&sub(&m, &[&[2]])), BTreeSet::from([vec![0], vec![2]]));
        let m = module(2, &[2, 2]);
        assert_eq!(set(&sub(&m, &[&[1, 0]])), BTreeSet::from([vec![0, 0], vec![1, 0]]));
        let m = module(4, &[4, 2]);
        let s = sub(&m, &[&[1, 1]]);
        assert_eq!(set(&s), BTreeSet::from([vec![0, 0], vec![1, 1], vec![2, 0], vec![3, 1]]));
        assert!(submodule_from_generators(&m, &[ModuleElement(vec![1])]).is_err());
    }

    #[test]
    fn sums_and_meets() {
        let m = module(6, &[6]);
        assert!(sub_sum(&sub(&m, &[&[2]]), &sub(&m, &[&[3]])).unwrap().is_whole());
        let m = module(12, &[12]);
        assert!(sub_intersect(&sub(&m, &[&[4]]), &sub(&m, &[&[6]])).unwrap().is_zero());
        let n = sub(&m, &[&[4]]);
        assert_eq!(sub_sum(&n, &n).unwrap(), n);
        let other = module(12, &[12]);
        let foreign = module(6, &[6]);
        assert!(sub_sum(&n, &Submodule::zero(&other)).is_ok());
        assert!(sub_sum(&n, &Submodule::zero(&foreign)).is_err());
    }

    #[test]
    fn ideal_actions() {
        let m = module(12, &[12]);
        let n = sub(&m, &[&[3]]);
        assert_eq!(ideal_action(&ideal(12, 2), &n).unwrap(), sub(&m, &[&[6]]));
        assert!(ideal_action(&Ideal::zero(&z(12)), &n).unwrap().is_zero());
        assert_eq!(ideal_action(&Ideal::whole(&z(12)), &n).unwrap(), n);
    }

    #[test]
    fn colons() {
        let m = module(12, &[12]);
        let zero = Submodule::zero(&m);
        assert_eq!(colon_into(&zero, &ideal(12, 2)).unwrap(), sub(&m, &[&[6]]));
        let n = sub(&m, &[&[2]]);
        let got = colon_into(&n, &ideal(12, 3)).unwrap();
        let brute: BTreeSet<Vec<u64>> = (0..12u64).filter(|x| (3 * x % 12) % 2 == 0).map(|x| vec![x]).collect();
        assert_eq!(set(&got), brute);
        assert_eq!(set(&got), set(&n));
        assert!(colon_into(&n, &Ideal::zero(&z(12))).unwrap().is_whole());

        let m4 = module(4, &[4]);
        let n = sub(&m4, &[&[2]]);
        assert_eq!(colon_ring(&n, &Submodule::whole(&m4)).unwrap(), ideal(4, 2));
        let m = module(4, &[2, 4]);
        assert!(annihilator(&Submodule::whole(&m)).is_zero());
        let any = sub(&m, &[&[1, 2]]);
        assert!(colon_ring(&any, &any).unwrap().is_whole());
    }

    #[test]
    fn annihilators() {
        let m4 = module(4, &[4]);
        assert_eq!(annihilator(&sub(&m4, &[&[2]])), ideal(4, 2));
        let m = module(2, &[2, 2]);
        assert!(annihilator(&sub(&m, &[&[1, 0]])).is_zero());
        assert!(annihilator(&Submodule::zero(&m)).is_whole());
    }

    #[test]
    fn scalars() {
        let m4 = module(4, &[4]);
        let whole = Submodule::whole(&m4);
        assert!(scalar_submodule(&z(4).element(3), &whole).unwrap().is_whole());
        assert_eq!(scalar_submodule(&z(4).element(2), &whole).unwrap(), sub(&m4, &[&[2]]));
        assert!(scalar_submodule(&z(4).element(0), &whole).unwrap().is_zero());
    }

    #[test]
    fn quotients() {
        let m = module(12, &[12]);
        let q = quotient_module(&m, &sub(&m, &[&[4]])).unwrap();
        assert_eq!(q.target().factors(), [4]);
        let m2 = module(2, &[2, 2]);
        let q = quotient_module(&m2, &sub(&m2, &[&[1, 1]])).unwrap();
        assert_eq!(q.target().factors(), [2]);
        let q = quotient_module(&m2, &Submodule::whole(&m2)).unwrap();
        assert!(q.target().is_zero());
    }

    #[test]
    fn torsion_and_localization() {
        let r = z(12);
        let m = module(12, &[12]);
        let s = MultSet::closure(&r, &[r.element(2)]).unwrap();
        assert_eq!(s_torsion(&m, &s).unwrap(), sub(&m, &[&[3]]));
        let brute: BTreeSet<Vec<u64>> = (0..12u64).filter(|x| 4 * x % 12 == 0).map(|x| vec![x]).collect();
        assert_eq!(set(&s_torsion(&m, &s).unwrap()), brute);
        assert!(s_torsion(&m, &MultSet::units(&r).unwrap()).unwrap().is_zero());
        let with_zero = MultSet::closure(&r, &[r.element(0)]).unwrap();
        assert!(s_torsion(&m, &with_zero).unwrap().is_whole());

        let loc = localize_module(&m, &s).unwrap();
        assert_eq!(loc.ring, Some(z(3)));
        assert_eq!(loc.module.as_ref().unwrap().factors(), [3]);
        let loc = localize_module(&m, &MultSet::units(&r).unwrap()).unwrap();
        assert_eq!(loc.module.as_ref().unwrap().factors(), [12]);
        let loc = localize_module(&m, &with_zero).unwrap();
        assert!(loc.is_zero());
    }

    #[test]
    fn submodule_as_module_roundtrip() {
        let m = module(4, &[4, 2]);
        let n = sub(&m, &[&[1, 1]]);
        let view = submodule_as_module(&n);
        assert_eq!(view.module().order(), 4);
        let back = view.embed(&Submodule::whole(view.module()));
        assert_eq!(back, n);
        let small = sub(&m, &[&[2, 0]]);
        let r = view.restrict(&small).unwrap();
        assert_eq!(view.embed(&r), small);
    }

    #[test]
    fn product_ring_modules() {
        let ring = Ring::product(&[z(2), z(3)]).unwrap();
        let m = Arc::new(module_from_components(&ring, &[vec![2], vec![3]]).unwrap());
        assert_eq!(m.order(), 6);
        let n = submodule_from_generators(&m, &[m.element(&[1, 0]).unwrap()]).unwrap();
        assert_eq!(n.order(), 2);
        let ann = annihilator(&n);
        assert_eq!(ann.divisors(), Some(&[2, 1][..]));
        let r = ring.residues(vec![1, 0]).unwrap();
        assert_eq!(scalar_submodule(&r, &Submodule::whole(&m)).unwrap(), n);
    }
}
