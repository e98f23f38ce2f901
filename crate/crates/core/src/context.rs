//! Per-module tables that do not depend on the multiplicative set.
//!
//! Every predicate reduces to "does `S` meet a certain ideal", and the ideal
//! only depends on the module and the submodule. A [`ModuleContext`] holds
//! the lattice, operator tables indexed by lattice position and the witness
//! ideal of every pointwise property. [`SView`] pairs a multiplicative set
//! with the ring's ideal list so that each check becomes a table lookup.

use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::cache::LatticeCache;
use crate::enumerate::{enumerate_submodules_capped, SubmoduleLattice, DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::module::{
    annihilator, colon_into, colon_ring, ideal_action, quotient_module, sub_intersect, sub_sum,
    submodule_as_module, FinModule, Submodule,
};
use crate::multset::MultSet;
use crate::ring::{all_ideals, ideal_intersect, ideal_product, ideal_sum, Ideal, RingElement};

/// Pair tables are materialised up to this many submodules.
pub const PAIR_TABLE_LIMIT: usize = 1500;

#[derive(Debug)]
struct PairTables {
    sum: Vec<u32>,
    meet: Vec<u32>,
    colon: Vec<u32>,
}

/// Witness ideal of each pointwise property, indexed by submodule. A set
/// `S` makes `N` have the property iff `S` meets the ideal.
#[derive(Debug, Clone)]
pub struct PropertyIdeals {
    /// `(N :_R (0 :_M Ann²N))`.
    pub coidempotent: Vec<u32>,
    /// `((N :_R M)²M :_R N)`.
    pub idempotent: Vec<u32>,
    /// `∩_I (IN :_R N ∩ IM)`.
    pub pure: Vec<u32>,
    /// `∩_I (N + (0 :_M I) :_R (N :_M I))`.
    pub copure: Vec<u32>,
    /// `(N :_R (0 :_M Ann N))`.
    pub comultiplication: Vec<u32>,
    /// `((N :_R M)M :_R N)`.
    pub multiplication: Vec<u32>,
}

/// For each submodule `N` and ideal `J`, the least `K` with `N + K = JM`,
/// with and without `N ∩ K = 0`.
#[derive(Debug, Clone)]
pub struct SummandTables {
    pub strict: Vec<Vec<Option<u32>>>,
    pub loose: Vec<Vec<Option<u32>>>,
}

/// S-independent data for one finite module.
#[derive(Debug)]
pub struct ModuleContext {
    module: Arc<FinModule>,
    lattice: SubmoduleLattice,
    ideals: Vec<Ideal>,
    ideal_index: HashMap<Ideal, u32>,
    imul: Vec<u32>,
    imeet: Vec<u32>,
    isum: Vec<u32>,
    ann: Vec<u32>,
    whole_colon: Vec<u32>,
    colon_into: Vec<u32>,
    action: Vec<u32>,
    ci: Vec<u32>,
    pairs: OnceLock<Option<PairTables>>,
    props: OnceLock<PropertyIdeals>,
    summands: OnceLock<SummandTables>,
    quotients: OnceLock<Vec<Arc<FinModule>>>,
    submodule_modules: OnceLock<Vec<Arc<FinModule>>>,
}

impl ModuleContext {
    pub fn new(module: &Arc<FinModule>) -> Result<ModuleContext> {
        let lattice = enumerate_submodules_capped(module, DEFAULT_CAP)?;
        ModuleContext::from_lattice(lattice)
    }

    pub fn from_lattice(lattice: SubmoduleLattice) -> Result<ModuleContext> {
        let module = lattice.parent().clone();
        let ideals = all_ideals(module.ring())?;
        let ideal_index: HashMap<Ideal, u32> =
            ideals.iter().enumerate().map(|(i, x)| (x.clone(), i as u32)).collect();
        let ni = ideals.len();
        let lookup = |i: &Ideal| ideal_index[i];
        let mut imul = vec![0u32; ni * ni];
        let mut imeet = vec![0u32; ni * ni];
        let mut isum = vec![0u32; ni * ni];
        for a in 0..ni {
            for b in 0..ni {
                imul[a * ni + b] = lookup(&ideal_product(&ideals[a], &ideals[b])?);
                imeet[a * ni + b] = lookup(&ideal_intersect(&ideals[a], &ideals[b])?);
                isum[a * ni + b] = lookup(&ideal_sum(&ideals[a], &ideals[b])?);
            }
        }
        let subs = lattice.all();
        let top = Submodule::whole(&module);
        let index = |n: &Submodule| -> Result<u32> {
            lattice
                .index_of(n)
                .map(|i| i as u32)
                .ok_or_else(|| Error::CrossCheck(format!("{n} missing from the lattice of {module}")))
        };
        let rows: Vec<Result<(u32, u32, Vec<u32>, Vec<u32>)>> = subs
            .par_iter()
            .map(|n| {
                let ann = lookup(&annihilator(n));
                let wc = lookup(&colon_ring(n, &top)?);
                let mut ci = Vec::with_capacity(ni);
                let mut act = Vec::with_capacity(ni);
                for id in &ideals {
                    ci.push(index(&colon_into(n, id)?)?);
                    act.push(index(&ideal_action(id, n)?)?);
                }
                Ok((ann, wc, ci, act))
            })
            .collect();
        let mut ann = Vec::with_capacity(subs.len());
        let mut whole_colon = Vec::with_capacity(subs.len());
        let mut colon_tab = Vec::with_capacity(subs.len() * ni);
        let mut action = Vec::with_capacity(subs.len() * ni);
        for row in rows {
            let (a, w, c, x) = row?;
            ann.push(a);
            whole_colon.push(w);
            colon_tab.extend(c);
            action.extend(x);
        }
        let ci = lattice.completely_irreducible_indices().into_iter().map(|i| i as u32).collect();
        Ok(ModuleContext {
            module,
            lattice,
            ideals,
            ideal_index,
            imul,
            imeet,
            isum,
            ann,
            whole_colon,
            colon_into: colon_tab,
            action,
            ci,
            pairs: OnceLock::new(),
            props: OnceLock::new(),
            summands: OnceLock::new(),
            quotients: OnceLock::new(),
            submodule_modules: OnceLock::new(),
        })
    }

    pub fn module(&self) -> &Arc<FinModule> {
        &self.module
    }

    pub fn lattice(&self) -> &SubmoduleLattice {
        &self.lattice
    }

    pub fn len(&self) -> usize {
        self.lattice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lattice.is_empty()
    }

    pub fn sub(&self, i: u32) -> &Submodule {
        self.lattice.get(i as usize)
    }

    pub fn index(&self, n: &Submodule) -> Result<u32> {
        self.lattice.index_of(n).map(|i| i as u32).ok_or(Error::ParentMismatch)
    }

    pub fn zero(&self) -> u32 {
        0
    }

    pub fn top(&self) -> u32 {
        self.lattice.top_index() as u32
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn n_ideals(&self) -> usize {
        self.ideals.len()
    }

    pub fn ideal(&self, i: u32) -> &Ideal {
        &self.ideals[i as usize]
    }

    pub fn ideal_index(&self, i: &Ideal) -> Result<u32> {
        self.ideal_index.get(i).copied().ok_or_else(|| Error::RingMismatch {
            left: self.module.ring().to_string(),
            right: i.ring().to_string(),
        })
    }

    pub fn principal(&self, r: &RingElement) -> Result<u32> {
        self.ideal_index(&Ideal::principal(self.module.ring(), r)?)
    }

    pub fn whole_ideal(&self) -> u32 {
        0
    }

    pub fn zero_ideal(&self) -> u32 {
        self.ideals.len() as u32 - 1
    }

    pub fn imul(&self, a: u32, b: u32) -> u32 {
        self.imul[a as usize * self.ideals.len() + b as usize]
    }

    pub fn imeet(&self, a: u32, b: u32) -> u32 {
        self.imeet[a as usize * self.ideals.len() + b as usize]
    }

    pub fn isum(&self, a: u32, b: u32) -> u32 {
        self.isum[a as usize * self.ideals.len() + b as usize]
    }

    pub fn ideal_subset(&self, a: u32, b: u32) -> bool {
        self.imeet(a, b) == a
    }

    /// `Ann_R(N)`.
    pub fn ann(&self, n: u32) -> u32 {
        self.ann[n as usize]
    }

    /// `(N :_R M)`.
    pub fn whole_colon(&self, n: u32) -> u32 {
        self.whole_colon[n as usize]
    }

    /// `(N :_M I)`.
    pub fn colon_into(&self, n: u32, i: u32) -> u32 {
        self.colon_into[n as usize * self.ideals.len() + i as usize]
    }

    /// `IN`.
    pub fn action(&self, i: u32, n: u32) -> u32 {
        self.action[n as usize * self.ideals.len() + i as usize]
    }

    /// `(0 :_M I)`.
    pub fn torsion(&self, i: u32) -> u32 {
        self.colon_into(self.zero(), i)
    }

    pub fn completely_irreducibles(&self) -> &[u32] {
        &self.ci
    }

    fn pair_tables(&self) -> Option<&PairTables> {
        self.pairs
            .get_or_init(|| {
                let ns = self.len();
                if ns > PAIR_TABLE_LIMIT {
                    return None;
                }
                let rows: Vec<(Vec<u32>, Vec<u32>, Vec<u32>)> = (0..ns)
                    .into_par_iter()
                    .map(|a| {
                        let mut s = Vec::with_capacity(ns);
                        let mut m = Vec::with_capacity(ns);
                        let mut c = Vec::with_capacity(ns);
                        for b in 0..ns {
                            s.push(self.sum_direct(a as u32, b as u32));
                            m.push(self.meet_direct(a as u32, b as u32));
                            c.push(self.colon_direct(a as u32, b as u32));
                        }
                        (s, m, c)
                    })
                    .collect();
                let mut t = PairTables {
                    sum: Vec::with_capacity(ns * ns),
                    meet: Vec::with_capacity(ns * ns),
                    colon: Vec::with_capacity(ns * ns),
                };
                for (s, m, c) in rows {
                    t.sum.extend(s);
                    t.meet.extend(m);
                    t.colon.extend(c);
                }
                Some(t)
            })
            .as_ref()
    }

    fn sum_direct(&self, a: u32, b: u32) -> u32 {
        let s = sub_sum(self.sub(a), self.sub(b)).expect("same parent");
        self.index(&s).expect("lattice is closed under sums")
    }

    fn meet_direct(&self, a: u32, b: u32) -> u32 {
        let s = sub_intersect(self.sub(a), self.sub(b)).expect("same parent");
        self.index(&s).expect("lattice is closed under intersections")
    }

    fn colon_direct(&self, a: u32, b: u32) -> u32 {
        let i = colon_ring(self.sub(a), self.sub(b)).expect("same parent");
        self.ideal_index(&i).expect("same ring")
    }

    pub fn sum(&self, a: u32, b: u32) -> u32 {
        match self.pair_tables() {
            Some(t) => t.sum[a as usize * self.len() + b as usize],
            None => self.sum_direct(a, b),
        }
    }

    pub fn meet(&self, a: u32, b: u32) -> u32 {
        match self.pair_tables() {
            Some(t) => t.meet[a as usize * self.len() + b as usize],
            None => self.meet_direct(a, b),
        }
    }

    /// `(A :_R B)`.
    pub fn colon_ring(&self, a: u32, b: u32) -> u32 {
        match self.pair_tables() {
            Some(t) => t.colon[a as usize * self.len() + b as usize],
            None => self.colon_direct(a, b),
        }
    }

    pub fn subset(&self, a: u32, b: u32) -> bool {
        self.sub(a).is_subset(self.sub(b))
    }

    pub fn properties(&self) -> &PropertyIdeals {
        self.props.get_or_init(|| {
            let ns = self.len() as u32;
            let ni = self.ideals.len() as u32;
            let top = self.top();
            let zero = self.zero();
            let mut p = PropertyIdeals {
                coidempotent: Vec::with_capacity(ns as usize),
                idempotent: Vec::with_capacity(ns as usize),
                pure: Vec::with_capacity(ns as usize),
                copure: Vec::with_capacity(ns as usize),
                comultiplication: Vec::with_capacity(ns as usize),
                multiplication: Vec::with_capacity(ns as usize),
            };
            for n in 0..ns {
                let ann = self.ann(n);
                p.coidempotent.push(self.colon_ring(n, self.torsion(self.imul(ann, ann))));
                let w = self.whole_colon(n);
                p.idempotent.push(self.colon_ring(self.action(self.imul(w, w), top), n));
                p.comultiplication.push(self.colon_ring(n, self.torsion(ann)));
                p.multiplication.push(self.colon_ring(self.action(w, top), n));
                let mut pure = self.whole_ideal();
                let mut copure = self.whole_ideal();
                for i in 0..ni {
                    let left = self.meet(n, self.action(i, top));
                    pure = self.imeet(pure, self.colon_ring(self.action(i, n), left));
                    let right = self.sum(n, self.colon_into(zero, i));
                    copure = self.imeet(copure, self.colon_ring(right, self.colon_into(n, i)));
                }
                p.pure.push(pure);
                p.copure.push(copure);
            }
            p
        })
    }

    pub fn summands(&self) -> &SummandTables {
        self.summands.get_or_init(|| {
            let ns = self.len() as u32;
            let ni = self.ideals.len() as u32;
            let top = self.top();
            let rows: Vec<(Vec<Option<u32>>, Vec<Option<u32>>)> = (0..ns)
                .into_par_iter()
                .map(|n| {
                    let mut strict = vec![None; ni as usize];
                    let mut loose = vec![None; ni as usize];
                    for j in 0..ni {
                        let target = self.action(j, top);
                        if !self.subset(n, target) {
                            continue;
                        }
                        for k in 0..ns {
                            if self.sum(n, k) != target {
                                continue;
                            }
                            if loose[j as usize].is_none() {
                                loose[j as usize] = Some(k);
                            }
                            if self.meet(n, k) == self.zero() {
                                strict[j as usize] = Some(k);
                                break;
                            }
                        }
                    }
                    (strict, loose)
                })
                .collect();
            let (strict, loose) = rows.into_iter().unzip();
            SummandTables { strict, loose }
        })
    }

    /// `M/N` for every lattice position.
    pub fn quotient_module(&self, n: u32) -> Arc<FinModule> {
        self.quotients.get_or_init(|| {
            self.lattice
                .all()
                .iter()
                .map(|s| quotient_module(&self.module, s).expect("same parent").target().clone())
                .collect()
        })[n as usize]
            .clone()
    }

    /// `N` as a module for every lattice position.
    pub fn submodule_module(&self, n: u32) -> Arc<FinModule> {
        self.submodule_modules.get_or_init(|| {
            self.lattice.all().iter().map(|s| submodule_as_module(s).module().clone()).collect()
        })[n as usize]
            .clone()
    }

    /// Pairs a multiplicative set with this module's ideal list.
    pub fn view(&self, s: &MultSet) -> Result<SView> {
        SView::new(self.module.ring(), &self.ideals, s)
    }
}

/// A finite multiplicative set with its least witness in every ideal of the
/// ring, in the order of [`all_ideals`].
#[derive(Debug, Clone)]
pub struct SView {
    set: MultSet,
    witness: Vec<Option<RingElement>>,
}

impl SView {
    pub fn new(ring: &crate::ring::Ring, ideals: &[Ideal], s: &MultSet) -> Result<SView> {
        if s.ring() != ring {
            return Err(Error::RingMismatch { left: ring.to_string(), right: s.ring().to_string() });
        }
        let witness = ideals.iter().map(|i| s.meets_ideal(i).cloned()).collect();
        Ok(SView { set: s.clone(), witness })
    }

    pub fn set(&self) -> &MultSet {
        &self.set
    }

    /// Least element of `S` in the ideal with index `i`.
    pub fn witness(&self, i: u32) -> Option<&RingElement> {
        self.witness[i as usize].as_ref()
    }

    pub fn meets(&self, i: u32) -> bool {
        self.witness[i as usize].is_some()
    }
}

/// Shared cache of module contexts, safe to use from parallel workers.
/// Each module is built once; concurrent requests for the same module wait
/// for the first builder.
#[derive(Debug, Default)]
pub struct Workbench {
    slots: Mutex<HashMap<FinModule, Arc<OnceLock<Result<Arc<ModuleContext>>>>>>,
    cache: Option<LatticeCache>,
}

impl Workbench {
    pub fn new() -> Workbench {
        Workbench::default()
    }

    /// Persist lattices under `dir` and reuse them across runs.
    pub fn with_cache_dir(dir: impl Into<PathBuf>) -> Workbench {
        Workbench { slots: Mutex::default(), cache: Some(LatticeCache::new(dir)) }
    }

    pub fn context(&self, m: &FinModule) -> Result<Arc<ModuleContext>> {
        let slot = {
            let mut slots = self.slots.lock().expect("workbench lock");
            slots.entry(m.clone()).or_default().clone()
        };
        slot.get_or_init(|| self.build(m)).clone()
    }

    fn build(&self, m: &FinModule) -> Result<Arc<ModuleContext>> {
        let module = Arc::new(m.clone());
        let lattice = match &self.cache {
            Some(cache) => match cache.load(&module) {
                Some(l) => l,
                None => {
                    let l = enumerate_submodules_capped(&module, DEFAULT_CAP)?;
                    // a failed write only costs a recomputation next time
                    let _ = cache.store(&l);
                    l
                }
            },
            None => enumerate_submodules_capped(&module, DEFAULT_CAP)?,
        };
        Ok(Arc::new(ModuleContext::from_lattice(lattice)?))
    }

    pub fn len(&self) -> usize {
        self.slots.lock().expect("workbench lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::module_from_factors;
    use crate::ring::Ring;

    fn ctx(n: u64, fs: &[u64]) -> Arc<ModuleContext> {
        let m = module_from_factors(&Ring::modular(n).unwrap(), fs).unwrap();
        Workbench::new().context(&m).unwrap()
    }

    #[test]
    fn tables_match_direct_operations() {
        let c = ctx(12, &[2, 6]);
        let ns = c.len() as u32;
        for a in 0..ns {
            for b in 0..ns {
                let s = sub_sum(c.sub(a), c.sub(b)).unwrap();
                assert_eq!(c.sub(c.sum(a, b)), &s);
                let m = sub_intersect(c.sub(a), c.sub(b)).unwrap();
                assert_eq!(c.sub(c.meet(a, b)), &m);
                assert_eq!(c.ideal(c.colon_ring(a, b)), &colon_ring(c.sub(a), c.sub(b)).unwrap());
            }
        }
        assert!(c.ideal(c.whole_ideal()).is_whole());
        assert!(c.ideal(c.zero_ideal()).is_zero());
    }

    #[test]
    fn property_ideals_small_cases() {
        let c = ctx(4, &[4]);
        let p = c.properties();
        let two = (0..c.len() as u32).find(|&i| c.sub(i).order() == 2).unwrap();
        // (N :_R M) for N = 2Z/4 is 2Z/4
        assert_eq!(c.ideal(p.coidempotent[two as usize]).divisors(), Some(&[2u64][..]));
        let s = MultSet::from_elements(c.module().ring(), &[c.module().ring().element(1), c.module().ring().element(3)])
            .unwrap();
        let v = c.view(&s).unwrap();
        assert!(!v.meets(p.coidempotent[two as usize]));
        assert!(p.comultiplication.iter().all(|&i| v.meets(i)));
    }

    #[test]
    fn summand_table() {
        let c = ctx(6, &[6]);
        let t = c.summands();
        let two = (0..c.len() as u32).find(|&i| c.sub(i).order() == 3).unwrap();
        let k = t.strict[two as usize][c.whole_ideal() as usize].unwrap();
        assert_eq!(c.sub(k).order(), 2);
        let c = ctx(4, &[4]);
        let t = c.summands();
        let two = (0..c.len() as u32).find(|&i| c.sub(i).order() == 2).unwrap();
        assert_eq!(t.strict[two as usize][c.whole_ideal() as usize], None);
        assert!(t.loose[two as usize][c.whole_ideal() as usize].is_some());
    }

    #[test]
    fn workbench_shares_contexts() {
        let wb = Workbench::new();
        let m = module_from_factors(&Ring::modular(4).unwrap(), &[2, 4]).unwrap();
        let a = wb.context(&m).unwrap();
        let b = wb.context(&m).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
        assert_eq!(wb.len(), 1);
    }
}
