//! Enumeration of the full submodule lattice of a finite module, completely
//! irreducible submodules and irredundant intersection decompositions.
//!
//! Each ring component splits into primary parts; the lattice of a primary
//! part is the closure of `{0}` under adjoining cyclic submodules, and the
//! full lattice is the product of the primary lattices.

use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};
use crate::lattice::Hnf;
use crate::module::{sub_intersect, FinModule, Submodule};

/// Default bound on the number of submodules an enumeration may produce.
pub const DEFAULT_CAP: usize = 100_000;

/// All submodules of a finite module in canonical order (order ascending,
/// then basis), with the cover relation.
#[derive(Clone, Debug)]
pub struct SubmoduleLattice {
    parent: Arc<FinModule>,
    all: Vec<Submodule>,
    index: HashMap<Vec<Hnf>, usize>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
}

/// Serializable form used by the on-disk cache.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LatticeData {
    pub parts: Vec<Vec<Hnf>>,
    pub upper: Vec<Vec<usize>>,
}

/// Distinct cyclic sublattices of `h` (generated by single elements).
fn cyclic_sublattices(d: &[u64], h: &Hnf) -> Vec<Hnf> {
    let mut seen: HashMap<Hnf, ()> = HashMap::new();
    let mut out = Vec::new();
    for v in h.elements(d) {
        let c = Hnf::from_u64_generators(d, &[v]);
        if seen.insert(c.clone(), ()).is_none() {
            out.push(c);
        }
    }
    out
}

/// Closure of `{0}` under adding cyclic sublattices of `top`.
fn closure_lattice(d: &[u64], top: &Hnf, cap: usize) -> Result<Vec<Hnf>> {
    let cyclic = cyclic_sublattices(d, top);
    let start = Hnf::relations(d);
    let mut seen: HashMap<Hnf, ()> = HashMap::from([(start.clone(), ())]);
    let mut all = vec![start];
    let mut next = 0;
    while next < all.len() {
        let cur = all[next].clone();
        next += 1;
        for c in &cyclic {
            if c.is_subset(d, &cur) {
                continue;
            }
            let s = cur.sum(d, c);
            if seen.insert(s.clone(), ()).is_none() {
                all.push(s);
                if all.len() > cap {
                    return Err(Error::LatticeCap { cap });
                }
            }
        }
    }
    Ok(all)
}

/// Lattice of one ring component: product over the primes of its exponent.
fn component_lattice(d: &[u64], cap: usize) -> Result<Vec<Hnf>> {
    if d.is_empty() {
        return Ok(vec![Hnf::relations(d)]);
    }
    let e = d.iter().fold(1u64, |acc, &x| arith::lcm(acc, x).expect("exponent"));
    let full = Hnf::full(d.len());
    let mut combined = vec![Hnf::relations(d)];
    for (p, a) in arith::factorize(e) {
        let pa = p.pow(a);
        let primary = full.scaled(d, e / pa);
        let lat = closure_lattice(d, &primary, cap)?;
        if combined.len().saturating_mul(lat.len()) > cap {
            return Err(Error::LatticeCap { cap });
        }
        let mut next = Vec::with_capacity(combined.len() * lat.len());
        for x in &combined {
            for y in &lat {
                next.push(x.sum(d, y));
            }
        }
        combined = next;
    }
    Ok(combined)
}

fn is_prime_ratio(big: u128, small: u128) -> bool {
    big.is_multiple_of(small) && {
        let r = big / small;
        r <= u64::MAX as u128 && arith::is_prime(r as u64)
    }
}

/// The complete submodule lattice.
pub fn enumerate_submodules(m: &Arc<FinModule>) -> Result<SubmoduleLattice> {
    enumerate_submodules_capped(m, DEFAULT_CAP)
}

pub fn enumerate_submodules_capped(m: &Arc<FinModule>, cap: usize) -> Result<SubmoduleLattice> {
    let mut per: Vec<Vec<Hnf>> = Vec::new();
    let mut total: usize = 1;
    for d in m.components() {
        let lat = component_lattice(d, cap)?;
        total = total.saturating_mul(lat.len());
        if total > cap {
            return Err(Error::LatticeCap { cap });
        }
        per.push(lat);
    }
    let mut tuples: Vec<Vec<Hnf>> = vec![Vec::new()];
    for lat in &per {
        let mut next = Vec::with_capacity(tuples.len() * lat.len());
        for t in &tuples {
            for h in lat {
                let mut v = t.clone();
                v.push(h.clone());
                next.push(v);
            }
        }
        tuples = next;
    }
    let mut all: Vec<Submodule> = tuples.into_iter().map(|p| Submodule::from_parts(m, p)).collect();
    all.sort();
    let index: HashMap<Vec<Hnf>, usize> =
        all.iter().enumerate().map(|(i, s)| (s.parts().to_vec(), i)).collect();
    let upper = upper_covers(m, &all, &index);
    Ok(SubmoduleLattice::assemble(m, all, index, upper))
}

/// Upper covers: `N + Rm` of prime index over `N`. Every cover has this form,
/// and a prime index leaves no room in between.
fn upper_covers(m: &Arc<FinModule>, all: &[Submodule], index: &HashMap<Vec<Hnf>, usize>) -> Vec<Vec<usize>> {
    let comps = m.components();
    let cyclic: Vec<Vec<Hnf>> = comps
        .iter()
        .map(|d| cyclic_sublattices(d, &Hnf::full(d.len())))
        .collect();
    all.iter()
        .map(|n| {
            let mut covers: Vec<usize> = Vec::new();
            for (c, d) in comps.iter().enumerate() {
                for cyc in &cyclic[c] {
                    let part = n.parts()[c].sum(d, cyc);
                    let own = n.parts()[c].order(d);
                    if !is_prime_ratio(part.order(d), own) {
                        continue;
                    }
                    let mut parts = n.parts().to_vec();
                    parts[c] = part;
                    let idx = index[&parts];
                    if !covers.contains(&idx) {
                        covers.push(idx);
                    }
                }
            }
            covers.sort_unstable();
            covers
        })
        .collect()
}

impl SubmoduleLattice {
    fn assemble(
        m: &Arc<FinModule>,
        all: Vec<Submodule>,
        index: HashMap<Vec<Hnf>, usize>,
        upper: Vec<Vec<usize>>,
    ) -> SubmoduleLattice {
        let mut lower = vec![Vec::new(); all.len()];
        for (i, ups) in upper.iter().enumerate() {
            for &j in ups {
                lower[j].push(i);
            }
        }
        SubmoduleLattice { parent: m.clone(), all, index, upper, lower }
    }

    pub fn to_data(&self) -> LatticeData {
        LatticeData {
            parts: self.all.iter().map(|s| s.parts().to_vec()).collect(),
            upper: self.upper.clone(),
        }
    }

    /// Rebuild from cached data; the caller is responsible for the cache
    /// matching the module.
    pub fn from_data(m: &Arc<FinModule>, data: LatticeData) -> Result<SubmoduleLattice> {
        if data.parts.len() != data.upper.len() {
            return Err(Error::Io("malformed lattice cache entry".into()));
        }
        let all: Vec<Submodule> = data.parts.into_iter().map(|p| Submodule::from_parts(m, p)).collect();
        let index = all.iter().enumerate().map(|(i, s)| (s.parts().to_vec(), i)).collect();
        Ok(SubmoduleLattice::assemble(m, all, index, data.upper))
    }

    pub fn parent(&self) -> &Arc<FinModule> {
        &self.parent
    }

    pub fn all(&self) -> &[Submodule] {
        &self.all
    }

    pub fn len(&self) -> usize {
        self.all.len()
    }

    pub fn is_empty(&self) -> bool {
        self.all.is_empty()
    }

    pub fn get(&self, i: usize) -> &Submodule {
        &self.all[i]
    }

    pub fn index_of(&self, n: &Submodule) -> Option<usize> {
        self.index.get(n.parts()).copied()
    }

    pub fn index_of_parts(&self, parts: &[Hnf]) -> Option<usize> {
        self.index.get(parts).copied()
    }

    pub fn zero_index(&self) -> usize {
        0
    }

    pub fn top_index(&self) -> usize {
        self.all.len() - 1
    }

    /// Indices of the submodules covering `i`.
    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper[i]
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower[i]
    }

    /// Hasse diagram as `(lower, upper)` index pairs.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, ups) in self.upper.iter().enumerate() {
            for &j in ups {
                out.push((i, j));
            }
        }
        out
    }

    /// Proper submodules with a unique cover. In a finite lattice this is
    /// the same as not being an intersection of strictly larger submodules.
    pub fn completely_irreducible_indices(&self) -> Vec<usize> {
        (0..self.all.len()).filter(|&i| i != self.top_index() && self.upper[i].len() == 1).collect()
    }

    pub fn is_completely_irreducible(&self, i: usize) -> bool {
        i != self.top_index() && self.upper[i].len() == 1
    }

    pub fn completely_irreducibles(&self) -> Vec<Submodule> {
        self.completely_irreducible_indices().into_iter().map(|i| self.all[i].clone()).collect()
    }

    /// An irredundant list of completely irreducible submodules whose
    /// intersection is `N`; empty for `N = M`.
    pub fn ci_decomposition(&self, n: &Submodule) -> Result<Vec<Submodule>> {
        let i = self.index_of(n).ok_or(Error::ParentMismatch)?;
        let top = Submodule::whole(&self.parent);
        let meet = |items: &[&Submodule]| -> Submodule {
            items.iter().fold(top.clone(), |acc, s| sub_intersect(&acc, s).expect("same parent"))
        };
        if i == self.top_index() {
            return Ok(Vec::new());
        }
        let mut chosen: Vec<&Submodule> = self
            .completely_irreducible_indices()
            .into_iter()
            .map(|j| &self.all[j])
            .filter(|l| n.is_subset(l))
            .collect();
        if meet(&chosen) != *n {
            return Err(Error::CrossCheck(format!("{n} is not an intersection of completely irreducibles")));
        }
        let mut k = 0;
        while k < chosen.len() {
            let rest: Vec<&Submodule> =
                chosen.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, s)| *s).collect();
            if meet(&rest) == *n {
                chosen.remove(k);
            } else {
                k += 1;
            }
        }
        Ok(chosen.into_iter().cloned().collect())
    }
}

pub fn completely_irreducibles(lattice: &SubmoduleLattice) -> Vec<Submodule> {
    lattice.completely_irreducibles()
}

pub fn ci_decomposition(lattice: &SubmoduleLattice, n: &Submodule) -> Result<Vec<Submodule>> {
    lattice.ci_decomposition(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::{module_from_components, module_from_factors};
    use crate::ring::Ring;

    fn module(n: u64, fs: &[u64]) -> Arc<FinModule> {
        Arc::new(module_from_factors(&Ring::modular(n).unwrap(), fs).unwrap())
    }

    fn orders(l: &SubmoduleLattice, idx: &[usize]) -> Vec<u128> {
        idx.iter().map(|&i| l.get(i).order()).collect()
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_submodules(&module(2, &[2, 2])).unwrap().len(), 5);
        assert_eq!(enumerate_submodules(&module(12, &[12])).unwrap().len(), 6);
        assert_eq!(enumerate_submodules(&module(4, &[4, 2])).unwrap().len(), 8);
        assert_eq!(enumerate_submodules(&module(4, &[4])).unwrap().len(), 3);
        assert_eq!(enumerate_submodules(&module(6, &[6])).unwrap().len(), 4);
        let zero = module(6, &[]);
        assert_eq!(enumerate_submodules(&zero).unwrap().len(), 1);
    }

    #[test]
    fn cyclic_counts_match_divisors() {
        for n in 2..=60u64 {
            let l = enumerate_submodules(&module(n, &[n])).unwrap();
            assert_eq!(l.len(), arith::divisors(n).len(), "n = {n}");
        }
        for p in [2u64, 3, 5, 7] {
            assert_eq!(enumerate_submodules(&module(p, &[p, p])).unwrap().len() as u64, p + 3);
        }
    }

    #[test]
    fn cap_is_enforced() {
        let m = module(2, &[2; 6]);
        assert!(matches!(enumerate_submodules_capped(&m, 100), Err(Error::LatticeCap { cap: 100 })));
    }

    #[test]
    fn completely_irreducible_examples() {
        let l = enumerate_submodules(&module(12, &[12])).unwrap();
        let ci = l.completely_irreducible_indices();
        // orders 6, 4, 3 correspond to 2Z/12, 3Z/12, 4Z/12
        let mut o = orders(&l, &ci);
        o.sort();
        assert_eq!(o, [3, 4, 6]);

        let l = enumerate_submodules(&module(4, &[4])).unwrap();
        assert_eq!(orders(&l, &l.completely_irreducible_indices()), [1, 2]);

        let l = enumerate_submodules(&module(2, &[2, 2])).unwrap();
        assert_eq!(orders(&l, &l.completely_irreducible_indices()), [2, 2, 2]);
    }

    #[test]
    fn decompositions() {
        let m = module(12, &[12]);
        let l = enumerate_submodules(&m).unwrap();
        let six = l.all().iter().find(|s| s.order() == 2).unwrap();
        let mut dec: Vec<u128> = l.ci_decomposition(six).unwrap().iter().map(|s| s.order()).collect();
        dec.sort();
        assert_eq!(dec, [4, 6]);
        for i in l.completely_irreducible_indices() {
            assert_eq!(l.ci_decomposition(l.get(i)).unwrap(), vec![l.get(i).clone()]);
        }
        assert!(l.ci_decomposition(l.get(l.top_index())).unwrap().is_empty());
    }

    #[test]
    fn product_ring_lattice() {
        let ring = Ring::product(&[Ring::modular(2).unwrap(), Ring::modular(3).unwrap()]).unwrap();
        let m = Arc::new(module_from_components(&ring, &[vec![2], vec![3]]).unwrap());
        let l = enumerate_submodules(&m).unwrap();
        assert_eq!(l.len(), 4);
        // Z/2 x Z/2 over Z/2 x Z/2 has only the four product submodules
        let ring = Ring::product(&[Ring::modular(2).unwrap(), Ring::modular(2).unwrap()]).unwrap();
        let m = Arc::new(module_from_components(&ring, &[vec![2], vec![2]]).unwrap());
        assert_eq!(enumerate_submodules(&m).unwrap().len(), 4);
    }

    #[test]
    fn covers_are_minimal() {
        for (n, fs) in [(4u64, vec![4u64, 2]), (2, vec![2, 2, 2]), (12, vec![6, 12])] {
            let l = enumerate_submodules(&module(n, &fs)).unwrap();
            for i in 0..l.len() {
                for j in 0..l.len() {
                    let a = l.get(i);
                    let b = l.get(j);
                    let strict = a != b && a.is_subset(b);
                    let between = (0..l.len()).any(|t| {
                        let c = l.get(t);
                        c != a && c != b && a.is_subset(c) && c.is_subset(b)
                    });
                    assert_eq!(l.upper_covers(i).contains(&j), strict && !between);
                }
            }
        }
    }
}
