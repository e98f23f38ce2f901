//! Brute-force evaluation on explicit element sets.
//!
//! Everything here works on bitsets of module elements and ring elements and
//! evaluates the defining inclusions literally. It shares nothing with the
//! lattice engine beyond the module description, and serves as the oracle
//! the engine is tested against.

use std::collections::HashSet;
use std::sync::{Arc, OnceLock};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::module::{FinModule, Submodule};
use crate::ring::{Ideal, RingElement};

/// Largest module the element space accepts.
pub const MAX_MODULE_ORDER: u128 = 4096;
/// Largest ring the element space accepts (ring tables are quadratic).
pub const MAX_RING_ORDER: u128 = 1024;

pub type ElemSet = FixedBitSet;

/// A finite module together with its ring, indexed element by element.
#[derive(Debug)]
pub struct ElementSpace {
    module: Arc<FinModule>,
    factors: Vec<u64>,
    comp_of: Vec<usize>,
    strides: Vec<usize>,
    coords: Vec<u64>,
    n: usize,
    moduli: Vec<u64>,
    ring_res: Vec<u64>,
    rn: usize,
    ring_add: Vec<u32>,
    ring_mul: Vec<u32>,
    ideals: OnceLock<Vec<ElemSet>>,
    submodules: OnceLock<Vec<ElemSet>>,
}

fn mixed_radix(bases: &[u64]) -> Vec<usize> {
    let mut strides = vec![1usize; bases.len()];
    for i in (0..bases.len().saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * bases[i + 1] as usize;
    }
    strides
}

fn decode_all(bases: &[u64], count: usize) -> Vec<u64> {
    let k = bases.len();
    let mut out = vec![0u64; count * k];
    let strides = mixed_radix(bases);
    for idx in 0..count {
        for i in 0..k {
            out[idx * k + i] = (idx / strides[i]) as u64 % bases[i];
        }
    }
    out
}

impl ElementSpace {
    pub fn new(module: &Arc<FinModule>) -> Result<ElementSpace> {
        let order = module.order();
        if order > MAX_MODULE_ORDER {
            return Err(Error::TooLarge { order: order.to_string(), bound: MAX_MODULE_ORDER as u64 });
        }
        let ring_order = module.ring().order().ok_or(Error::UnsupportedInfinite)?;
        if ring_order > MAX_RING_ORDER {
            return Err(Error::TooLarge { order: ring_order.to_string(), bound: MAX_RING_ORDER as u64 });
        }
        let factors = module.factors();
        let comp_of: Vec<usize> = module
            .components()
            .iter()
            .enumerate()
            .flat_map(|(c, fs)| std::iter::repeat_n(c, fs.len()))
            .collect();
        let n = order as usize;
        let moduli = module.ring().moduli().expect("finite").to_vec();
        let rn = ring_order as usize;
        let mut space = ElementSpace {
            module: module.clone(),
            strides: mixed_radix(&factors),
            coords: decode_all(&factors, n),
            factors,
            comp_of,
            n,
            ring_res: decode_all(&moduli, rn),
            moduli,
            rn,
            ring_add: Vec::new(),
            ring_mul: Vec::new(),
            ideals: OnceLock::new(),
            submodules: OnceLock::new(),
        };
        let c = space.moduli.len();
        let rstrides = mixed_radix(&space.moduli);
        let mut add = vec![0u32; rn * rn];
        let mut mul = vec![0u32; rn * rn];
        for a in 0..rn {
            for b in 0..rn {
                let (mut sa, mut sm) = (0usize, 0usize);
                for i in 0..c {
                    let m = space.moduli[i];
                    let x = space.ring_res[a * c + i];
                    let y = space.ring_res[b * c + i];
                    sa += ((x + y) % m) as usize * rstrides[i];
                    sm += ((x * y) % m) as usize * rstrides[i];
                }
                add[a * rn + b] = sa as u32;
                mul[a * rn + b] = sm as u32;
            }
        }
        space.ring_add = add;
        space.ring_mul = mul;
        Ok(space)
    }

    pub fn module(&self) -> &Arc<FinModule> {
        &self.module
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn ring_len(&self) -> usize {
        self.rn
    }

    fn coord(&self, x: usize) -> &[u64] {
        let k = self.factors.len();
        &self.coords[x * k..(x + 1) * k]
    }

    fn encode(&self, v: impl Iterator<Item = u64>) -> usize {
        v.zip(&self.strides).map(|(c, &s)| c as usize * s).sum()
    }

    pub fn add(&self, x: usize, y: usize) -> usize {
        let (a, b) = (self.coord(x), self.coord(y));
        self.encode(a.iter().zip(b).zip(&self.factors).map(|((&p, &q), &f)| (p + q) % f))
    }

    /// `r·x` for a ring element index `r`.
    pub fn act(&self, r: usize, x: usize) -> usize {
        let c = self.moduli.len();
        let res = &self.ring_res[r * c..(r + 1) * c];
        let a = self.coord(x);
        self.encode(
            a.iter()
                .zip(&self.factors)
                .zip(&self.comp_of)
                .map(|((&p, &f), &ci)| (res[ci] % f) * p % f),
        )
    }

    pub fn ring_add(&self, a: usize, b: usize) -> usize {
        self.ring_add[a * self.rn + b] as usize
    }

    pub fn ring_mul(&self, a: usize, b: usize) -> usize {
        self.ring_mul[a * self.rn + b] as usize
    }

    pub fn element_index(&self, coords: &[u64]) -> usize {
        self.encode(coords.iter().zip(&self.factors).map(|(&c, &f)| c % f))
    }

    pub fn ring_index(&self, r: &RingElement) -> Result<usize> {
        let res = r.residues_slice().ok_or(Error::UnsupportedInfinite)?;
        if res.len() != self.moduli.len() {
            return Err(Error::DimensionMismatch { expected: self.moduli.len(), got: res.len() });
        }
        let strides = mixed_radix(&self.moduli);
        Ok(res.iter().zip(&self.moduli).zip(&strides).map(|((&x, &m), &s)| (x % m) as usize * s).sum())
    }

    pub fn ring_element(&self, r: usize) -> RingElement {
        let c = self.moduli.len();
        RingElement::Residues(self.ring_res[r * c..(r + 1) * c].to_vec())
    }

    /// The unit of the ring.
    pub fn one(&self) -> usize {
        let strides = mixed_radix(&self.moduli);
        strides.iter().sum()
    }

    pub fn empty(&self) -> ElemSet {
        FixedBitSet::with_capacity(self.n)
    }

    pub fn zero_sub(&self) -> ElemSet {
        let mut s = self.empty();
        s.insert(0);
        s
    }

    pub fn whole(&self) -> ElemSet {
        let mut s = self.empty();
        s.insert_range(..);
        s
    }

    fn ring_set(&self) -> ElemSet {
        FixedBitSet::with_capacity(self.rn)
    }

    pub fn whole_ring(&self) -> ElemSet {
        let mut s = self.ring_set();
        s.insert_range(..);
        s
    }

    /// Additive closure of `gens` (plus zero) in the module.
    fn additive_closure(&self, gens: &[usize]) -> ElemSet {
        let mut set = self.zero_sub();
        let mut queue = vec![0usize];
        while let Some(x) = queue.pop() {
            for &g in gens {
                let y = self.add(x, g);
                if !set.put(y) {
                    queue.push(y);
                }
            }
        }
        set
    }

    fn ring_additive_closure(&self, gens: &[usize]) -> ElemSet {
        let mut set = self.ring_set();
        set.insert(0);
        let mut queue = vec![0usize];
        while let Some(x) = queue.pop() {
            for &g in gens {
                let y = self.ring_add(x, g);
                if !set.put(y) {
                    queue.push(y);
                }
            }
        }
        set
    }

    /// The submodule generated by `gens`.
    pub fn span(&self, gens: &[usize]) -> ElemSet {
        let mut multiples = HashSet::new();
        for &g in gens {
            for r in 0..self.rn {
                multiples.insert(self.act(r, g));
            }
        }
        let mut list: Vec<usize> = multiples.into_iter().collect();
        list.sort_unstable();
        self.additive_closure(&list)
    }

    pub fn set_of(&self, n: &Submodule) -> ElemSet {
        let mut s = self.empty();
        for e in n.elements() {
            s.insert(self.element_index(&e.0));
        }
        s
    }

    pub fn ideal_set(&self, i: &Ideal) -> ElemSet {
        let mut s = self.ring_set();
        for r in 0..self.rn {
            if i.contains(&self.ring_element(r)) {
                s.insert(r);
            }
        }
        s
    }

    pub fn sum(&self, a: &ElemSet, b: &ElemSet) -> ElemSet {
        let mut out = self.empty();
        for x in a.ones() {
            for y in b.ones() {
                out.insert(self.add(x, y));
            }
        }
        out
    }

    pub fn meet(&self, a: &ElemSet, b: &ElemSet) -> ElemSet {
        let mut out = a.clone();
        out.intersect_with(b);
        out
    }

    /// `Ann_R(N)`.
    pub fn ann(&self, n: &ElemSet) -> ElemSet {
        let mut out = self.ring_set();
        for r in 0..self.rn {
            if n.ones().all(|x| self.act(r, x) == 0) {
                out.insert(r);
            }
        }
        out
    }

    pub fn ideal_mul(&self, i: &ElemSet, j: &ElemSet) -> ElemSet {
        let mut prods: Vec<usize> = Vec::new();
        let mut seen = self.ring_set();
        for a in i.ones() {
            for b in j.ones() {
                let p = self.ring_mul(a, b);
                if !seen.put(p) {
                    prods.push(p);
                }
            }
        }
        self.ring_additive_closure(&prods)
    }

    pub fn ideal_span(&self, gens: &[usize]) -> ElemSet {
        let mut seen = self.ring_set();
        let mut list = Vec::new();
        for &g in gens {
            for r in 0..self.rn {
                let p = self.ring_mul(r, g);
                if !seen.put(p) {
                    list.push(p);
                }
            }
        }
        self.ring_additive_closure(&list)
    }

    /// `(N :_M I)`.
    pub fn colon_into(&self, n: &ElemSet, i: &ElemSet) -> ElemSet {
        let mut out = self.empty();
        for m in 0..self.n {
            if i.ones().all(|r| n.contains(self.act(r, m))) {
                out.insert(m);
            }
        }
        out
    }

    /// `(N :_R K)`.
    pub fn colon_ring(&self, n: &ElemSet, k: &ElemSet) -> ElemSet {
        let mut out = self.ring_set();
        for r in 0..self.rn {
            if k.ones().all(|x| n.contains(self.act(r, x))) {
                out.insert(r);
            }
        }
        out
    }

    /// `IN`.
    pub fn action(&self, i: &ElemSet, n: &ElemSet) -> ElemSet {
        let mut seen = self.empty();
        let mut list = Vec::new();
        for r in i.ones() {
            for x in n.ones() {
                let y = self.act(r, x);
                if !seen.put(y) {
                    list.push(y);
                }
            }
        }
        self.additive_closure(&list)
    }

    /// `sN`.
    pub fn scalar(&self, s: usize, n: &ElemSet) -> ElemSet {
        let mut out = self.empty();
        for x in n.ones() {
            out.insert(self.act(s, x));
        }
        out
    }

    /// Every ideal, found as sums of principal ideals.
    pub fn ideals(&self) -> &[ElemSet] {
        self.ideals.get_or_init(|| {
            let principal: Vec<ElemSet> = (0..self.rn).map(|a| self.ideal_span(&[a])).collect();
            let mut all: Vec<ElemSet> = Vec::new();
            let mut seen: HashSet<ElemSet> = HashSet::new();
            let mut zero = self.ring_set();
            zero.insert(0);
            seen.insert(zero.clone());
            all.push(zero);
            let mut next = 0;
            while next < all.len() {
                let cur = all[next].clone();
                next += 1;
                for p in &principal {
                    if p.is_subset(&cur) {
                        continue;
                    }
                    let gens: Vec<usize> = cur.ones().chain(p.ones()).collect();
                    let s = self.ring_additive_closure(&gens);
                    if seen.insert(s.clone()) {
                        all.push(s);
                    }
                }
            }
            all
        })
    }

    /// Every submodule, found by adjoining single elements to known
    /// submodules until nothing new appears.
    pub fn submodules(&self) -> &[ElemSet] {
        self.submodules.get_or_init(|| {
            let cyclic: Vec<ElemSet> = (0..self.n).map(|x| self.span(&[x])).collect();
            let zero = self.zero_sub();
            let mut seen: HashSet<ElemSet> = HashSet::from([zero.clone()]);
            let mut all = vec![zero];
            let mut next = 0;
            while next < all.len() {
                let cur = all[next].clone();
                next += 1;
                for c in &cyclic {
                    if c.is_subset(&cur) {
                        continue;
                    }
                    let s = self.sum(&cur, c);
                    if seen.insert(s.clone()) {
                        all.push(s);
                    }
                }
            }
            all
        })
    }

    // Definitional checks for a fixed scalar `s`.

    /// `s(0 :_M Ann²N) ⊆ N`.
    pub fn coidempotent_with(&self, n: &ElemSet, s: usize) -> bool {
        let ann = self.ann(n);
        let big = self.colon_into(&self.zero_sub(), &self.ideal_mul(&ann, &ann));
        self.scalar(s, &big).is_subset(n)
    }

    /// `sN ⊆ (N :_R M)²M ⊆ N`.
    pub fn idempotent_with(&self, n: &ElemSet, s: usize) -> bool {
        let c = self.colon_ring(n, &self.whole());
        let inner = self.action(&self.ideal_mul(&c, &c), &self.whole());
        self.scalar(s, n).is_subset(&inner) && inner.is_subset(n)
    }

    /// `s(N ∩ IM) ⊆ IN` for every ideal `I`.
    pub fn pure_with(&self, n: &ElemSet, s: usize) -> bool {
        let whole = self.whole();
        self.ideals().iter().all(|i| {
            let left = self.meet(n, &self.action(i, &whole));
            self.scalar(s, &left).is_subset(&self.action(i, n))
        })
    }

    /// `s(N :_M I) ⊆ N + (0 :_M I)` for every ideal `I`.
    pub fn copure_with(&self, n: &ElemSet, s: usize) -> bool {
        let zero = self.zero_sub();
        self.ideals().iter().all(|i| {
            let left = self.colon_into(n, i);
            self.scalar(s, &left).is_subset(&self.sum(n, &self.colon_into(&zero, i)))
        })
    }

    /// `s(0 :_M I) ⊆ N ⊆ (0 :_M I)` for some ideal `I`.
    pub fn comultiplication_at(&self, n: &ElemSet, s: usize) -> bool {
        let zero = self.zero_sub();
        self.ideals().iter().any(|i| {
            let t = self.colon_into(&zero, i);
            n.is_subset(&t) && self.scalar(s, &t).is_subset(n)
        })
    }

    /// `sN ⊆ IM ⊆ N` for some ideal `I`.
    pub fn multiplication_at(&self, n: &ElemSet, s: usize) -> bool {
        let whole = self.whole();
        self.ideals().iter().any(|i| {
            let im = self.action(i, &whole);
            im.is_subset(n) && self.scalar(s, n).is_subset(&im)
        })
    }

    /// `sM = N + K`, and `N ∩ K = 0` when `strict`.
    pub fn summand_with(&self, n: &ElemSet, k: &ElemSet, s: usize, strict: bool) -> bool {
        let sm = self.scalar(s, &self.whole());
        self.sum(n, k) == sm && (!strict || self.meet(n, k) == self.zero_sub())
    }

    pub fn direct_summand_with(&self, n: &ElemSet, s: usize, strict: bool) -> bool {
        self.submodules().iter().any(|k| self.summand_with(n, k, s, strict))
    }

    // Classical definitions, as equalities.

    pub fn is_coidempotent(&self, n: &ElemSet) -> bool {
        let ann = self.ann(n);
        *n == self.colon_into(&self.zero_sub(), &self.ideal_mul(&ann, &ann))
    }

    pub fn is_idempotent(&self, n: &ElemSet) -> bool {
        let c = self.colon_ring(n, &self.whole());
        *n == self.action(&self.ideal_mul(&c, &c), &self.whole())
    }

    pub fn is_pure(&self, n: &ElemSet) -> bool {
        let whole = self.whole();
        self.ideals().iter().all(|i| self.action(i, n) == self.meet(n, &self.action(i, &whole)))
    }

    pub fn is_copure(&self, n: &ElemSet) -> bool {
        let zero = self.zero_sub();
        self.ideals().iter().all(|i| self.colon_into(n, i) == self.sum(n, &self.colon_into(&zero, i)))
    }

    pub fn is_comultiplication(&self) -> bool {
        let zero = self.zero_sub();
        self.submodules()
            .iter()
            .all(|n| self.ideals().iter().any(|i| *n == self.colon_into(&zero, i)))
    }

    pub fn is_multiplication(&self) -> bool {
        let whole = self.whole();
        self.submodules()
            .iter()
            .all(|n| self.ideals().iter().any(|i| *n == self.action(i, &whole)))
    }

    /// `M = N ⊕ K` for some `K`.
    pub fn is_direct_summand(&self, n: &ElemSet) -> bool {
        let whole = self.whole();
        let zero = self.zero_sub();
        self.submodules().iter().any(|k| self.sum(n, k) == whole && self.meet(n, k) == zero)
    }

    pub fn is_semisimple(&self) -> bool {
        self.submodules().iter().all(|n| self.is_direct_summand(n))
    }

    /// Sorted, to compare with other enumerations.
    pub fn sorted_submodules(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self.submodules().iter().map(|s| s.ones().collect()).collect();
        out.sort();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::module_from_factors;
    use crate::ring::Ring;

    fn space(n: u64, fs: &[u64]) -> ElementSpace {
        let m = Arc::new(module_from_factors(&Ring::modular(n).unwrap(), fs).unwrap());
        ElementSpace::new(&m).unwrap()
    }

    #[test]
    fn counts() {
        assert_eq!(space(4, &[4]).submodules().len(), 3);
        assert_eq!(space(6, &[6]).submodules().len(), 4);
        assert_eq!(space(2, &[2, 2]).submodules().len(), 5);
        assert_eq!(space(4, &[4, 2]).submodules().len(), 8);
        assert_eq!(space(12, &[12]).ideals().len(), 6);
    }

    #[test]
    fn indexing_roundtrip() {
        let sp = space(12, &[2, 6]);
        for x in 0..sp.len() {
            assert_eq!(sp.element_index(sp.coord(x)), x);
        }
        assert_eq!(sp.ring_element(sp.one()), RingElement::Residues(vec![1]));
        let r = sp.ring_index(&RingElement::Residues(vec![5])).unwrap();
        let x = sp.element_index(&[1, 1]);
        assert_eq!(sp.coord(sp.act(r, x)), [1, 5]);
    }

    #[test]
    fn classical_examples() {
        let sp = space(6, &[6]);
        let two = sp.span(&[sp.element_index(&[2])]);
        assert!(sp.is_coidempotent(&two));
        assert!(sp.is_idempotent(&two));
        let sp = space(4, &[4]);
        let two = sp.span(&[sp.element_index(&[2])]);
        assert!(!sp.is_idempotent(&two));
        assert!(!sp.is_pure(&two));
        assert!(!sp.is_coidempotent(&two));
        assert!(sp.is_comultiplication());
        let sp = space(2, &[2, 2]);
        assert!(!sp.is_comultiplication());
        assert!(sp.is_semisimple());
        assert!(sp.submodules().iter().all(|n| sp.is_pure(n)));
    }
}
