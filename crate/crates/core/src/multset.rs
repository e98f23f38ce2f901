//! Multiplicatively closed subsets: symbolic presentations over `Z` and
//! explicit closed subsets of finite rings.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};
use crate::ring::{Ideal, QuotientRing, Ring, RingElement};

/// A multiplicatively closed subset of `Z`, given symbolically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ZMultSet {
    /// `{1, -1}`.
    Units,
    /// `Z \ {0}`.
    NonZero,
    /// `Z` minus the union of `pZ` over the listed primes (sorted, distinct).
    ComplementOfPrimes(Vec<u64>),
    /// Closure of the generators together with 1. Zero is allowed.
    GeneratedBy(Vec<BigInt>),
    /// Divisors of elements of the set generated by the listed integers.
    SaturatedGeneratedBy(Vec<BigInt>),
}

impl ZMultSet {
    pub fn complement_of_primes(ps: &[u64]) -> Result<ZMultSet> {
        if ps.is_empty() {
            return Err(Error::Parse("comp-primes needs at least one prime".into()));
        }
        let mut sorted = ps.to_vec();
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(Error::Parse(format!("prime {} listed twice", w[0])));
            }
        }
        if let Some(p) = sorted.iter().find(|&&p| !arith::is_prime(p)) {
            return Err(Error::Parse(format!("{p} is not prime")));
        }
        Ok(ZMultSet::ComplementOfPrimes(sorted))
    }

    pub fn generated_by<I: IntoIterator<Item = i64>>(gs: I) -> ZMultSet {
        ZMultSet::GeneratedBy(gs.into_iter().map(BigInt::from).collect())
    }

    fn nonunit_generators(gs: &[BigInt]) -> impl Iterator<Item = &BigInt> {
        gs.iter().filter(|g| g.magnitude() > &BigUint::one())
    }

    fn has_zero(gs: &[BigInt]) -> bool {
        gs.iter().any(|g| g.is_zero())
    }

    /// Primes dividing some nonzero generator.
    fn support(gs: &[BigInt]) -> Vec<BigUint> {
        let mut set = BTreeSet::new();
        for g in Self::nonunit_generators(gs) {
            set.extend(arith::big_prime_support(g.magnitude()));
        }
        set.into_iter().collect()
    }

    pub fn contains(&self, x: &BigInt) -> bool {
        match self {
            ZMultSet::Units => x.magnitude().is_one(),
            ZMultSet::NonZero => !x.is_zero(),
            ZMultSet::ComplementOfPrimes(ps) => {
                ps.iter().all(|&p| !(x % BigInt::from(p)).is_zero())
            }
            ZMultSet::GeneratedBy(gs) => {
                if x.is_zero() {
                    return Self::has_zero(gs);
                }
                generated_contains(gs, x)
            }
            ZMultSet::SaturatedGeneratedBy(gs) => {
                if Self::has_zero(gs) {
                    return true;
                }
                if x.is_zero() {
                    return false;
                }
                let support = Self::support(gs);
                arith::big_prime_support(x.magnitude())
                    .iter()
                    .all(|p| support.contains(p))
            }
        }
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&BigInt::zero())
    }

    /// Some `s` in `S ∩ cZ`. `c` is the nonnegative generator of the ideal.
    pub fn meets_ideal(&self, c: &BigUint) -> Option<BigInt> {
        if c.is_zero() {
            return self.contains_zero().then(BigInt::zero);
        }
        let ci = BigInt::from(c.clone());
        match self {
            ZMultSet::Units => c.is_one().then(BigInt::one),
            ZMultSet::NonZero => Some(ci),
            ZMultSet::ComplementOfPrimes(_) => self.contains(&ci).then_some(ci),
            ZMultSet::GeneratedBy(gs) | ZMultSet::SaturatedGeneratedBy(gs) => {
                if c.is_one() {
                    return Some(BigInt::one());
                }
                if Self::has_zero(gs) {
                    return Some(BigInt::zero());
                }
                let support = Self::support(gs);
                if !arith::big_prime_support(c).iter().all(|p| support.contains(p)) {
                    return None;
                }
                let base: BigInt = Self::nonunit_generators(gs).product();
                let mut s = base.clone();
                while !(&s % &ci).is_zero() {
                    s *= &base;
                }
                Some(s)
            }
        }
    }

    pub fn saturation(&self) -> ZMultSet {
        match self {
            ZMultSet::GeneratedBy(gs) => {
                if !Self::has_zero(gs) && Self::nonunit_generators(gs).next().is_none() {
                    ZMultSet::Units
                } else {
                    ZMultSet::SaturatedGeneratedBy(gs.clone())
                }
            }
            other => other.clone(),
        }
    }

    /// Some `s` divisible by every element, if one exists.
    pub fn max_multiple(&self) -> Option<BigInt> {
        match self {
            ZMultSet::Units => Some(BigInt::one()),
            ZMultSet::NonZero | ZMultSet::ComplementOfPrimes(_) => None,
            ZMultSet::GeneratedBy(gs) | ZMultSet::SaturatedGeneratedBy(gs) => {
                if Self::has_zero(gs) {
                    Some(BigInt::zero())
                } else if Self::nonunit_generators(gs).next().is_none() {
                    Some(BigInt::one())
                } else {
                    None
                }
            }
        }
    }

    /// Image of the set in `Z/n`.
    pub fn reduce(&self, n: u64) -> Result<MultSet> {
        let ring = Ring::modular(n)?;
        let elements = match self {
            ZMultSet::Units => {
                let mut v = vec![1, n - 1];
                v.dedup();
                v
            }
            ZMultSet::NonZero => (0..n).collect(),
            ZMultSet::ComplementOfPrimes(ps) => {
                let active: Vec<u64> = ps.iter().copied().filter(|p| n.is_multiple_of(*p)).collect();
                (0..n).filter(|x| active.iter().all(|p| x % p != 0)).collect()
            }
            ZMultSet::GeneratedBy(gs) => {
                let gens: Vec<RingElement> = gs.iter().map(|g| ring.element_big(g)).collect();
                return MultSet::closure(&ring, &gens);
            }
            ZMultSet::SaturatedGeneratedBy(gs) => {
                if Self::has_zero(gs) {
                    (0..n).collect()
                } else {
                    let mut gens: Vec<RingElement> = Self::support(gs)
                        .iter()
                        .map(|p| ring.element_big(&BigInt::from(p.clone())))
                        .collect();
                    gens.push(ring.element(-1));
                    return MultSet::closure(&ring, &gens);
                }
            }
        };
        Ok(MultSet {
            elements: elements.into_iter().map(|x| RingElement::Residues(vec![x])).collect(),
            ring,
        })
    }
}

/// Membership of a nonzero `x` in the monoid generated by `gs`.
fn generated_contains(gs: &[BigInt], x: &BigInt) -> bool {
    if x.is_one() {
        return true;
    }
    if x.magnitude().is_one() {
        // -1 is reachable only from a generator equal to -1, or as a sign
        // flip combined with a nonunit factor, which would change |x|.
        return gs.iter().any(|g| *g == BigInt::from(-1));
    }
    let minus_one = gs.iter().any(|g| *g == BigInt::from(-1));
    let nonunits: Vec<&BigInt> = ZMultSet::nonunit_generators(gs).collect();
    fn dfs(x: &BigInt, gens: &[&BigInt], from: usize, minus_one: bool) -> bool {
        if x.is_one() || (minus_one && *x == BigInt::from(-1)) {
            return true;
        }
        for (i, g) in gens.iter().enumerate().skip(from) {
            if (x % *g).is_zero() && dfs(&(x / *g), gens, i, minus_one) {
                return true;
            }
        }
        false
    }
    dfs(x, &nonunits, 0, minus_one)
}

impl fmt::Display for ZMultSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &mut dyn Iterator<Item = String>| v.collect::<Vec<_>>().join(",");
        match self {
            ZMultSet::Units => write!(f, "units"),
            ZMultSet::NonZero => write!(f, "nonzero"),
            ZMultSet::ComplementOfPrimes(ps) => {
                write!(f, "comp-primes:{}", join(&mut ps.iter().map(|p| p.to_string())))
            }
            ZMultSet::GeneratedBy(gs) => {
                write!(f, "gen:{}", join(&mut gs.iter().map(|g| g.to_string())))
            }
            ZMultSet::SaturatedGeneratedBy(gs) => {
                write!(f, "sat-gen:{}", join(&mut gs.iter().map(|g| g.to_string())))
            }
        }
    }
}

/// A multiplicatively closed subset of a finite ring, stored as its full
/// element list in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultSet {
    ring: Ring,
    elements: Vec<RingElement>,
}

fn component_divides(t: &[u64], s: &[u64], moduli: &[u64]) -> bool {
    t.iter()
        .zip(s)
        .zip(moduli)
        .all(|((&t, &s), &n)| s % arith::gcd(t, n) == 0)
}

impl MultSet {
    /// Least multiplicatively closed subset containing `gens` and 1.
    pub fn closure(ring: &Ring, gens: &[RingElement]) -> Result<MultSet> {
        if !ring.is_finite() {
            return Err(Error::InfiniteRing("closure_in_ring"));
        }
        for g in gens {
            ring.check(g)?;
        }
        let mut seen: BTreeSet<RingElement> = BTreeSet::new();
        let mut queue = vec![ring.one()];
        seen.insert(ring.one());
        while let Some(x) = queue.pop() {
            for g in gens {
                let y = ring.mul(&x, g);
                if seen.insert(y.clone()) {
                    queue.push(y);
                }
            }
        }
        Ok(MultSet { ring: ring.clone(), elements: seen.into_iter().collect() })
    }

    /// `{1}`.
    pub fn one(ring: &Ring) -> Result<MultSet> {
        MultSet::closure(ring, &[])
    }

    pub fn units(ring: &Ring) -> Result<MultSet> {
        Ok(MultSet { ring: ring.clone(), elements: crate::ring::units(ring)? })
    }

    /// `R \ P` for a prime ideal `P`.
    pub fn complement_of_prime(ring: &Ring, p: &Ideal) -> Result<MultSet> {
        let elements: Vec<RingElement> =
            ring.elements()?.into_iter().filter(|x| !p.contains(x)).collect();
        let set = MultSet { ring: ring.clone(), elements };
        if !set.is_closed() || !set.contains(&ring.one()) {
            return Err(Error::Unsupported(format!("complement of {p} is not multiplicatively closed")));
        }
        Ok(set)
    }

    /// Check an explicit element list for closure and build the set.
    pub fn from_elements(ring: &Ring, elems: &[RingElement]) -> Result<MultSet> {
        for e in elems {
            ring.check(e)?;
        }
        let set: BTreeSet<RingElement> = elems.iter().cloned().collect();
        let out = MultSet { ring: ring.clone(), elements: set.into_iter().collect() };
        if !out.contains(&ring.one()) || !out.is_closed() {
            return Err(Error::Unsupported("element list is not multiplicatively closed".into()));
        }
        Ok(out)
    }

    /// `S1 x ... x Sk` inside the product of the underlying rings.
    pub fn product(parts: &[MultSet]) -> Result<MultSet> {
        let ring = Ring::product(&parts.iter().map(|p| p.ring.clone()).collect::<Vec<_>>())?;
        let mut tuples: Vec<Vec<u64>> = vec![Vec::new()];
        for part in parts {
            let mut next = Vec::new();
            for prefix in &tuples {
                for e in &part.elements {
                    let mut v = prefix.clone();
                    v.extend_from_slice(e.residues_slice().expect("finite"));
                    next.push(v);
                }
            }
            tuples = next;
        }
        tuples.sort();
        Ok(MultSet { ring, elements: tuples.into_iter().map(RingElement::Residues).collect() })
    }

    /// Component `c` of a set over a product ring, when the set is a product.
    pub fn project(&self, c: usize) -> Result<MultSet> {
        let ms = self.ring.moduli().expect("finite");
        let ring = Ring::modular(ms[c])?;
        let elems: BTreeSet<RingElement> = self
            .elements
            .iter()
            .map(|e| RingElement::Residues(vec![e.residues_slice().expect("finite")[c]]))
            .collect();
        Ok(MultSet { ring, elements: elems.into_iter().collect() })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn elements(&self) -> &[RingElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: &RingElement) -> bool {
        self.elements.binary_search(x).is_ok()
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&self.ring.zero())
    }

    pub fn is_subset(&self, other: &MultSet) -> bool {
        self.ring == other.ring && self.elements.iter().all(|x| other.contains(x))
    }

    /// Every element is a unit.
    pub fn within_units(&self) -> bool {
        self.elements.iter().all(|x| self.ring.is_unit(x))
    }

    fn is_closed(&self) -> bool {
        self.elements
            .iter()
            .all(|a| self.elements.iter().all(|b| self.contains(&self.ring.mul(a, b))))
    }

    /// Least `s ∈ S ∩ I`.
    pub fn meets_ideal(&self, i: &Ideal) -> Option<&RingElement> {
        self.elements.iter().find(|s| i.contains(s))
    }

    /// Least `s ∈ S` divisible by every element of `S`.
    pub fn max_multiple(&self) -> Option<&RingElement> {
        let ms = self.ring.moduli().expect("finite");
        self.elements.iter().find(|s| {
            let sr = s.residues_slice().expect("finite");
            self.elements
                .iter()
                .all(|t| component_divides(t.residues_slice().expect("finite"), sr, ms))
        })
    }

    /// `S* = {x : xR ∩ S ≠ ∅}`.
    pub fn saturation(&self) -> MultSet {
        let elements = self
            .ring
            .elements()
            .expect("finite ring")
            .into_iter()
            .filter(|x| {
                let ideal = Ideal::principal(&self.ring, x).expect("member");
                self.meets_ideal(&ideal).is_some()
            })
            .collect();
        MultSet { ring: self.ring.clone(), elements }
    }

    /// The kernel `{x : sx = 0 for some s ∈ S}` of `R -> S⁻¹R` and the
    /// quotient realising `S⁻¹R ≅ R / kernel`.
    pub fn localize(&self) -> Result<Localization> {
        let ms = self.ring.moduli().expect("finite");
        let s = self.max_multiple().expect("finite sets have a maximal multiple");
        let sr = s.residues_slice().expect("finite");
        let gens: Vec<u64> = ms.iter().zip(sr).map(|(&n, &x)| n / arith::gcd(x, n)).collect();
        let kernel = Ideal::from_divisors(&self.ring, &gens)?;
        let quotient = crate::ring::quotient_ring(&self.ring, &kernel)?;
        if let Some(target) = quotient.target() {
            for x in &self.elements {
                let y = quotient.project(x).expect("nontrivial");
                if !target.is_unit(&y) {
                    return Err(Error::CrossCheck(format!("{x} is not invertible after localizing")));
                }
            }
        }
        Ok(Localization { kernel, quotient })
    }
}

impl fmt::Display for MultSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// `S⁻¹R` for a finite ring, as a quotient of `R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Localization {
    pub kernel: Ideal,
    pub quotient: QuotientRing,
}

impl Localization {
    pub fn is_trivial(&self) -> bool {
        self.quotient.is_trivial()
    }
}

/// Either kind of multiplicative set, for APIs that accept both.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyMultSet {
    Finite(MultSet),
    Integer(ZMultSet),
}

impl From<MultSet> for AnyMultSet {
    fn from(s: MultSet) -> Self {
        AnyMultSet::Finite(s)
    }
}

impl From<ZMultSet> for AnyMultSet {
    fn from(s: ZMultSet) -> Self {
        AnyMultSet::Integer(s)
    }
}

impl AnyMultSet {
    /// Some element of `S ∩ I`, as a ring element of `I`'s ring.
    pub fn meets_ideal(&self, i: &Ideal) -> Result<Option<RingElement>> {
        match (self, i.integer_generator()) {
            (AnyMultSet::Finite(s), None) => {
                if s.ring() != i.ring() {
                    return Err(Error::RingMismatch {
                        left: s.ring().to_string(),
                        right: i.ring().to_string(),
                    });
                }
                Ok(s.meets_ideal(i).cloned())
            }
            (AnyMultSet::Integer(z), Some(c)) => Ok(z.meets_ideal(c).map(RingElement::Integer)),
            _ => Err(Error::RingMismatch { left: "multiplicative set".into(), right: i.ring().to_string() }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z(n: u64) -> Ring {
        Ring::modular(n).unwrap()
    }

    fn vals(s: &MultSet) -> Vec<u64> {
        s.elements().iter().map(|e| e.residues_slice().unwrap()[0]).collect()
    }

    #[test]
    fn closure_examples() {
        let r = z(12);
        let s = MultSet::closure(&r, &[r.element(2)]).unwrap();
        assert_eq!(vals(&s), [1, 2, 4, 8]);
        // independent iteration of 2^k mod 12
        let mut seen = BTreeSet::from([1u64]);
        let mut x = 1u64;
        for _ in 0..12 {
            x = x * 2 % 12;
            seen.insert(x);
        }
        assert_eq!(seen.into_iter().collect::<Vec<_>>(), vals(&s));

        let r4 = z(4);
        assert_eq!(vals(&MultSet::closure(&r4, &[r4.element(3)]).unwrap()), [1, 3]);
        assert_eq!(vals(&MultSet::one(&z(6)).unwrap()), [1]);
        assert!(MultSet::closure(&Ring::Integers, &[]).is_err());
    }

    #[test]
    fn reductions() {
        let odd = ZMultSet::complement_of_primes(&[2]).unwrap();
        assert_eq!(vals(&odd.reduce(4).unwrap()), [1, 3]);
        assert_eq!(vals(&ZMultSet::NonZero.reduce(4).unwrap()), [0, 1, 2, 3]);
        assert_eq!(vals(&ZMultSet::generated_by([2]).reduce(2).unwrap()), [0, 1]);
        assert_eq!(vals(&ZMultSet::Units.reduce(2).unwrap()), [1]);
        assert_eq!(vals(&ZMultSet::Units.reduce(5).unwrap()), [1, 4]);
        // 5 does not divide 12, so it imposes nothing
        let s = ZMultSet::complement_of_primes(&[2, 5]).unwrap();
        assert_eq!(vals(&s.reduce(12).unwrap()), [1, 3, 5, 7, 9, 11]);
    }

    #[test]
    fn meets_examples() {
        let r4 = z(4);
        let s = MultSet::closure(&r4, &[r4.element(3)]).unwrap();
        assert!(s.meets_ideal(&Ideal::from_divisors(&r4, &[2]).unwrap()).is_none());

        for t in 1..50u32 {
            assert_eq!(ZMultSet::NonZero.meets_ideal(&t.into()), Some(BigInt::from(t)));
        }
        let pow2 = ZMultSet::generated_by([2]);
        assert_eq!(pow2.meets_ideal(&6u32.into()), None);
        assert_eq!(pow2.meets_ideal(&8u32.into()), Some(BigInt::from(8)));
        assert_eq!(ZMultSet::Units.meets_ideal(&2u32.into()), None);
        let odd = ZMultSet::complement_of_primes(&[2]).unwrap();
        assert_eq!(odd.meets_ideal(&9u32.into()), Some(BigInt::from(9)));
        assert_eq!(odd.meets_ideal(&6u32.into()), None);
        assert_eq!(ZMultSet::generated_by([0]).meets_ideal(&0u32.into()), Some(BigInt::zero()));
    }

    #[test]
    fn saturation_examples() {
        let r4 = z(4);
        let s = MultSet::closure(&r4, &[r4.element(3)]).unwrap();
        assert_eq!(s.saturation(), s);

        let sat = ZMultSet::generated_by([4]).saturation();
        for x in -40i64..=40 {
            let expect = x != 0 && (x.unsigned_abs()).is_power_of_two();
            assert_eq!(sat.contains(&BigInt::from(x)), expect, "x = {x}");
        }
        let odd = ZMultSet::complement_of_primes(&[2]).unwrap();
        assert_eq!(odd.saturation(), odd);
        assert_eq!(ZMultSet::generated_by([1]).saturation(), ZMultSet::Units);
    }

    #[test]
    fn max_multiple_examples() {
        let r4 = z(4);
        let s = MultSet::closure(&r4, &[r4.element(3)]).unwrap();
        // 1 is the least witness; 3 is a witness as well.
        assert_eq!(s.max_multiple(), Some(&r4.element(1)));
        assert!(s.elements().iter().all(|t| crate::ring::divides(&r4, t, &r4.element(3)).unwrap()));

        let r12 = z(12);
        let s = MultSet::closure(&r12, &[r12.element(2)]).unwrap();
        assert_eq!(s.max_multiple(), Some(&r12.element(4)));
        assert!((0..12).any(|x| 8 * x % 12 == 4));

        assert_eq!(ZMultSet::NonZero.max_multiple(), None);
        assert_eq!(ZMultSet::Units.max_multiple(), Some(BigInt::one()));
        assert_eq!(ZMultSet::generated_by([2]).max_multiple(), None);
        assert_eq!(ZMultSet::generated_by([1, -1]).max_multiple(), Some(BigInt::one()));
    }

    #[test]
    fn localization_examples() {
        let r12 = z(12);
        let s = MultSet::closure(&r12, &[r12.element(2)]).unwrap();
        let loc = s.localize().unwrap();
        assert_eq!(loc.kernel.divisors(), Some(&[3][..]));
        assert_eq!(loc.quotient.target(), Some(&z(3)));
        // kernel by scanning: x with s·x = 0 for some s
        for x in 0..12u64 {
            let killed = vals(&s).iter().any(|&t| t * x % 12 == 0);
            assert_eq!(killed, loc.kernel.contains(&r12.element(x as i64)));
        }

        let r4 = z(4);
        let loc = MultSet::units(&r4).unwrap().localize().unwrap();
        assert!(loc.kernel.is_zero());
        assert_eq!(loc.quotient.target(), Some(&r4));

        let r6 = z(6);
        let with_zero = MultSet::closure(&r6, &[r6.element(0)]).unwrap();
        assert!(with_zero.localize().unwrap().is_trivial());
    }

    #[test]
    fn generated_membership() {
        let s = ZMultSet::generated_by([2, 3]);
        for x in -100i64..=100 {
            let mut y = x;
            if y <= 0 {
                assert!(!s.contains(&BigInt::from(x)));
                continue;
            }
            while y % 2 == 0 {
                y /= 2;
            }
            while y % 3 == 0 {
                y /= 3;
            }
            assert_eq!(s.contains(&BigInt::from(x)), y == 1, "x = {x}");
        }
        let neg = ZMultSet::generated_by([-2]);
        assert!(neg.contains(&BigInt::from(-8)));
        assert!(neg.contains(&BigInt::from(4)));
        assert!(!neg.contains(&BigInt::from(-4)));
        assert!(!neg.contains(&BigInt::from(-1)));
    }

    fn closure_strategy() -> impl Strategy<Value = (u64, Vec<u64>)> {
        (2u64..40).prop_flat_map(|n| (Just(n), proptest::collection::vec(0..n, 0..4)))
    }

    proptest! {
        #[test]
        fn closure_is_closed((n, gens) in closure_strategy()) {
            let r = z(n);
            let gens: Vec<RingElement> = gens.iter().map(|&g| r.element(g as i64)).collect();
            let s = MultSet::closure(&r, &gens).unwrap();
            prop_assert!(s.contains(&r.one()));
            for g in &gens {
                prop_assert!(s.contains(g));
            }
            for a in s.elements() {
                for b in s.elements() {
                    prop_assert!(s.contains(&r.mul(a, b)));
                }
            }
            prop_assert!(s.max_multiple().is_some());
            let w = s.max_multiple().unwrap();
            for t in s.elements() {
                prop_assert!(crate::ring::divides(&r, t, w).unwrap());
            }
        }

        #[test]
        fn saturation_idempotent((n, gens) in closure_strategy()) {
            let r = z(n);
            let gens: Vec<RingElement> = gens.iter().map(|&g| r.element(g as i64)).collect();
            let s = MultSet::closure(&r, &gens).unwrap();
            let sat = s.saturation();
            prop_assert!(s.is_subset(&sat));
            prop_assert_eq!(sat.saturation(), sat.clone());
            prop_assert!(sat.is_closed());
        }

        #[test]
        fn reduce_is_image(n in 2u64..30, g in proptest::collection::vec(-12i64..12, 0..3), p in 0usize..4) {
            let primes = [2u64, 3, 5, 7];
            let presentations = [
                ZMultSet::Units,
                ZMultSet::NonZero,
                ZMultSet::complement_of_primes(&primes[..=p]).unwrap(),
                ZMultSet::GeneratedBy(g.iter().map(|&x| BigInt::from(x)).collect()),
            ];
            for pres in &presentations {
                let reduced = pres.reduce(n).unwrap();
                let r = reduced.ring().clone();
                // every sampled member of S lands in the image, and products
                // of images stay inside (monoid map)
                let members: Vec<BigInt> = sample_members(pres, n);
                for a in &members {
                    prop_assert!(reduced.contains(&r.element_big(a)), "{} missing {}", pres, a);
                }
                for a in members.iter().take(40) {
                    for b in members.iter().rev().take(40) {
                        let ab = a * b;
                        prop_assert_eq!(r.element_big(&ab), r.mul(&r.element_big(a), &r.element_big(b)));
                    }
                }
                // every residue of the image is hit by a sampled member
                let hit: BTreeSet<RingElement> = members.iter().map(|m| r.element_big(m)).collect();
                for x in reduced.elements() {
                    prop_assert!(hit.contains(x), "{} not hit for {}", x, pres);
                }
            }
        }
    }

    fn sample_members(pres: &ZMultSet, n: u64) -> Vec<BigInt> {
        match pres {
            ZMultSet::GeneratedBy(gs) => {
                let mut out = vec![BigInt::one()];
                for _ in 0..(2 * n as usize) {
                    let mut next = out.clone();
                    for x in &out {
                        for g in gs {
                            next.push(x * g);
                        }
                    }
                    next.sort();
                    next.dedup();
                    next.retain(|x| x.magnitude().bits() < 400);
                    if next.len() == out.len() {
                        break;
                    }
                    out = next;
                    if out.len() > 4000 {
                        break;
                    }
                }
                out
            }
            _ => {
                let bound = 8 * n as i64 * 7 * 5 * 3;
                (-bound..=bound).map(BigInt::from).filter(|x| pres.contains(x)).collect()
            }
        }
    }
}
