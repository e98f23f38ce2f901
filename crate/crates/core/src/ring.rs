//! Supported base rings: the integers, `Z/n`, and finite products of modular
//! rings. Every ring in this family is a principal ideal ring, so an ideal is
//! stored as one canonical generator per coordinate.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{self, MAX_MODULUS};
use crate::error::{Error, Result};

/// A commutative ring with identity from the supported family.
///
/// Products are flat: every component is a modular ring, and a product with a
/// single component is normalised to [`Ring::Modular`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Ring {
    Integers,
    Modular(u64),
    Product(Vec<u64>),
}

/// An element of a [`Ring`]. Finite rings store reduced residues, one per
/// component; equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RingElement {
    Integer(BigInt),
    Residues(Vec<u64>),
}

fn check_modulus(n: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidModulus(n.to_string()));
    }
    if n > MAX_MODULUS {
        return Err(Error::ModulusTooLarge(n));
    }
    Ok(())
}

impl Ring {
    pub fn modular(n: u64) -> Result<Ring> {
        check_modulus(n)?;
        Ok(Ring::Modular(n))
    }

    /// Ring with the given component moduli: one modulus gives `Z/n`, several
    /// give their product.
    pub fn from_moduli(moduli: &[u64]) -> Result<Ring> {
        for &n in moduli {
            check_modulus(n)?;
        }
        match moduli {
            [] => Err(Error::TrivialRing),
            [n] => Ok(Ring::Modular(*n)),
            _ => Ok(Ring::Product(moduli.to_vec())),
        }
    }

    /// Flattened product of finite rings.
    pub fn product(parts: &[Ring]) -> Result<Ring> {
        let mut moduli = Vec::new();
        for part in parts {
            match part.moduli() {
                Some(m) => moduli.extend_from_slice(m),
                None => return Err(Error::InfiniteRing("product")),
            }
        }
        Ring::from_moduli(&moduli)
    }

    pub fn is_finite(&self) -> bool {
        !matches!(self, Ring::Integers)
    }

    /// Component moduli of a finite ring.
    pub fn moduli(&self) -> Option<&[u64]> {
        match self {
            Ring::Integers => None,
            Ring::Modular(n) => Some(std::slice::from_ref(n)),
            Ring::Product(ns) => Some(ns),
        }
    }

    fn finite_moduli(&self, op: &'static str) -> Result<&[u64]> {
        self.moduli().ok_or(Error::InfiniteRing(op))
    }

    pub fn order(&self) -> Option<u128> {
        self.moduli()?
            .iter()
            .try_fold(1u128, |acc, &n| acc.checked_mul(n as u128))
    }

    pub fn one(&self) -> RingElement {
        match self.moduli() {
            None => RingElement::Integer(BigInt::one()),
            Some(ms) => RingElement::Residues(vec![1; ms.len()]),
        }
    }

    pub fn zero(&self) -> RingElement {
        match self.moduli() {
            None => RingElement::Integer(BigInt::zero()),
            Some(ms) => RingElement::Residues(vec![0; ms.len()]),
        }
    }

    /// Image of an integer under the canonical map `Z -> R`.
    pub fn element(&self, v: i64) -> RingElement {
        self.element_big(&BigInt::from(v))
    }

    pub fn element_big(&self, v: &BigInt) -> RingElement {
        match self.moduli() {
            None => RingElement::Integer(v.clone()),
            Some(ms) => RingElement::Residues(ms.iter().map(|&n| arith::big_mod(v, n)).collect()),
        }
    }

    /// Element from explicit residues; each must already be reduced.
    pub fn residues(&self, r: Vec<u64>) -> Result<RingElement> {
        let e = RingElement::Residues(r);
        self.check(&e)?;
        Ok(e)
    }

    pub fn contains(&self, a: &RingElement) -> bool {
        match (self.moduli(), a) {
            (None, RingElement::Integer(_)) => true,
            (Some(ms), RingElement::Residues(r)) => {
                ms.len() == r.len() && ms.iter().zip(r).all(|(n, x)| x < n)
            }
            _ => false,
        }
    }

    pub fn check(&self, a: &RingElement) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::ElementRingMismatch {
                element: a.to_string(),
                ring: self.to_string(),
            })
        }
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        match (a, b, self.moduli()) {
            (RingElement::Integer(x), RingElement::Integer(y), None) => RingElement::Integer(x * y),
            (RingElement::Residues(x), RingElement::Residues(y), Some(ms)) => RingElement::Residues(
                ms.iter()
                    .zip(x.iter().zip(y))
                    .map(|(&n, (&a, &b))| arith::mul_mod(a, b, n))
                    .collect(),
            ),
            _ => panic!("mul: element/ring mismatch in {self}"),
        }
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> RingElement {
        match (a, b, self.moduli()) {
            (RingElement::Integer(x), RingElement::Integer(y), None) => RingElement::Integer(x + y),
            (RingElement::Residues(x), RingElement::Residues(y), Some(ms)) => RingElement::Residues(
                ms.iter()
                    .zip(x.iter().zip(y))
                    .map(|(&n, (&a, &b))| ((a as u128 + b as u128) % n as u128) as u64)
                    .collect(),
            ),
            _ => panic!("add: element/ring mismatch in {self}"),
        }
    }

    /// All elements in canonical (coordinate-lexicographic) order.
    pub fn elements(&self) -> Result<Vec<RingElement>> {
        let ms = self.finite_moduli("elements")?;
        let order = self.order().filter(|&o| o <= 1 << 24).ok_or_else(|| Error::TooLarge {
            order: format!("{:?}", self.order()),
            bound: 1 << 24,
        })?;
        let mut out = Vec::with_capacity(order as usize);
        let mut cur = vec![0u64; ms.len()];
        loop {
            out.push(RingElement::Residues(cur.clone()));
            let mut i = ms.len();
            loop {
                if i == 0 {
                    return Ok(out);
                }
                i -= 1;
                cur[i] += 1;
                if cur[i] < ms[i] {
                    break;
                }
                cur[i] = 0;
            }
        }
    }

    pub fn is_unit(&self, a: &RingElement) -> bool {
        match (a, self.moduli()) {
            (RingElement::Integer(x), None) => x.magnitude().is_one(),
            (RingElement::Residues(r), Some(ms)) => {
                ms.iter().zip(r).all(|(&n, &x)| arith::gcd(x, n) == 1)
            }
            _ => false,
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => write!(f, "Z"),
            Ring::Modular(n) => write!(f, "Z/{n}"),
            Ring::Product(ns) => {
                for (i, n) in ns.iter().enumerate() {
                    if i > 0 {
                        write!(f, " x ")?;
                    }
                    write!(f, "Z/{n}")?;
                }
                Ok(())
            }
        }
    }
}

impl RingElement {
    pub fn residues_slice(&self) -> Option<&[u64]> {
        match self {
            RingElement::Residues(r) => Some(r),
            RingElement::Integer(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            RingElement::Integer(x) => x.is_zero(),
            RingElement::Residues(r) => r.iter().all(|&x| x == 0),
        }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingElement::Integer(x) => write!(f, "{x}"),
            RingElement::Residues(r) if r.len() == 1 => write!(f, "{}", r[0]),
            RingElement::Residues(r) => {
                write!(f, "(")?;
                for (i, x) in r.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// Canonical generator data of an ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IdealGenerator {
    /// `cZ` with `c >= 0`.
    Integer(BigUint),
    /// One divisor `d | n` per component; `d = n` encodes the zero ideal.
    Divisors(Vec<u64>),
}

/// An ideal of a supported ring in canonical form: two ideals are equal iff
/// their stored generators are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Ideal {
    ring: Ring,
    generator: IdealGenerator,
}

impl Ideal {
    pub fn zero(ring: &Ring) -> Ideal {
        let generator = match ring.moduli() {
            None => IdealGenerator::Integer(BigUint::zero()),
            Some(ms) => IdealGenerator::Divisors(ms.to_vec()),
        };
        Ideal { ring: ring.clone(), generator }
    }

    pub fn whole(ring: &Ring) -> Ideal {
        let generator = match ring.moduli() {
            None => IdealGenerator::Integer(BigUint::one()),
            Some(ms) => IdealGenerator::Divisors(vec![1; ms.len()]),
        };
        Ideal { ring: ring.clone(), generator }
    }

    /// `cZ` over the integers.
    pub fn integer(c: BigUint) -> Ideal {
        Ideal { ring: Ring::Integers, generator: IdealGenerator::Integer(c) }
    }

    /// Ideal of a finite ring from per-component generators (normalised by
    /// `gcd` with the modulus).
    pub fn from_divisors(ring: &Ring, gens: &[u64]) -> Result<Ideal> {
        let ms = ring.finite_moduli("from_divisors")?;
        if gens.len() != ms.len() {
            return Err(Error::DimensionMismatch { expected: ms.len(), got: gens.len() });
        }
        Ok(Ideal {
            ring: ring.clone(),
            generator: IdealGenerator::Divisors(
                ms.iter().zip(gens).map(|(&n, &g)| arith::gcd(n, g)).collect(),
            ),
        })
    }

    pub fn principal(ring: &Ring, a: &RingElement) -> Result<Ideal> {
        ideal_from_generators(ring, std::slice::from_ref(a))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generator(&self) -> &IdealGenerator {
        &self.generator
    }

    /// Per-component generators of an ideal of a finite ring.
    pub fn divisors(&self) -> Option<&[u64]> {
        match &self.generator {
            IdealGenerator::Divisors(d) => Some(d),
            IdealGenerator::Integer(_) => None,
        }
    }

    pub fn integer_generator(&self) -> Option<&BigUint> {
        match &self.generator {
            IdealGenerator::Integer(c) => Some(c),
            IdealGenerator::Divisors(_) => None,
        }
    }

    /// The generator as a ring element.
    pub fn generator_element(&self) -> RingElement {
        match (&self.generator, self.ring.moduli()) {
            (IdealGenerator::Integer(c), _) => RingElement::Integer(BigInt::from(c.clone())),
            (IdealGenerator::Divisors(d), Some(ms)) => {
                RingElement::Residues(d.iter().zip(ms).map(|(&d, &n)| d % n).collect())
            }
            (IdealGenerator::Divisors(_), None) => unreachable!("finite ideal over Z"),
        }
    }

    pub fn is_zero(&self) -> bool {
        match (&self.generator, self.ring.moduli()) {
            (IdealGenerator::Integer(c), _) => c.is_zero(),
            (IdealGenerator::Divisors(d), Some(ms)) => d == ms,
            _ => false,
        }
    }

    pub fn is_whole(&self) -> bool {
        match &self.generator {
            IdealGenerator::Integer(c) => c.is_one(),
            IdealGenerator::Divisors(d) => d.iter().all(|&x| x == 1),
        }
    }

    pub fn contains(&self, a: &RingElement) -> bool {
        match (&self.generator, a) {
            (IdealGenerator::Integer(c), RingElement::Integer(x)) => {
                if c.is_zero() {
                    x.is_zero()
                } else {
                    (x.magnitude() % c).is_zero()
                }
            }
            (IdealGenerator::Divisors(d), RingElement::Residues(r)) => {
                d.len() == r.len() && d.iter().zip(r).all(|(&d, &x)| x % d == 0)
            }
            _ => false,
        }
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &Ideal) -> bool {
        if self.ring != other.ring {
            return false;
        }
        other.contains(&self.generator_element())
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.generator, self.ring.moduli()) {
            (IdealGenerator::Integer(c), _) => write!(f, "{c}Z"),
            (IdealGenerator::Divisors(d), Some(ms)) if d.len() == 1 => {
                write!(f, "{}Z/{}", d[0], ms[0])
            }
            (IdealGenerator::Divisors(d), Some(ms)) => {
                write!(f, "(")?;
                for (i, (d, n)) in d.iter().zip(ms).enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{d}Z/{n}")?;
                }
                write!(f, ")")
            }
            _ => write!(f, "?"),
        }
    }
}

fn same_ring(i: &Ideal, j: &Ideal) -> Result<()> {
    if i.ring != j.ring {
        return Err(Error::RingMismatch { left: i.ring.to_string(), right: j.ring.to_string() });
    }
    Ok(())
}

/// Canonical form of the ideal generated by `gens`; the empty list gives the
/// zero ideal.
pub fn ideal_from_generators(ring: &Ring, gens: &[RingElement]) -> Result<Ideal> {
    for g in gens {
        ring.check(g)?;
    }
    match ring.moduli() {
        None => {
            let c = gens.iter().fold(BigUint::zero(), |acc, g| match g {
                RingElement::Integer(x) => acc.gcd(x.magnitude()),
                RingElement::Residues(_) => unreachable!(),
            });
            Ok(Ideal::integer(c))
        }
        Some(ms) => {
            let mut d = ms.to_vec();
            for g in gens {
                let r = g.residues_slice().expect("checked");
                for (dc, &x) in d.iter_mut().zip(r) {
                    *dc = arith::gcd(*dc, x);
                }
            }
            Ok(Ideal { ring: ring.clone(), generator: IdealGenerator::Divisors(d) })
        }
    }
}

pub fn ideal_product(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    same_ring(i, j)?;
    let generator = match (&i.generator, &j.generator) {
        (IdealGenerator::Integer(a), IdealGenerator::Integer(b)) => IdealGenerator::Integer(a * b),
        (IdealGenerator::Divisors(a), IdealGenerator::Divisors(b)) => {
            let ms = i.ring.moduli().expect("finite");
            IdealGenerator::Divisors(
                ms.iter()
                    .zip(a.iter().zip(b))
                    .map(|(&n, (&x, &y))| {
                        let prod = x as u128 * y as u128;
                        (prod.gcd(&(n as u128))) as u64
                    })
                    .collect(),
            )
        }
        _ => unreachable!("ring checked"),
    };
    Ok(Ideal { ring: i.ring.clone(), generator })
}

pub fn ideal_intersect(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    same_ring(i, j)?;
    let generator = match (&i.generator, &j.generator) {
        (IdealGenerator::Integer(a), IdealGenerator::Integer(b)) => IdealGenerator::Integer(a.lcm(b)),
        (IdealGenerator::Divisors(a), IdealGenerator::Divisors(b)) => IdealGenerator::Divisors(
            a.iter()
                .zip(b)
                .map(|(&x, &y)| arith::lcm(x, y).expect("lcm of divisors of n divides n"))
                .collect(),
        ),
        _ => unreachable!("ring checked"),
    };
    Ok(Ideal { ring: i.ring.clone(), generator })
}

pub fn ideal_sum(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    same_ring(i, j)?;
    let generator = match (&i.generator, &j.generator) {
        (IdealGenerator::Integer(a), IdealGenerator::Integer(b)) => IdealGenerator::Integer(a.gcd(b)),
        (IdealGenerator::Divisors(a), IdealGenerator::Divisors(b)) => {
            IdealGenerator::Divisors(a.iter().zip(b).map(|(&x, &y)| arith::gcd(x, y)).collect())
        }
        _ => unreachable!("ring checked"),
    };
    Ok(Ideal { ring: i.ring.clone(), generator })
}

/// `t | s` in `R`, i.e. `s ∈ tR`.
pub fn divides(ring: &Ring, t: &RingElement, s: &RingElement) -> Result<bool> {
    ring.check(t)?;
    ring.check(s)?;
    Ok(Ideal::principal(ring, t)?.contains(s))
}

/// The invertible elements of a finite ring, in canonical order.
pub fn units(ring: &Ring) -> Result<Vec<RingElement>> {
    let ms = ring.finite_moduli("units")?;
    let per: Vec<Vec<u64>> = ms
        .iter()
        .map(|&n| (1..n).filter(|&x| arith::gcd(x, n) == 1).collect())
        .collect();
    Ok(cartesian(&per).into_iter().map(RingElement::Residues).collect())
}

fn cartesian(per: &[Vec<u64>]) -> Vec<Vec<u64>> {
    per.iter().fold(vec![Vec::new()], |acc, choices| {
        acc.iter()
            .flat_map(|prefix| {
                choices.iter().map(move |&c| {
                    let mut v = prefix.clone();
                    v.push(c);
                    v
                })
            })
            .collect()
    })
}

/// Every ideal of a finite ring, ordered by generator tuple.
pub fn all_ideals(ring: &Ring) -> Result<Vec<Ideal>> {
    let ms = ring.finite_moduli("all_ideals")?;
    let per: Vec<Vec<u64>> = ms.iter().map(|&n| arith::divisors(n)).collect();
    Ok(cartesian(&per)
        .into_iter()
        .map(|d| Ideal { ring: ring.clone(), generator: IdealGenerator::Divisors(d) })
        .collect())
}

/// Prime ideals of a finite ring: a prime of one coordinate, the full ring in
/// the others.
pub fn prime_ideals(ring: &Ring) -> Result<Vec<Ideal>> {
    let ms = ring.finite_moduli("prime_ideals")?;
    let mut out = Vec::new();
    for (c, &n) in ms.iter().enumerate() {
        for p in arith::prime_divisors(n) {
            let mut d = vec![1u64; ms.len()];
            d[c] = p;
            out.push(Ideal { ring: ring.clone(), generator: IdealGenerator::Divisors(d) });
        }
    }
    Ok(out)
}

/// Maximal ideals; finite rings are artinian, so these are the primes.
pub fn maximal_ideals(ring: &Ring) -> Result<Vec<Ideal>> {
    prime_ideals(ring)
}

/// `R/I` for a finite ring, with the canonical projection. Components whose
/// quotient collapses are dropped; if all collapse the quotient is flagged
/// trivial instead of producing the zero ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientRing {
    source: Ring,
    kept: Vec<usize>,
    target: Option<Ring>,
}

impl QuotientRing {
    pub fn source(&self) -> &Ring {
        &self.source
    }

    pub fn target(&self) -> Option<&Ring> {
        self.target.as_ref()
    }

    pub fn is_trivial(&self) -> bool {
        self.target.is_none()
    }

    /// Source components that survive in the quotient.
    pub fn kept_components(&self) -> &[usize] {
        &self.kept
    }

    pub fn project(&self, a: &RingElement) -> Option<RingElement> {
        let target = self.target.as_ref()?;
        let r = a.residues_slice()?;
        let tm = target.moduli().expect("finite");
        Some(RingElement::Residues(
            self.kept.iter().zip(tm).map(|(&c, &m)| r[c] % m).collect(),
        ))
    }

    pub fn project_ideal(&self, i: &Ideal) -> Option<Ideal> {
        let target = self.target.as_ref()?;
        let d = i.divisors()?;
        let tm = target.moduli().expect("finite");
        Some(Ideal {
            ring: target.clone(),
            generator: IdealGenerator::Divisors(
                self.kept.iter().zip(tm).map(|(&c, &m)| arith::gcd(d[c], m)).collect(),
            ),
        })
    }
}

pub fn quotient_ring(ring: &Ring, i: &Ideal) -> Result<QuotientRing> {
    ring.finite_moduli("quotient_ring")?;
    if i.ring() != ring {
        return Err(Error::RingMismatch { left: ring.to_string(), right: i.ring().to_string() });
    }
    let d = i.divisors().expect("finite");
    let kept: Vec<usize> = (0..d.len()).filter(|&c| d[c] > 1).collect();
    let moduli: Vec<u64> = kept.iter().map(|&c| d[c]).collect();
    let target = if moduli.is_empty() { None } else { Some(Ring::from_moduli(&moduli)?) };
    Ok(QuotientRing { source: ring.clone(), kept, target })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64) -> Ring {
        Ring::modular(n).unwrap()
    }

    fn el(r: &Ring, v: i64) -> RingElement {
        r.element(v)
    }

    #[test]
    fn zero_ring_rejected() {
        assert!(Ring::modular(1).is_err());
        assert!(Ring::modular(0).is_err());
        assert!(Ring::from_moduli(&[]).is_err());
    }

    #[test]
    fn products_flatten() {
        let r = Ring::product(&[z(4), Ring::product(&[z(9), z(2)]).unwrap()]).unwrap();
        assert_eq!(r, Ring::Product(vec![4, 9, 2]));
        assert_eq!(Ring::product(&[z(5)]).unwrap(), Ring::Modular(5));
        assert!(Ring::product(&[Ring::Integers, z(2)]).is_err());
    }

    #[test]
    fn generators_examples() {
        let zz = Ring::Integers;
        let i = ideal_from_generators(&zz, &[el(&zz, 6), el(&zz, 10)]).unwrap();
        assert_eq!(i, Ideal::integer(2u32.into()));

        let r12 = z(12);
        let i = ideal_from_generators(&r12, &[el(&r12, 8)]).unwrap();
        assert_eq!(i.divisors(), Some(&[4][..]));

        let p = Ring::product(&[z(4), z(9)]).unwrap();
        let g = p.residues(vec![2, 3]).unwrap();
        let i = ideal_from_generators(&p, &[g]).unwrap();
        assert_eq!(i.divisors(), Some(&[2, 3][..]));

        assert!(ideal_from_generators(&r12, &[]).unwrap().is_zero());
        assert!(ideal_from_generators(&r12, &[el(&p, 1)]).is_err());
    }

    #[test]
    fn products_of_ideals() {
        let zz = Ring::Integers;
        let two = Ideal::integer(2u32.into());
        let three = Ideal::integer(3u32.into());
        assert_eq!(ideal_product(&two, &three).unwrap(), Ideal::integer(6u32.into()));

        let r4 = z(4);
        let i = Ideal::from_divisors(&r4, &[2]).unwrap();
        assert!(ideal_product(&i, &i).unwrap().is_zero());

        // 2·Z/6 squared: the ideal generated by 4 in Z/6, checked against
        // the set {a·b : a, b ∈ 2Z/6} closed under addition.
        let r6 = z(6);
        let i = Ideal::from_divisors(&r6, &[2]).unwrap();
        let sq = ideal_product(&i, &i).unwrap();
        assert_eq!(sq.divisors(), Some(&[2][..]));
        let mut products: Vec<u64> = Vec::new();
        for a in (0..6).filter(|a| a % 2 == 0) {
            for b in (0..6).filter(|b| b % 2 == 0) {
                products.push(a * b % 6);
            }
        }
        for x in 0..6u64 {
            let generated = (0..6u64).any(|k| products.iter().any(|&p| p * k % 6 == x));
            assert_eq!(generated, sq.contains(&el(&r6, x as i64)));
        }
        let _ = zz;
    }

    #[test]
    fn intersections() {
        let four = Ideal::integer(4u32.into());
        let six = Ideal::integer(6u32.into());
        assert_eq!(ideal_intersect(&four, &six).unwrap(), Ideal::integer(12u32.into()));
        let r12 = z(12);
        let a = Ideal::from_divisors(&r12, &[2]).unwrap();
        let b = Ideal::from_divisors(&r12, &[3]).unwrap();
        assert_eq!(ideal_intersect(&a, &b).unwrap().divisors(), Some(&[6][..]));
        assert_eq!(ideal_intersect(&a, &Ideal::whole(&r12)).unwrap(), a);
        assert!(ideal_intersect(&a, &Ideal::whole(&z(6))).is_err());
    }

    #[test]
    fn divisibility() {
        let r12 = z(12);
        assert!(divides(&r12, &el(&r12, 8), &el(&r12, 4)).unwrap());
        // scan 8·x mod 12 independently
        assert!((0..12).any(|x| 8 * x % 12 == 4));
        let zz = Ring::Integers;
        assert!(!divides(&zz, &el(&zz, 2), &el(&zz, 5)).unwrap());
        for v in 0..12 {
            assert!(divides(&r12, &r12.one(), &el(&r12, v)).unwrap());
        }
    }

    #[test]
    fn unit_groups() {
        let show = |r: &Ring| units(r).unwrap().iter().map(|u| u.to_string()).collect::<Vec<_>>();
        assert_eq!(show(&z(4)), ["1", "3"]);
        assert_eq!(show(&z(12)), ["1", "5", "7", "11"]);
        assert_eq!(show(&Ring::product(&[z(2), z(3)]).unwrap()), ["(1,1)", "(1,2)"]);
        assert!(matches!(units(&Ring::Integers), Err(Error::InfiniteRing(_))));
    }

    #[test]
    fn primes_and_maximals() {
        let show = |r: &Ring| prime_ideals(r).unwrap().iter().map(|u| u.to_string()).collect::<Vec<_>>();
        assert_eq!(show(&z(12)), ["2Z/12", "3Z/12"]);
        assert_eq!(show(&z(4)), ["2Z/4"]);
        let p = Ring::product(&[z(2), z(2)]).unwrap();
        assert_eq!(show(&p), ["(2Z/2, 1Z/2)", "(1Z/2, 2Z/2)"]);
        assert_eq!(prime_ideals(&p).unwrap(), maximal_ideals(&p).unwrap());
        assert!(prime_ideals(&Ring::Integers).is_err());
    }

    #[test]
    fn quotients() {
        let r12 = z(12);
        let q = quotient_ring(&r12, &Ideal::from_divisors(&r12, &[3]).unwrap()).unwrap();
        assert_eq!(q.target(), Some(&z(3)));
        assert_eq!(q.project(&el(&r12, 7)), Some(el(&z(3), 1)));
        let r4 = z(4);
        let q = quotient_ring(&r4, &Ideal::zero(&r4)).unwrap();
        assert_eq!(q.target(), Some(&r4));
        let q = quotient_ring(&r12, &Ideal::whole(&r12)).unwrap();
        assert!(q.is_trivial());
        let p = Ring::product(&[z(4), z(6)]).unwrap();
        let q = quotient_ring(&p, &Ideal::from_divisors(&p, &[1, 3]).unwrap()).unwrap();
        assert_eq!(q.target(), Some(&z(3)));
        assert_eq!(q.kept_components(), &[1]);
    }

    #[test]
    fn ideal_count_is_divisor_count() {
        for n in 2..=64u64 {
            let r = z(n);
            let elems = r.elements().unwrap();
            let mut distinct = std::collections::BTreeSet::new();
            for a in &elems {
                distinct.insert(Ideal::principal(&r, a).unwrap());
            }
            assert_eq!(distinct.len(), arith::divisors(n).len(), "n = {n}");
            assert_eq!(all_ideals(&r).unwrap().len(), distinct.len());
        }
    }

    #[test]
    fn units_closed_under_multiplication() {
        for n in 2..=30u64 {
            let r = z(n);
            let us = units(&r).unwrap();
            assert!(us.contains(&r.one()));
            for a in &us {
                for b in &us {
                    assert!(us.contains(&r.mul(a, b)));
                }
            }
        }
    }
}
