//! Small exact integer helpers: gcd/lcm, extended Euclid, trial-division
//! factoring. Inputs are desk-scale, so factoring never goes beyond trial
//! division.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

/// Largest modulus accepted for a finite ring. Lattice reductions multiply two
/// reduced entries in `i128`, which stays exact below this bound.
pub const MAX_MODULUS: u64 = 1 << 62;

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// `lcm`, `None` on overflow. `lcm(0, x) = 0`.
pub fn lcm(a: u64, b: u64) -> Option<u64> {
    if a == 0 || b == 0 {
        return Some(0);
    }
    (a / gcd(a, b)).checked_mul(b)
}

pub fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

/// Extended Euclid on signed values: returns `(g, x, y)` with `x*a + y*b = g`,
/// `g >= 0`.
pub fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r.div_euclid(r);
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorisation by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// All positive divisors of `n >= 1`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut divs = vec![1u64];
    for (p, e) in factorize(n) {
        let current = divs.clone();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            divs.extend(current.iter().map(|d| d * pk));
        }
    }
    divs.sort_unstable();
    divs
}

pub fn valuation(mut n: u64, p: u64) -> u32 {
    let mut v = 0;
    while n != 0 && n.is_multiple_of(p) {
        n /= p;
        v += 1;
    }
    v
}

/// Prime support of a nonzero big integer by trial division.
pub fn big_prime_support(n: &BigUint) -> Vec<BigUint> {
    let mut n = n.clone();
    let mut out = Vec::new();
    if n.is_zero() {
        return out;
    }
    let mut d = BigUint::from(2u32);
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            while (&n % &d).is_zero() {
                n /= &d;
            }
            out.push(d.clone());
        }
        d += 1u32;
    }
    if n > BigUint::one() {
        out.push(n);
    }
    out
}

/// Residue of a signed big integer in `[0, n)`.
pub fn big_mod(x: &BigInt, n: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(n));
    u64::try_from(r).expect("residue fits the modulus")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn egcd_bezout() {
        for a in -20i128..20 {
            for b in -20i128..20 {
                let (g, x, y) = egcd(a, b);
                assert_eq!(x * a + y * b, g);
                assert_eq!(g as u64, gcd(a.unsigned_abs() as u64, b.unsigned_abs() as u64));
            }
        }
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(16), vec![1, 2, 4, 8, 16]);
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
    }

    #[test]
    fn big_support() {
        let s = big_prime_support(&BigUint::from(360u32));
        assert_eq!(s, vec![2u32.into(), 3u32.into(), 5u32.into()]);
        assert_eq!(big_mod(&BigInt::from(-3), 4), 1);
    }
}
