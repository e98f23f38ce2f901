//! The rank-one free module `Z` over `Z`, handled through closed forms.
//!
//! | operator | value |
//! |---|---|
//! | `Ann(tZ)` | `0` for `t > 0`, `Z` for `t = 0` |
//! | `(0 :_Z cZ)` | `0` for `c > 0`, `Z` for `c = 0` |
//! | `(tZ :_Z cZ)` | `(t / gcd(t, c))Z`, and `Z` for `c = 0` |
//! | `(tZ :_R kZ)` | `(t / gcd(t, k))Z`, and `Z` for `k = 0` |

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::Ideal;

/// The submodule `tZ` of `Z`, `t >= 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ZSubmodule(BigUint);

impl ZSubmodule {
    pub fn new(t: BigUint) -> ZSubmodule {
        ZSubmodule(t)
    }

    pub fn from_i64(t: i64) -> Result<ZSubmodule> {
        if t < 0 {
            return Err(Error::NegativeInput(t.to_string()));
        }
        Ok(ZSubmodule(BigUint::from(t as u64)))
    }

    pub fn from_signed(t: &BigInt) -> Result<ZSubmodule> {
        t.to_biguint().map(ZSubmodule).ok_or_else(|| Error::NegativeInput(t.to_string()))
    }

    pub fn whole() -> ZSubmodule {
        ZSubmodule(BigUint::one())
    }

    pub fn zero() -> ZSubmodule {
        ZSubmodule(BigUint::zero())
    }

    pub fn generator(&self) -> &BigUint {
        &self.0
    }

    pub fn is_subset(&self, other: &ZSubmodule) -> bool {
        if self.0.is_zero() {
            return true;
        }
        !other.0.is_zero() && (&self.0 % &other.0).is_zero()
    }

    pub fn sum(&self, other: &ZSubmodule) -> ZSubmodule {
        ZSubmodule(self.0.gcd(&other.0))
    }

    pub fn intersect(&self, other: &ZSubmodule) -> ZSubmodule {
        ZSubmodule(self.0.lcm(&other.0))
    }
}

impl fmt::Display for ZSubmodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}Z", self.0)
    }
}

fn quotient_gen(t: &BigUint, c: &BigUint) -> BigUint {
    if c.is_zero() {
        return BigUint::one();
    }
    if t.is_zero() {
        return BigUint::zero();
    }
    t / t.gcd(c)
}

/// `Ann_Z(tZ)`.
pub fn annihilator(n: &ZSubmodule) -> Ideal {
    Ideal::integer(if n.0.is_zero() { BigUint::one() } else { BigUint::zero() })
}

/// `(N :_Z I)`.
pub fn colon_into(n: &ZSubmodule, i: &Ideal) -> ZSubmodule {
    let c = i.integer_generator().expect("ideal of Z");
    ZSubmodule(quotient_gen(&n.0, c))
}

/// `(N :_R K)`.
pub fn colon_ring(n: &ZSubmodule, k: &ZSubmodule) -> Ideal {
    Ideal::integer(quotient_gen(&n.0, &k.0))
}

/// `IN`.
pub fn ideal_action(i: &Ideal, n: &ZSubmodule) -> ZSubmodule {
    ZSubmodule(i.integer_generator().expect("ideal of Z") * &n.0)
}

/// The ideal `(N :_R (0 :_M Ann²N))`; `S` makes `N` `S`-coidempotent iff it
/// meets this ideal.
pub fn coidempotent_ideal(n: &ZSubmodule) -> Ideal {
    let ann = annihilator(n);
    let ann2 = crate::ring::ideal_product(&ann, &ann).expect("same ring");
    let big = colon_into(&ZSubmodule::zero(), &ann2);
    colon_ring(n, &big)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(x: u64) -> ZSubmodule {
        ZSubmodule::new(x.into())
    }

    fn i(x: u64) -> Ideal {
        Ideal::integer(x.into())
    }

    #[test]
    fn closed_forms() {
        assert_eq!(annihilator(&t(5)), i(0));
        assert_eq!(annihilator(&t(0)), i(1));
        assert_eq!(colon_into(&t(0), &i(3)), t(0));
        assert_eq!(colon_into(&t(0), &i(0)), t(1));
        assert_eq!(colon_ring(&t(6), &t(2)), i(3));
        assert!(ZSubmodule::from_i64(-1).is_err());
        for x in 1..30 {
            let ann = annihilator(&t(x));
            let ann2 = crate::ring::ideal_product(&ann, &ann).unwrap();
            assert_eq!(colon_into(&t(0), &ann2), ZSubmodule::whole());
            assert_eq!(coidempotent_ideal(&t(x)), i(x));
        }
        assert_eq!(coidempotent_ideal(&t(0)), i(1));
    }

    #[test]
    fn colon_matches_scan() {
        for n in 0..12u64 {
            for c in 0..12u64 {
                // smallest positive m with c·m ∈ nZ, scanning
                let scan = (1..=144u64).find(|m| {
                    let cm = c * m;
                    if n == 0 { cm == 0 } else { cm % n == 0 }
                });
                let got = colon_into(&t(n), &i(c));
                match scan {
                    Some(m) => assert_eq!(got, t(m), "n={n} c={c}"),
                    None => assert_eq!(got, t(0)),
                }
                assert_eq!(colon_ring(&t(n), &t(c)).integer_generator(), Some(got.generator()));
            }
        }
    }
}
