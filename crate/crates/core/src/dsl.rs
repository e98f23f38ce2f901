//! Text forms for rings, modules, multiplicative sets and submodules.
//!
//! ```text
//! ring       := "Z" | "Z/n" ( "x" "Z/n" )*
//! module     := "Z" | component ( "x" component )*
//! component  := "0" | "Z/d" ( "+" "Z/d" )*
//! set        := "units" | "nonzero" | "comp-primes:" p,... | "gen:" g,...
//!             | "fgen:" e,... | "trivial" | "ring-units"
//! submodule  := "gens:" e,... | "zero" | "whole"
//! element    := integer | "(" integer,... ")"
//! ```
//!
//! Whitespace is ignored everywhere. The `units`, `nonzero`, `comp-primes`
//! and `gen` forms describe subsets of `Z`; over a finite ring they denote
//! their image under `Z -> R`. `fgen` lists generators inside the ring and
//! `ring-units` is the unit group of the ring.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::module::{module_from_components, module_from_factors, submodule_from_generators, FinModule, Submodule};
use crate::multset::{MultSet, ZMultSet};
use crate::ring::{Ring, RingElement};
use crate::zmodule::ZSubmodule;

fn squash(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

fn bad(what: &str, s: &str) -> Error {
    Error::Parse(format!("cannot read {what} from '{s}'"))
}

fn cyclic(s: &str) -> Option<u64> {
    s.strip_prefix("Z/")?.parse().ok()
}

/// Split on a single-character separator outside parentheses.
fn split_top(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

pub fn parse_ring(s: &str) -> Result<Ring> {
    let t = squash(s).replace('×', "x");
    if t == "Z" {
        return Ok(Ring::Integers);
    }
    let moduli: Option<Vec<u64>> = t.split('x').map(cyclic).collect();
    Ring::from_moduli(&moduli.ok_or_else(|| bad("a ring", s))?)
}

/// A parsed module: the integers over themselves, or a finite module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleSpec {
    Integers,
    Finite(Arc<FinModule>),
}

pub fn parse_module(ring: &Ring, s: &str) -> Result<ModuleSpec> {
    let t = squash(s).replace('×', "x").replace('⊕', "+");
    if t == "Z" {
        return match ring {
            Ring::Integers => Ok(ModuleSpec::Integers),
            _ => Err(Error::UnsupportedInfinite),
        };
    }
    let mut comps = Vec::new();
    for part in t.split('x') {
        let part = part.trim_start_matches('(').trim_end_matches(')');
        if part == "0" {
            comps.push(Vec::new());
            continue;
        }
        let mut fs = Vec::new();
        for c in part.split('+') {
            if c == "Z" {
                return Err(Error::UnsupportedInfinite);
            }
            fs.push(cyclic(c).ok_or_else(|| bad("a module", s))?);
        }
        comps.push(fs);
    }
    let m = match ring {
        Ring::Integers | Ring::Modular(_) if comps.len() == 1 => module_from_factors(ring, &comps[0])?,
        Ring::Product(_) => module_from_components(ring, &comps)?,
        _ => return Err(bad("a module over a single ring", s)),
    };
    Ok(ModuleSpec::Finite(Arc::new(m)))
}

fn integers(s: &str, what: &str) -> Result<Vec<i64>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|x| x.parse::<i64>().map_err(|_| bad(what, x))).collect()
}

/// A parsed set: a symbolic subset of `Z`, or generators inside a finite ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SetSpec {
    Integer(ZMultSet),
    Generators(Vec<Vec<i64>>),
    RingUnits,
}

pub fn parse_set(s: &str) -> Result<SetSpec> {
    let t = squash(s).to_ascii_lowercase();
    Ok(match t.as_str() {
        "units" => SetSpec::Integer(ZMultSet::Units),
        "nonzero" => SetSpec::Integer(ZMultSet::NonZero),
        "trivial" | "one" => SetSpec::Generators(Vec::new()),
        "ring-units" => SetSpec::RingUnits,
        _ => {
            if let Some(rest) = t.strip_prefix("comp-primes:") {
                let ps: Result<Vec<u64>> = integers(rest, "a prime")?
                    .into_iter()
                    .map(|p| u64::try_from(p).map_err(|_| bad("a prime", rest)))
                    .collect();
                SetSpec::Integer(ZMultSet::complement_of_primes(&ps?)?)
            } else if let Some(rest) = t.strip_prefix("gen:") {
                SetSpec::Integer(ZMultSet::generated_by(integers(rest, "a generator")?))
            } else if let Some(rest) = t.strip_prefix("fgen:") {
                let mut gens = Vec::new();
                for g in split_top(rest, ',').into_iter().filter(|g| !g.is_empty()) {
                    gens.push(parse_tuple(g)?);
                }
                SetSpec::Generators(gens)
            } else {
                return Err(bad("a multiplicative set", s));
            }
        }
    })
}

fn parse_tuple(s: &str) -> Result<Vec<i64>> {
    match s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
        Some(inner) => integers(inner, "a tuple"),
        None => integers(s, "an integer"),
    }
}

fn ring_element(ring: &Ring, v: &[i64]) -> Result<RingElement> {
    match ring {
        Ring::Integers | Ring::Modular(_) if v.len() == 1 => Ok(ring.element(v[0])),
        Ring::Product(ns) if v.len() == ns.len() => {
            let r = v.iter().zip(ns).map(|(&x, &n)| x.rem_euclid(n as i64) as u64).collect();
            ring.residues(r)
        }
        _ => Err(Error::Parse(format!("element {v:?} does not fit {ring}"))),
    }
}

/// Image of a subset of `Z` in a finite ring.
pub fn image_in_ring(z: &ZMultSet, ring: &Ring) -> Result<MultSet> {
    let moduli = ring.moduli().ok_or(Error::InfiniteRing("image_in_ring"))?;
    let l = moduli
        .iter()
        .try_fold(1u64, |acc, &n| crate::arith::lcm(acc, n))
        .ok_or(Error::ModulusTooLarge(u64::MAX))?;
    let base = z.reduce(l)?;
    if let Ring::Modular(_) = ring {
        return Ok(base);
    }
    let els: Vec<RingElement> = base
        .elements()
        .iter()
        .map(|x| {
            let v = x.residues_slice().expect("finite")[0];
            RingElement::Residues(moduli.iter().map(|&n| v % n).collect())
        })
        .collect();
    MultSet::closure(ring, &els)
}

/// Resolve a set against the ring a module lives on. A `Z`-declared module
/// was re-based to `Z/e`, so its sets are reduced there.
pub fn resolve_set(spec: &SetSpec, ring: &Ring) -> Result<MultSet> {
    match spec {
        SetSpec::Integer(z) => image_in_ring(z, ring),
        SetSpec::Generators(gs) => {
            let els: Result<Vec<RingElement>> = gs.iter().map(|g| ring_element(ring, g)).collect();
            MultSet::closure(ring, &els?)
        }
        SetSpec::RingUnits => MultSet::units(ring),
    }
}

/// A parsed submodule of a finite module or of `Z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubmoduleSpec {
    Integer(ZSubmodule),
    Finite(Submodule),
}

pub fn parse_submodule(module: &ModuleSpec, s: &str) -> Result<SubmoduleSpec> {
    let t = squash(s).to_ascii_lowercase();
    match module {
        ModuleSpec::Integers => {
            let z = match t.as_str() {
                "zero" => ZSubmodule::zero(),
                "whole" => ZSubmodule::whole(),
                _ => {
                    let rest = t.strip_prefix("gens:").ok_or_else(|| bad("a submodule", s))?;
                    let gs = integers(rest, "a generator")?;
                    let g = gs.iter().fold(BigInt::from(0), |acc, &x| num_integer::Integer::gcd(&acc, &BigInt::from(x)));
                    ZSubmodule::from_signed(&g)?
                }
            };
            Ok(SubmoduleSpec::Integer(z))
        }
        ModuleSpec::Finite(m) => {
            let n = match t.as_str() {
                "zero" => Submodule::zero(m),
                "whole" => Submodule::whole(m),
                _ => {
                    let rest = t.strip_prefix("gens:").ok_or_else(|| bad("a submodule", s))?;
                    let mut gens = Vec::new();
                    for g in split_top(rest, ',').into_iter().filter(|g| !g.is_empty()) {
                        let v = parse_tuple(g)?;
                        if v.len() != m.rank() {
                            return Err(Error::DimensionMismatch { expected: m.rank(), got: v.len() });
                        }
                        let coords: Vec<u64> = v
                            .iter()
                            .zip(m.factors())
                            .map(|(&x, f)| x.rem_euclid(f as i64) as u64)
                            .collect();
                        gens.push(m.element(&coords)?);
                    }
                    submodule_from_generators(m, &gens)?
                }
            };
            Ok(SubmoduleSpec::Finite(n))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rings() {
        assert_eq!(parse_ring(" Z ").unwrap(), Ring::Integers);
        assert_eq!(parse_ring("Z/12").unwrap(), Ring::Modular(12));
        assert_eq!(parse_ring("Z/4 x Z/9").unwrap(), Ring::Product(vec![4, 9]));
        assert!(parse_ring("Z/1").is_err());
        assert!(parse_ring("Q").is_err());
    }

    #[test]
    fn modules() {
        let r = parse_ring("Z/4").unwrap();
        let ModuleSpec::Finite(m) = parse_module(&r, "Z/4 + Z/2").unwrap() else { panic!() };
        assert_eq!(m.factors(), vec![4, 2]);
        let ModuleSpec::Finite(m) = parse_module(&Ring::Integers, "Z/2 + Z/2").unwrap() else { panic!() };
        assert_eq!(m.integer_base(), Some(2));
        assert_eq!(parse_module(&Ring::Integers, "Z").unwrap(), ModuleSpec::Integers);
        let p = parse_ring("Z/2 x Z/3").unwrap();
        let ModuleSpec::Finite(m) = parse_module(&p, "Z/2 + Z/2 x Z/3").unwrap() else { panic!() };
        assert_eq!(m.components(), &[vec![2, 2], vec![3]]);
        assert!(parse_module(&r, "Z/3").is_err());
    }

    #[test]
    fn sets() {
        let z4 = parse_ring("Z/4").unwrap();
        let s = resolve_set(&parse_set("comp-primes:2").unwrap(), &z4).unwrap();
        assert_eq!(s.elements(), &[z4.element(1), z4.element(3)]);
        let s = resolve_set(&parse_set("fgen:3").unwrap(), &z4).unwrap();
        assert_eq!(s.len(), 2);
        let s = resolve_set(&parse_set("nonzero").unwrap(), &z4).unwrap();
        assert_eq!(s.len(), 4);
        let p = parse_ring("Z/2 x Z/3").unwrap();
        let s = resolve_set(&parse_set("fgen:(1,2)").unwrap(), &p).unwrap();
        assert_eq!(s.len(), 2);
        let s = resolve_set(&parse_set("gen:2").unwrap(), &p).unwrap();
        assert!(s.contains(&p.residues(vec![0, 2]).unwrap()));
        assert!(parse_set("comp-primes:4").is_err());
        assert!(parse_set("bogus").is_err());
    }

    #[test]
    fn submodules() {
        let r = parse_ring("Z/4").unwrap();
        let m = parse_module(&r, "Z/4 + Z/2").unwrap();
        let SubmoduleSpec::Finite(n) = parse_submodule(&m, "gens:(1,1)").unwrap() else { panic!() };
        assert_eq!(n.order(), 4);
        let SubmoduleSpec::Finite(n) = parse_submodule(&m, "gens:").unwrap() else { panic!() };
        assert!(n.is_zero());
        let z = parse_submodule(&ModuleSpec::Integers, "gens:6,-4").unwrap();
        assert_eq!(z, SubmoduleSpec::Integer(ZSubmodule::from_i64(2).unwrap()));
        assert!(parse_submodule(&m, "gens:(1,1,1)").is_err());
    }
}
