//! Deterministic instance corpora: modules over `Z/n` up to an order bound,
//! paired with a fixed menu of multiplicative sets per ring, plus products
//! of two small rings and the modules declared over `Z` in the examples.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::arith;
use crate::context::SView;
use crate::error::Result;
use crate::module::{module_from_components, module_from_factors, FinModule};
use crate::multset::{MultSet, ZMultSet};
use crate::ring::{all_ideals, prime_ideals, Ring, RingElement};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusConfig {
    pub moduli: Vec<u64>,
    pub max_order: u128,
    /// Pairs `(a, b)` for modules over `Z/a x Z/b`.
    pub products: Vec<(u64, u64)>,
    pub product_max_order: u128,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            moduli: (2..=16).collect(),
            max_order: 32,
            products: vec![(2, 2), (2, 3), (2, 4), (3, 3), (2, 5), (3, 4), (2, 6), (4, 4)],
            product_max_order: 16,
        }
    }
}

impl CorpusConfig {
    pub fn with_max_order(max_order: u128) -> Self {
        let base = CorpusConfig::default();
        CorpusConfig { max_order, product_max_order: base.product_max_order.min(max_order), ..base }
    }
}

/// A distinct multiplicative set together with every label that produced it.
#[derive(Clone, Debug)]
pub struct SChoice {
    pub labels: Vec<String>,
    pub set: MultSet,
    pub view: SView,
}

impl SChoice {
    pub fn label(&self) -> &str {
        &self.labels[0]
    }
}

/// The menu of sets for one ring.
#[derive(Clone, Debug)]
pub struct RingMenu {
    pub ring: Ring,
    pub choices: Vec<SChoice>,
    /// Number of labels before merging equal sets.
    pub labeled: usize,
}

impl RingMenu {
    fn build(ring: &Ring, labeled: Vec<(String, MultSet)>) -> Result<RingMenu> {
        let ideals = all_ideals(ring)?;
        let count = labeled.len();
        let mut choices: Vec<SChoice> = Vec::new();
        for (label, set) in labeled {
            match choices.iter_mut().find(|c| c.set == set) {
                Some(c) => c.labels.push(label),
                None => {
                    let view = SView::new(ring, &ideals, &set)?;
                    choices.push(SChoice { labels: vec![label], set, view });
                }
            }
        }
        Ok(RingMenu { ring: ring.clone(), choices, labeled: count })
    }

    /// `{1}`, the ring's units, `R \ P` for each prime, the closure of every
    /// single element, and the image of `Z \ {0}`.
    pub fn modular(n: u64) -> Result<RingMenu> {
        let ring = Ring::modular(n)?;
        let mut labeled = vec![
            ("trivial".to_string(), MultSet::one(&ring)?),
            ("units".to_string(), MultSet::units(&ring)?),
        ];
        for (p, ideal) in arith::prime_divisors(n).into_iter().zip(prime_ideals(&ring)?) {
            labeled.push((format!("comp-primes:{p}"), MultSet::complement_of_prime(&ring, &ideal)?));
        }
        for g in 0..n as i64 {
            labeled.push((format!("fgen:{g}"), MultSet::closure(&ring, &[ring.element(g)])?));
        }
        labeled.push(("nonzero".to_string(), ZMultSet::NonZero.reduce(n)?));
        RingMenu::build(&ring, labeled)
    }

    /// Products `S1 x S2` of the unit-like and zero-containing sets of the
    /// factor menus, then the closure of every single element.
    pub fn product(a: &RingMenu, b: &RingMenu) -> Result<RingMenu> {
        let ring = Ring::product(&[a.ring.clone(), b.ring.clone()])?;
        let keep = |c: &&SChoice| {
            c.labels.iter().any(|l| l == "trivial" || l == "units" || l == "nonzero" || l.starts_with("comp-primes:"))
        };
        let mut labeled = Vec::new();
        for x in a.choices.iter().filter(keep) {
            for y in b.choices.iter().filter(keep) {
                let set = MultSet::product(&[x.set.clone(), y.set.clone()])?;
                labeled.push((format!("{} x {}", x.label(), y.label()), set));
            }
        }
        for g in ring.elements()? {
            let RingElement::Residues(r) = &g else { unreachable!("product rings are finite") };
            let label = format!("fgen:({})", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","));
            labeled.push((label, MultSet::closure(&ring, std::slice::from_ref(&g))?));
        }
        RingMenu::build(&ring, labeled)
    }

    pub fn index_of(&self, set: &MultSet) -> Option<usize> {
        self.choices.iter().position(|c| c.set == *set)
    }
}

/// One module with one multiplicative set.
#[derive(Clone, Debug)]
pub struct Instance {
    pub module: Arc<FinModule>,
    pub menu: usize,
    pub choice: usize,
    /// Factor modules and sets when the ring is a product.
    pub factors: Vec<(Arc<FinModule>, MultSet)>,
    /// Label a worked example uses for this set, when it differs from the menu.
    pub alias: Option<String>,
}

#[derive(Clone, Debug, Default)]
pub struct Corpus {
    pub menus: Vec<RingMenu>,
    pub instances: Vec<Instance>,
}

impl Corpus {
    pub fn menu(&self, inst: &Instance) -> &RingMenu {
        &self.menus[inst.menu]
    }

    pub fn choice(&self, inst: &Instance) -> &SChoice {
        &self.menus[inst.menu].choices[inst.choice]
    }

    pub fn describe(&self, inst: &Instance) -> String {
        let c = self.choice(inst);
        let mut s = format!("M = {} | S = {}", inst.module, inst.alias.as_deref().unwrap_or(c.label()));
        let others: Vec<&str> =
            c.labels.iter().map(|l| l.as_str()).filter(|l| Some(*l) != inst.alias.as_deref()).collect();
        let others: Vec<&str> = if inst.alias.is_some() { others } else { others[1..].to_vec() };
        if !others.is_empty() {
            s.push_str(&format!(" (= {})", others.join(", ")));
        }
        s
    }

    pub fn modules(&self) -> usize {
        let mut seen: Vec<&FinModule> = self.instances.iter().map(|i| &*i.module).collect();
        seen.sort_by_key(|m| m.to_string());
        seen.dedup();
        seen.len()
    }
}

/// Invariant factor lists `d1 | d2 | ... | dk` with `dk | n` and order at
/// most `max_order`, in lexicographic order.
pub fn invariant_factor_lists(n: u64, max_order: u128) -> Vec<Vec<u64>> {
    fn go(n: u64, max: u128, cur: &mut Vec<u64>, order: u128, out: &mut Vec<Vec<u64>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        let last = cur.last().copied().unwrap_or(1);
        for d in arith::divisors(n) {
            if d < 2 || d % last != 0 || order * d as u128 > max {
                continue;
            }
            cur.push(d);
            go(n, max, cur, order * d as u128, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max_order, &mut Vec::new(), 1, &mut out);
    out.sort();
    out
}

pub fn generate_corpus(cfg: &CorpusConfig) -> Result<Corpus> {
    let mut corpus = Corpus::default();
    if cfg.max_order < 2 {
        return Ok(corpus);
    }
    let mut by_modulus: BTreeMap<u64, usize> = BTreeMap::new();
    let mut menu_for = |corpus: &mut Corpus, n: u64| -> Result<usize> {
        if let Some(&i) = by_modulus.get(&n) {
            return Ok(i);
        }
        corpus.menus.push(RingMenu::modular(n)?);
        by_modulus.insert(n, corpus.menus.len() - 1);
        Ok(corpus.menus.len() - 1)
    };
    let mut moduli = cfg.moduli.clone();
    moduli.sort_unstable();
    moduli.dedup();
    for &n in &moduli {
        let mi = menu_for(&mut corpus, n)?;
        let ring = corpus.menus[mi].ring.clone();
        for fs in invariant_factor_lists(n, cfg.max_order) {
            let m = Arc::new(module_from_factors(&ring, &fs)?);
            for ci in 0..corpus.menus[mi].choices.len() {
                corpus.instances.push(Instance { module: m.clone(), menu: mi, choice: ci, factors: Vec::new(), alias: None });
            }
        }
    }

    // modules declared over Z in the worked examples
    let declared: [(&[u64], ZMultSet, &str); 5] = [
        (&[2, 2], ZMultSet::generated_by([2]), "gen:2"),
        (&[4], ZMultSet::complement_of_primes(&[2])?, "comp-primes:2"),
        (&[2, 2], ZMultSet::complement_of_primes(&[2])?, "comp-primes:2"),
        (&[3, 3], ZMultSet::complement_of_primes(&[3])?, "comp-primes:3"),
        (&[5, 5], ZMultSet::complement_of_primes(&[5])?, "comp-primes:5"),
    ];
    for (fs, z, label) in declared {
        let m = Arc::new(module_from_factors(&Ring::Integers, fs)?);
        if m.order() > cfg.max_order {
            continue;
        }
        let e = m.integer_base().expect("declared over Z");
        let mi = menu_for(&mut corpus, e)?;
        let set = z.reduce(e)?;
        let ci = corpus.menus[mi].index_of(&set).expect("menus contain every reduced example set");
        corpus.instances.push(Instance { module: m, menu: mi, choice: ci, factors: Vec::new(), alias: Some(label.to_string()) });
    }

    for &(a, b) in &cfg.products {
        let ma = menu_for(&mut corpus, a)?;
        let mb = menu_for(&mut corpus, b)?;
        let menu = RingMenu::product(&corpus.menus[ma], &corpus.menus[mb])?;
        let ring = menu.ring.clone();
        let (ra, rb) = (corpus.menus[ma].ring.clone(), corpus.menus[mb].ring.clone());
        corpus.menus.push(menu);
        let pi = corpus.menus.len() - 1;
        for fa in invariant_factor_lists(a, cfg.product_max_order) {
            for fb in invariant_factor_lists(b, cfg.product_max_order) {
                let order: u128 = fa.iter().chain(&fb).map(|&d| d as u128).product();
                if order > cfg.product_max_order {
                    continue;
                }
                let m = Arc::new(module_from_components(&ring, &[fa.clone(), fb.clone()])?);
                let m1 = Arc::new(module_from_factors(&ra, &fa)?);
                let m2 = Arc::new(module_from_factors(&rb, &fb)?);
                for ci in 0..corpus.menus[pi].choices.len() {
                    let s = &corpus.menus[pi].choices[ci].set;
                    let (s1, s2) = (s.project(0)?, s.project(1)?);
                    let factors = if MultSet::product(&[s1.clone(), s2.clone()])? == *s {
                        vec![(m1.clone(), s1), (m2.clone(), s2)]
                    } else {
                        Vec::new()
                    };
                    corpus.instances.push(Instance { module: m.clone(), menu: pi, choice: ci, factors, alias: None });
                }
            }
        }
    }
    Ok(corpus)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_lists() {
        assert_eq!(invariant_factor_lists(6, 6), vec![vec![2], vec![2, 2], vec![3], vec![6]]);
        assert_eq!(invariant_factor_lists(4, 8), vec![vec![2], vec![2, 2], vec![2, 2, 2], vec![2, 4], vec![4]]);
        assert!(invariant_factor_lists(7, 6).is_empty());
    }

    #[test]
    fn menus_merge_aliases() {
        let m = RingMenu::modular(4).unwrap();
        assert_eq!(m.labeled, 2 + 1 + 4 + 1);
        let units = m.choices.iter().find(|c| c.label() == "units").unwrap();
        assert!(units.labels.contains(&"comp-primes:2".to_string()));
        assert!(units.labels.contains(&"fgen:3".to_string()));
        assert_eq!(m.choices[0].label(), "trivial");
        for c in &m.choices {
            assert!(c.set.contains(&m.ring.one()));
        }
    }

    #[test]
    fn small_corpus() {
        let cfg = CorpusConfig { moduli: vec![6], max_order: 6, products: vec![(2, 3)], product_max_order: 6 };
        let c = generate_corpus(&cfg).unwrap();
        let mods: Vec<String> = c.instances.iter().filter(|i| i.factors.is_empty()).map(|i| i.module.to_string()).collect();
        assert!(mods.contains(&"Z/2 + Z/2 over Z/6".to_string()));
        assert!(mods.contains(&"Z/6 over Z/6".to_string()));
        assert!(c.instances.iter().any(|i| i.module.to_string() == "Z/2 x Z/3 over Z/2 x Z/3"));
        assert!(c.instances.iter().any(|i| i.alias.as_deref() == Some("comp-primes:2") && i.module.order() == 4));
        assert!(generate_corpus(&CorpusConfig::with_max_order(0)).unwrap().instances.is_empty());
    }

    #[test]
    fn default_corpus_shape() {
        let c = generate_corpus(&CorpusConfig::default()).unwrap();
        for menu in &c.menus {
            if let Ring::Modular(_) = menu.ring {
                assert!(menu.labeled >= 6);
            }
        }
        assert!(c.instances.iter().all(|i| i.module.order() <= 32));
        assert!(c.instances.iter().any(|i| i.module.to_string() == "Z/4 over Z" && i.alias.is_some()));
    }
}
