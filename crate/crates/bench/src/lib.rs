//! Fixtures shared by the benchmarks.

use std::sync::Arc;

use scoid_core::module::module_from_factors;
use scoid_core::{FinModule, Ring};

/// `Z/n`-modules with the given invariant factors.
pub fn module(n: u64, factors: &[u64]) -> Arc<FinModule> {
    Arc::new(module_from_factors(&Ring::modular(n).unwrap(), factors).unwrap())
}

/// A spread of lattice shapes: cyclic, elementary abelian, and mixed.
pub fn lattice_cases() -> Vec<(&'static str, Arc<FinModule>)> {
    vec![
        ("Z/64", module(64, &[64])),
        ("(Z/2)^4", module(2, &[2, 2, 2, 2])),
        ("(Z/2)^5", module(2, &[2, 2, 2, 2, 2])),
        ("Z/4+Z/8", module(8, &[4, 8])),
        ("Z/3+Z/9", module(9, &[3, 9])),
        ("Z/6+Z/12", module(12, &[6, 12])),
    ]
}
