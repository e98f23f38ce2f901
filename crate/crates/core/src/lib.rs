pub mod arith;
pub mod cache;
pub mod context;
pub mod dsl;
pub mod elementwise;
pub mod enumerate;
pub mod error;
pub mod lattice;
pub mod module;
pub mod multset;
pub mod predicates;
pub mod theorems;
pub mod ring;
pub mod zmodule;

pub use error::{Error, Result};

pub use context::{ModuleContext, SView, Workbench};
pub use dsl::{parse_module, parse_ring, parse_set, parse_submodule, resolve_set, ModuleSpec, SetSpec, SubmoduleSpec};
pub use enumerate::{enumerate_submodules, SubmoduleLattice};
pub use module::{FinModule, Submodule};
pub use multset::{MultSet, ZMultSet};
pub use predicates::{decide, Options, Property, PropertyName, Query, Verdict, Witness, PROPERTY_NAMES};
pub use ring::{Ideal, Ring, RingElement};
pub use theorems::{generate_corpus, reproduce_examples, verify_all, CorpusConfig, Report, VerifyConfig};
pub use zmodule::ZSubmodule;
