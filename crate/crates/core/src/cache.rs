//! On-disk cache of submodule lattices, one JSON file per module.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::enumerate::{LatticeData, SubmoduleLattice};
use crate::error::Result;
use crate::module::FinModule;

/// Bumped whenever the stored layout or the canonical form changes.
pub const FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct Entry {
    version: u32,
    module: FinModule,
    lattice: LatticeData,
}

#[derive(Debug, Clone)]
pub struct LatticeCache {
    dir: PathBuf,
}

impl LatticeCache {
    pub fn new(dir: impl Into<PathBuf>) -> LatticeCache {
        LatticeCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, m: &FinModule) -> PathBuf {
        let comps: Vec<String> = m
            .components()
            .iter()
            .map(|c| c.iter().map(|f| f.to_string()).collect::<Vec<_>>().join("-"))
            .collect();
        let ring: String = m
            .ring()
            .to_string()
            .chars()
            .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
            .collect();
        let tag = if m.integer_base().is_some() { "_z" } else { "" };
        self.dir.join(format!("v{FORMAT_VERSION}_{ring}_{}{tag}.json", comps.join("_")))
    }

    /// The cached lattice, or `None` when absent, stale or unreadable.
    pub fn load(&self, m: &Arc<FinModule>) -> Option<SubmoduleLattice> {
        let text = fs::read_to_string(self.path(m)).ok()?;
        let entry: Entry = serde_json::from_str(&text).ok()?;
        if entry.version != FORMAT_VERSION || entry.module != **m {
            return None;
        }
        SubmoduleLattice::from_data(m, entry.lattice).ok()
    }

    /// Write through a temporary file and rename, so readers never see a
    /// partial entry.
    pub fn store(&self, lattice: &SubmoduleLattice) -> Result<()> {
        fs::create_dir_all(&self.dir)?;
        let m = lattice.parent();
        let entry = Entry { version: FORMAT_VERSION, module: (**m).clone(), lattice: lattice.to_data() };
        let text = serde_json::to_string(&entry).map_err(|e| crate::Error::Io(e.to_string()))?;
        let target = self.path(m);
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(text.as_bytes())?;
        tmp.persist(&target).map_err(|e| crate::Error::Io(e.to_string()))?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_submodules;
    use crate::module::module_from_factors;
    use crate::ring::Ring;

    #[test]
    fn roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let cache = LatticeCache::new(dir.path());
        let m = Arc::new(module_from_factors(&Ring::modular(4).unwrap(), &[2, 4]).unwrap());
        assert!(cache.load(&m).is_none());
        let l = enumerate_submodules(&m).unwrap();
        cache.store(&l).unwrap();
        let back = cache.load(&m).unwrap();
        assert_eq!(back.all(), l.all());
        assert_eq!(back.hasse_edges(), l.hasse_edges());
        let other = Arc::new(module_from_factors(&Ring::modular(8).unwrap(), &[2, 4]).unwrap());
        assert!(cache.load(&other).is_none());
    }

    #[test]
    fn stale_version_is_ignored() {
        let dir = tempfile::tempdir().unwrap();
        let cache = LatticeCache::new(dir.path());
        let m = Arc::new(module_from_factors(&Ring::modular(6).unwrap(), &[6]).unwrap());
        cache.store(&enumerate_submodules(&m).unwrap()).unwrap();
        let path = cache.path(&m);
        let text = fs::read_to_string(&path).unwrap().replacen("\"version\":1", "\"version\":0", 1);
        fs::write(&path, text).unwrap();
        assert!(cache.load(&m).is_none());
    }
}
