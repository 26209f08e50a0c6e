//! One JSON file per `(n, k)` holding the superpolynomial and the methods
//! that have reproduced it.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use torus_spp::checks::check_symmetry;
use torus_spp::{LaurentPoly3, Semigroup, ENGINE_VERSION};

use crate::format::{poly_from_json, poly_to_json, JsonTerm};

pub const CACHE_ENV: &str = "SUPERPOLY_CACHE_DIR";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub n: i64,
    pub k: i64,
    pub delta: i64,
    pub mu: i64,
    pub spp: Vec<JsonTerm>,
    pub methods_checked: Vec<String>,
    pub engine_version: String,
}

#[derive(Debug)]
pub enum CacheError {
    Io(io::Error),
    /// The file exists but cannot be trusted.
    Invalid(String),
}

impl std::fmt::Display for CacheError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CacheError::Io(e) => write!(f, "cache io: {e}"),
            CacheError::Invalid(s) => write!(f, "invalid cache entry: {s}"),
        }
    }
}

impl From<io::Error> for CacheError {
    fn from(e: io::Error) -> Self {
        CacheError::Io(e)
    }
}

impl CacheEntry {
    pub fn new(sg: &Semigroup, spp: &LaurentPoly3, methods: &[&str]) -> Self {
        let mut methods_checked: Vec<String> = methods.iter().map(|s| s.to_string()).collect();
        methods_checked.sort();
        methods_checked.dedup();
        CacheEntry {
            n: sg.n(),
            k: sg.k(),
            delta: sg.delta(),
            mu: sg.mu(),
            spp: poly_to_json(spp),
            methods_checked,
            engine_version: ENGINE_VERSION.to_string(),
        }
    }

    pub fn poly(&self) -> Result<LaurentPoly3, CacheError> {
        poly_from_json(&self.spp).map_err(CacheError::Invalid)
    }

    pub fn has_method(&self, m: &str) -> bool {
        self.methods_checked.iter().any(|x| x == m)
    }

    pub fn add_method(&mut self, m: &str) {
        if !self.has_method(m) {
            self.methods_checked.push(m.to_string());
            self.methods_checked.sort();
        }
    }
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, sg: &Semigroup) -> PathBuf {
        self.dir.join(format!("spp_{}_{}.json", sg.n(), sg.k()))
    }

    /// `Ok(None)` when there is no entry or it was written by another engine
    /// version.
    pub fn load(&self, sg: &Semigroup) -> Result<Option<CacheEntry>, CacheError> {
        let path = self.path(sg);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let entry: CacheEntry =
            serde_json::from_str(&text).map_err(|e| CacheError::Invalid(format!("{}: {e}", path.display())))?;
        if entry.engine_version != ENGINE_VERSION {
            return Ok(None);
        }
        if (entry.n, entry.k, entry.delta, entry.mu) != (sg.n(), sg.k(), sg.delta(), sg.mu()) {
            return Err(CacheError::Invalid(format!("{}: header does not match ({}, {})", path.display(), sg.n(), sg.k())));
        }
        let p = entry.poly()?;
        check_symmetry(&p).map_err(|e| CacheError::Invalid(format!("{}: {e}", path.display())))?;
        Ok(Some(entry))
    }

    /// Write through a temporary file so readers never see a partial entry.
    pub fn store(&self, entry: &CacheEntry) -> Result<(), CacheError> {
        fs::create_dir_all(&self.dir)?;
        let sg = Semigroup::new(entry.n, entry.k).map_err(|e| CacheError::Invalid(e.to_string()))?;
        let path = self.path(&sg);
        let tmp = path.with_extension(format!("json.tmp{}", std::process::id()));
        let mut text = serde_json::to_string_pretty(entry).expect("entry serializes");
        text.push('\n');
        fs::write(&tmp, text)?;
        fs::rename(&tmp, &path)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use torus_spp::series::superpoly;

    #[test]
    fn store_and_load() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        let sg = Semigroup::new(3, 4).unwrap();
        assert!(cache.load(&sg).unwrap().is_none());
        let s = superpoly(3, 4).unwrap();
        let e = CacheEntry::new(&sg, &s.spp, &["cells", "beta", "cells"]);
        cache.store(&e).unwrap();
        let back = cache.load(&sg).unwrap().unwrap();
        assert_eq!(back, e);
        assert_eq!(back.poly().unwrap(), s.spp);
        assert_eq!(back.methods_checked, ["beta", "cells"]);
    }

    #[test]
    fn tampered_entry_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        let sg = Semigroup::new(2, 3).unwrap();
        let mut e = CacheEntry::new(&sg, &superpoly(2, 3).unwrap().spp, &["cells"]);
        e.spp[0].3 = "2".into();
        cache.store(&e).unwrap();
        assert!(matches!(cache.load(&sg), Err(CacheError::Invalid(_))));
    }

    #[test]
    fn other_versions_are_ignored() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        let sg = Semigroup::new(2, 3).unwrap();
        let mut e = CacheEntry::new(&sg, &superpoly(2, 3).unwrap().spp, &["cells"]);
        e.engine_version = "0.0.0-old".into();
        cache.store(&e).unwrap();
        assert!(cache.load(&sg).unwrap().is_none());
    }
}
