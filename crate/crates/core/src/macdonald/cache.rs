//! On-disk persistence of `H̃_μ`: one `<parts>.sym` file per partition plus a `manifest`.

use super::memo::{install, memoized_degrees, modified_h_degree};
use crate::error::{Error, Result};
use crate::symfunc::{h, perp, Partition, SymFunc};
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

const MANIFEST: &str = "manifest";

/// A cache directory of modified Macdonald polynomials.
#[derive(Clone, Debug)]
pub struct MacCache {
    dir: PathBuf,
}

fn digest(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

fn file_name(mu: &Partition) -> String {
    format!("{}.sym", mu.join("-"))
}

/// `h_{|μ|}^⊥ H̃_μ = 1`.
pub fn validate(mu: &Partition, f: &SymFunc) -> Result<()> {
    if perp(&h(mu.size() as i64), f) != SymFunc::one() {
        return Err(Error::CacheCorrupt(format!("{}: normalization check failed", mu.join("-"))));
    }
    Ok(())
}

impl MacCache {
    /// Opens `dir`, creating it if absent.
    pub fn open(dir: impl AsRef<Path>) -> Result<MacCache> {
        fs::create_dir_all(dir.as_ref())?;
        Ok(MacCache { dir: dir.as_ref().to_path_buf() })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    /// Reads the manifest: `(max degree, file name → hash)`.
    fn manifest(&self) -> Result<(u32, BTreeMap<String, String>)> {
        let path = self.dir.join(MANIFEST);
        if !path.exists() {
            return Ok((0, BTreeMap::new()));
        }
        let text = fs::read_to_string(path)?;
        let mut lines = text.lines();
        let maxdeg = lines
            .next()
            .and_then(|l| l.strip_prefix("max_degree="))
            .and_then(|x| x.trim().parse().ok())
            .ok_or_else(|| Error::CacheCorrupt("manifest: missing max_degree header".into()))?;
        let mut entries = BTreeMap::new();
        for l in lines.filter(|l| !l.trim().is_empty()) {
            let (name, hash) = l
                .split_once(' ')
                .ok_or_else(|| Error::CacheCorrupt(format!("manifest: malformed line '{l}'")))?;
            entries.insert(name.to_string(), hash.trim().to_string());
        }
        Ok((maxdeg, entries))
    }

    /// Loads and validates every listed entry. Entries whose file is missing are skipped.
    pub fn load(&self) -> Result<BTreeMap<Partition, SymFunc>> {
        let (_, entries) = self.manifest()?;
        let mut out = BTreeMap::new();
        for (name, hash) in entries {
            let stem = name.strip_suffix(".sym").unwrap_or(&name);
            let mu = Partition::parse(stem).map_err(|_| Error::CacheCorrupt(format!("manifest: bad entry name '{name}'")))?;
            let path = self.dir.join(&name);
            if !path.exists() {
                continue;
            }
            let text = fs::read_to_string(path)?;
            if digest(&text) != hash {
                return Err(Error::CacheCorrupt(format!("{stem}: content hash mismatch")));
            }
            let f = SymFunc::deserialize(&text).map_err(|e| Error::CacheCorrupt(format!("{stem}: {e}")))?;
            validate(&mu, &f)?;
            out.insert(mu, f);
        }
        Ok(out)
    }

    /// Writes the given entries and a manifest covering them.
    pub fn store(&self, entries: &BTreeMap<Partition, SymFunc>) -> Result<()> {
        let (_, mut manifest) = self.manifest().unwrap_or_default();
        manifest.retain(|name, _| self.dir.join(name).exists());
        for (mu, f) in entries {
            if mu.is_empty() {
                continue;
            }
            let text = f.serialize();
            let name = file_name(mu);
            fs::write(self.dir.join(&name), &text)?;
            manifest.insert(name, digest(&text));
        }
        let maxdeg = manifest
            .keys()
            .filter_map(|n| Partition::parse(n.trim_end_matches(".sym")).ok())
            .map(|p| p.size())
            .max()
            .unwrap_or(0);
        let mut text = format!("max_degree={maxdeg}\n");
        for (name, hash) in &manifest {
            text.push_str(&format!("{name} {hash}\n"));
        }
        fs::write(self.dir.join(MANIFEST), text)?;
        Ok(())
    }

    /// Loads the cache into the process memo, then computes and stores every
    /// degree up to `maxdeg` that was missing. Returns the number of partitions computed.
    pub fn warm(&self, maxdeg: u32) -> Result<usize> {
        let loaded = self.load()?;
        let mut by_degree: BTreeMap<u32, BTreeMap<Partition, SymFunc>> = BTreeMap::new();
        for (mu, f) in loaded {
            by_degree.entry(mu.size()).or_default().insert(mu, f);
        }
        let mut have: Vec<u32> = Vec::new();
        for (n, t) in by_degree {
            if t.len() == Partition::all(n).len() {
                install(n, t);
                have.push(n);
            }
        }
        let mut computed = BTreeMap::new();
        for n in 1..=maxdeg {
            if !have.contains(&n) {
                computed.extend(modified_h_degree(n)?.iter().map(|(k, v)| (k.clone(), v.clone())));
            }
        }
        let count = computed.len();
        self.store(&computed)?;
        Ok(count)
    }

    /// Persists every memoized degree.
    pub fn persist(&self) -> Result<()> {
        let mut all = BTreeMap::new();
        for n in memoized_degrees() {
            if n == 0 {
                continue;
            }
            all.extend(modified_h_degree(n)?.iter().map(|(k, v)| (k.clone(), v.clone())));
        }
        self.store(&all)
    }
}
