//! On-disk cache of exact counts, one JSON file per `(d, kind, rooting)`.

use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::enumeration::{count_animals, enumerate_oracle, AnimalKind, Counts, EnumConfig, Rooting};
use crate::error::{Error, Result};

/// Bumped whenever the file layout changes; older files are recomputed.
pub const SCHEMA_VERSION: u32 = 1;

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "LATTICE_CACHE_DIR";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Generator {
    Fast,
    Oracle,
}

impl Generator {
    pub fn as_str(self) -> &'static str {
        match self {
            Generator::Fast => "fast",
            Generator::Oracle => "oracle",
        }
    }
}

impl std::str::FromStr for Generator {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fast" => Ok(Generator::Fast),
            "oracle" => Ok(Generator::Oracle),
            other => Err(crate::error::invalid("generator", format!("`{other}` is not fast|oracle"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountEntry {
    pub n: usize,
    /// Decimal string, so no precision is lost in transit.
    pub count: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub schema_version: u32,
    pub d: usize,
    pub kind: AnimalKind,
    pub rooting: Rooting,
    pub counts: Vec<CountEntry>,
    pub generator: Generator,
    pub node_budget: Option<u64>,
}

impl CacheEntry {
    pub fn new(
        d: usize,
        kind: AnimalKind,
        rooting: Rooting,
        values: &[BigUint],
        generator: Generator,
        node_budget: Option<u64>,
    ) -> Self {
        CacheEntry {
            schema_version: SCHEMA_VERSION,
            d,
            kind,
            rooting,
            counts: values
                .iter()
                .enumerate()
                .map(|(i, c)| CountEntry {
                    n: i + 1,
                    count: c.to_string(),
                })
                .collect(),
            generator,
            node_budget,
        }
    }

    pub fn n_max(&self) -> usize {
        self.counts.len()
    }

    /// Counts for `n = 1..=n_max`; fails on gaps or unparsable strings.
    pub fn values(&self) -> Result<Vec<BigUint>> {
        self.counts
            .iter()
            .enumerate()
            .map(|(i, e)| {
                if e.n != i + 1 {
                    return Err(Error::Cache(format!("expected n={} but found n={}", i + 1, e.n)));
                }
                e.count
                    .parse::<BigUint>()
                    .map_err(|_| Error::Cache(format!("count at n={} is not a decimal integer", e.n)))
            })
            .collect()
    }
}

pub fn file_name(d: usize, kind: AnimalKind, rooting: Rooting) -> String {
    format!("counts_d{d}_{kind}_{rooting}.json")
}

fn io(e: std::io::Error, path: &Path) -> Error {
    Error::Cache(format!("{}: {e}", path.display()))
}

/// A cache directory. Nothing is created until the first store.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cache {
    dir: PathBuf,
}

/// How a lookup was served.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CacheUse {
    pub file: String,
    pub hit: bool,
    pub stored: bool,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// `flag`, else `$LATTICE_CACHE_DIR`, else the user cache directory.
    pub fn resolve(flag: Option<&Path>) -> Self {
        if let Some(dir) = flag {
            return Cache::new(dir);
        }
        if let Some(dir) = std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()) {
            return Cache::new(dir);
        }
        let base = std::env::var_os("XDG_CACHE_HOME")
            .filter(|v| !v.is_empty())
            .map(PathBuf::from)
            .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")))
            .unwrap_or_else(|| PathBuf::from("."));
        Cache::new(base.join("lattice-growth"))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, d: usize, kind: AnimalKind, rooting: Rooting) -> PathBuf {
        self.dir.join(file_name(d, kind, rooting))
    }

    /// The stored entry, or `None` when missing, unreadable, from another
    /// schema version, or describing a different key.
    pub fn load(&self, d: usize, kind: AnimalKind, rooting: Rooting) -> Option<CacheEntry> {
        let text = fs::read_to_string(self.path_for(d, kind, rooting)).ok()?;
        let entry: CacheEntry = serde_json::from_str(&text).ok()?;
        let valid = entry.schema_version == SCHEMA_VERSION
            && entry.d == d
            && entry.kind == kind
            && entry.rooting == rooting
            && entry.values().is_ok();
        valid.then_some(entry)
    }

    /// Writes through a temporary file so readers never see half an entry.
    pub fn store(&self, entry: &CacheEntry) -> Result<PathBuf> {
        fs::create_dir_all(&self.dir).map_err(|e| io(e, &self.dir))?;
        let path = self.path_for(entry.d, entry.kind, entry.rooting);
        let tmp = path.with_extension("json.tmp");
        let text = serde_json::to_string_pretty(entry).map_err(|e| Error::Cache(e.to_string()))?;
        fs::write(&tmp, text + "\n").map_err(|e| io(e, &tmp))?;
        fs::rename(&tmp, &path).map_err(|e| io(e, &path))?;
        Ok(path)
    }

    /// Every readable entry, sorted by file name.
    pub fn list(&self) -> Result<Vec<(String, CacheEntry)>> {
        let mut out = Vec::new();
        let dir = match fs::read_dir(&self.dir) {
            Ok(dir) => dir,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(out),
            Err(e) => return Err(io(e, &self.dir)),
        };
        for item in dir {
            let path = item.map_err(|e| io(e, &self.dir))?.path();
            let Some(name) = path.file_name().and_then(|n| n.to_str()) else {
                continue;
            };
            if !(name.starts_with("counts_") && name.ends_with(".json")) {
                continue;
            }
            if let Ok(entry) = fs::read_to_string(&path)
                .map_err(|e| e.to_string())
                .and_then(|t| serde_json::from_str::<CacheEntry>(&t).map_err(|e| e.to_string()))
            {
                out.push((name.to_string(), entry));
            }
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(out)
    }

    /// Removes every count file; returns how many were deleted.
    pub fn clear(&self) -> Result<usize> {
        let mut removed = 0;
        let dir = match fs::read_dir(&self.dir) {
            Ok(dir) => dir,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(0),
            Err(e) => return Err(io(e, &self.dir)),
        };
        for item in dir {
            let path = item.map_err(|e| io(e, &self.dir))?.path();
            let name = path.file_name().and_then(|n| n.to_str()).unwrap_or("");
            if name.starts_with("counts_") && (name.ends_with(".json") || name.ends_with(".json.tmp")) {
                fs::remove_file(&path).map_err(|e| io(e, &path))?;
                removed += 1;
            }
        }
        Ok(removed)
    }

    /// Counts for `1..=n_max`, served from the cache when an entry at least
    /// that long exists. Fresh complete results are stored for both
    /// rootings; partial results never are.
    pub fn counts(
        &self,
        d: usize,
        n_max: usize,
        kind: AnimalKind,
        rooting: Rooting,
        generator: Generator,
        cfg: &EnumConfig,
    ) -> Result<(Counts, CacheUse)> {
        let file = file_name(d, kind, rooting);
        if let Some(entry) = self.load(d, kind, rooting).filter(|e| e.n_max() >= n_max) {
            let mut values = entry.values()?;
            values.truncate(n_max);
            let counts = Counts {
                values,
                partial: false,
            };
            return Ok((counts, CacheUse { file, hit: true, stored: false }));
        }
        let counts = compute(d, n_max, kind, generator, cfg)?;
        let stored = !counts.0.partial;
        if stored {
            for (r, values) in [(Rooting::Lexmin, &counts.0.values), (Rooting::Origin, &counts.1.values)] {
                self.store(&CacheEntry::new(d, kind, r, values, generator, cfg.node_budget))?;
            }
        }
        let chosen = match rooting {
            Rooting::Lexmin => counts.0,
            Rooting::Origin => counts.1,
        };
        Ok((chosen, CacheUse { file, hit: false, stored }))
    }
}

/// Lexmin and origin counts from the chosen generator.
pub fn compute(
    d: usize,
    n_max: usize,
    kind: AnimalKind,
    generator: Generator,
    cfg: &EnumConfig,
) -> Result<(Counts, Counts)> {
    match generator {
        Generator::Fast => {
            let r = count_animals(d, n_max, kind, cfg)?;
            Ok((r.counts(Rooting::Lexmin), r.counts(Rooting::Origin)))
        }
        Generator::Oracle => {
            let mut lexmin = Vec::with_capacity(n_max);
            let mut origin = Vec::with_capacity(n_max);
            for n in 1..=n_max {
                lexmin.push(BigUint::from(enumerate_oracle(d, n, kind, Rooting::Lexmin)?.len()));
                origin.push(BigUint::from(enumerate_oracle(d, n, kind, Rooting::Origin)?.len()));
            }
            let wrap = |values| Counts {
                values,
                partial: false,
            };
            Ok((wrap(lexmin), wrap(origin)))
        }
    }
}
