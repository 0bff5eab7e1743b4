use std::fmt;
use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use doodle_core::{CanonicalKey, DoodleDiagram, GaussCode};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{line}: {source}")]
    Parse {
        path: PathBuf,
        line: usize,
        #[source]
        source: serde_json::Error,
    },
    #[error("{path}: {detail}")]
    Invalid { path: PathBuf, detail: String },
    #[error("no catalog for {n} crossings at {path}")]
    Missing { n: usize, path: PathBuf },
    #[error("unknown entry {0}")]
    UnknownName(String),
    #[error("bad entry name {0:?}")]
    BadName(String),
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> CatalogError + '_ {
    move |source| CatalogError::Io {
        path: path.to_path_buf(),
        source,
    }
}

/// `Xn^c_i`: `X` is `P` (prime) or `S` (super prime), `c` the number of
/// components and `i` the index within its group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Name {
    pub n: usize,
    pub m: usize,
    pub super_prime: bool,
    pub index: usize,
}

impl fmt::Display for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let x = if self.super_prime { 'S' } else { 'P' };
        write!(f, "{x}{}^{}_{}", self.n, self.m, self.index)
    }
}

impl FromStr for Name {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, CatalogError> {
        let bad = || CatalogError::BadName(s.to_string());
        let super_prime = match s.chars().next() {
            Some('S') => true,
            Some('P') => false,
            _ => return Err(bad()),
        };
        let (n, rest) = s[1..].split_once('^').ok_or_else(bad)?;
        let (m, i) = rest.split_once('_').ok_or_else(bad)?;
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        Ok(Name {
            n: num(n)?,
            m: num(m)?,
            super_prime,
            index: num(i)?,
        })
    }
}

/// One line of a catalog file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub n: usize,
    pub m: usize,
    pub connectivity: usize,
    pub prime: bool,
    pub super_prime: bool,
    pub code: String,
    pub gauss: String,
    /// Canonical key, hex encoded.
    pub key: String,
    pub hamiltonian_code: Option<String>,
    pub twin_word: String,
}

impl CatalogEntry {
    pub fn name(&self) -> Result<Name, CatalogError> {
        self.name.parse()
    }

    pub fn diagram(&self) -> Option<DoodleDiagram> {
        CanonicalKey::from_hex(&self.key)?.decode().ok()
    }

    pub fn gauss_code(&self) -> Option<GaussCode> {
        self.gauss.parse().ok()
    }
}

/// Entries sorted by `(n, m, X, i)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn find(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn write_jsonl(&self, path: &Path) -> Result<(), CatalogError> {
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir).map_err(io_err(dir))?;
        }
        let file = fs::File::create(path).map_err(io_err(path))?;
        let mut w = BufWriter::new(file);
        for e in &self.entries {
            let line = serde_json::to_string(e).expect("entries serialize");
            writeln!(w, "{line}").map_err(io_err(path))?;
        }
        w.flush().map_err(io_err(path))
    }

    pub fn read_jsonl(path: &Path) -> Result<Self, CatalogError> {
        let file = fs::File::open(path).map_err(io_err(path))?;
        let mut entries = Vec::new();
        for (i, line) in BufReader::new(file).lines().enumerate() {
            let line = line.map_err(io_err(path))?;
            if line.trim().is_empty() {
                continue;
            }
            let e: CatalogEntry = serde_json::from_str(&line).map_err(|source| CatalogError::Parse {
                path: path.to_path_buf(),
                line: i + 1,
                source,
            })?;
            entries.push(e);
        }
        let keys: std::collections::BTreeSet<&str> = entries.iter().map(|e| e.key.as_str()).collect();
        if keys.len() != entries.len() {
            return Err(CatalogError::Invalid {
                path: path.to_path_buf(),
                detail: "duplicate keys".into(),
            });
        }
        Ok(Catalog { entries })
    }
}

/// Default location of the catalog for `n` crossings inside `dir`.
pub fn catalog_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("doodles-{n:02}.jsonl"))
}

/// Sidecar file holding run metadata next to a catalog.
pub fn metadata_path(catalog: &Path) -> PathBuf {
    let mut s = catalog.as_os_str().to_owned();
    s.push(".meta.json");
    PathBuf::from(s)
}

/// Loads the catalog holding `name`.
pub fn lookup(dir: &Path, name: &str) -> Result<CatalogEntry, CatalogError> {
    let parsed: Name = name.parse()?;
    let path = catalog_path(dir, parsed.n);
    if !path.exists() {
        return Err(CatalogError::Missing { n: parsed.n, path });
    }
    Catalog::read_jsonl(&path)?
        .find(name)
        .cloned()
        .ok_or_else(|| CatalogError::UnknownName(name.to_string()))
}
