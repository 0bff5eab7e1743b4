use std::collections::{BTreeMap, BTreeSet};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;
use std::time::{Duration, Instant};

use doodle_core::hamiltonian::cycle_code;
use doodle_core::search::{assemble, run_task, tasks, CensusEntry, SearchStats};
use doodle_core::{CanonicalKey, Error};
use serde::Serialize;

use crate::catalog::{Catalog, CatalogEntry, Name};

/// Result of one census run.
#[derive(Clone, Debug)]
pub struct CensusRun {
    pub n: usize,
    pub workers: usize,
    pub catalog: Catalog,
    pub stats: SearchStats,
    /// Minimal diagrams found that are not prime and so are left out of the
    /// catalog.
    pub non_prime: Vec<CensusEntry>,
    pub elapsed: Duration,
}

/// Runs the search for `n` crossings on `workers` threads. The output does
/// not depend on `workers`.
pub fn run_census(n: usize, workers: usize) -> Result<CensusRun, Error> {
    if n < 6 {
        return Err(Error::TooFewCrossings);
    }
    let start = Instant::now();
    let workers = workers.max(1);
    let mut stats = SearchStats::default();
    let work = tasks(n, &mut stats)?;
    let next = AtomicUsize::new(0);
    let merged = Mutex::new((BTreeSet::<CanonicalKey>::new(), SearchStats::default()));
    thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| {
                let mut keys = BTreeSet::new();
                let mut local = SearchStats::default();
                loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    let Some(task) = work.get(i) else { break };
                    keys.extend(run_task(task, &mut local));
                }
                let mut m = merged.lock().expect("worker panicked");
                m.0.extend(keys);
                m.1 += local;
            });
        }
    });
    let (keys, found) = merged.into_inner().expect("worker panicked");
    stats += found;
    let (prime, non_prime) = assemble(&keys)?.into_iter().partition(|e| e.classification.is_prime);
    Ok(CensusRun {
        n,
        workers,
        catalog: build_catalog(n, prime),
        non_prime,
        stats,
        elapsed: start.elapsed(),
    })
}

/// Names the prime entries and fills in the derived columns.
pub fn build_catalog(n: usize, entries: Vec<CensusEntry>) -> Catalog {
    let mut groups: BTreeMap<(usize, bool), Vec<CensusEntry>> = BTreeMap::new();
    for e in entries.into_iter().filter(|e| e.classification.is_prime) {
        groups
            .entry((e.classification.m, e.classification.is_super_prime))
            .or_default()
            .push(e);
    }
    let mut out = Vec::new();
    for ((m, super_prime), mut group) in groups {
        group.sort_by(|a, b| a.key.cmp(&b.key));
        for (i, e) in group.into_iter().enumerate() {
            let name = Name {
                n,
                m,
                super_prime,
                index: i + 1,
            };
            out.push(entry(name, &e));
        }
    }
    Catalog { entries: out }
}

fn entry(name: Name, e: &CensusEntry) -> CatalogEntry {
    let d = &e.diagram;
    let c = &e.classification;
    CatalogEntry {
        name: name.to_string(),
        n: d.n(),
        m: c.m,
        connectivity: c.connectivity,
        prime: c.is_prime,
        super_prime: c.is_super_prime,
        code: e.code.to_string(),
        gauss: d.gauss_code().map(|g| g.to_string()).unwrap_or_default(),
        key: e.key.to_hex(),
        hamiltonian_code: d.find_hamiltonian().map(|h| cycle_code(d, &h).to_string()),
        twin_word: d.to_twin_word().map(|w| w.to_string()).unwrap_or_default(),
    }
}

/// Contents of the sidecar file written next to a catalog.
#[derive(Clone, Debug, Serialize)]
pub struct RunMetadata {
    pub tool_version: &'static str,
    pub n: usize,
    pub workers: usize,
    pub entries: usize,
    pub non_prime_dropped: usize,
    pub seconds: f64,
    pub chord_patterns: usize,
    pub partial_matrices: usize,
    pub completions: usize,
    pub admissible: usize,
}

impl CensusRun {
    pub fn metadata(&self) -> RunMetadata {
        RunMetadata {
            tool_version: env!("CARGO_PKG_VERSION"),
            n: self.n,
            workers: self.workers,
            entries: self.catalog.entries.len(),
            non_prime_dropped: self.non_prime.len(),
            seconds: self.elapsed.as_secs_f64(),
            chord_patterns: self.stats.patterns,
            partial_matrices: self.stats.partials,
            completions: self.stats.completions,
            admissible: self.stats.admissible,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_crossings() {
        let run = run_census(6, 2).unwrap();
        let names: Vec<&str> = run.catalog.entries.iter().map(|e| e.name.as_str()).collect();
        assert_eq!(names, ["S6^3_1"]);
        let e = &run.catalog.entries[0];
        assert_eq!(e.code, "6: 8");
        assert!(e.hamiltonian_code.is_some());
        assert_eq!(e.diagram().unwrap().canonical_key().to_hex(), e.key);
    }

    #[test]
    fn too_small() {
        assert!(run_census(5, 1).is_err());
    }
}
