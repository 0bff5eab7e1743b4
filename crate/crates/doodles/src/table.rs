use std::collections::BTreeMap;
use std::fmt::Write;
use std::path::Path;

use crate::catalog::{catalog_path, Catalog, CatalogError};

/// Per `(n, m)`: prime but not super prime, then super prime.
pub type Counts = BTreeMap<(usize, usize), (usize, usize)>;

pub fn counts(catalog: &Catalog) -> Counts {
    let mut out = Counts::new();
    for e in catalog.entries.iter().filter(|e| e.prime) {
        let c = out.entry((e.n, e.m)).or_default();
        if e.super_prime {
            c.1 += 1;
        } else {
            c.0 += 1;
        }
    }
    out
}

/// Loads the catalogs for 6 to `max_n` crossings from `dir`.
pub fn load_counts(dir: &Path, max_n: usize) -> Result<Counts, CatalogError> {
    let mut out = Counts::new();
    for n in 6..=max_n {
        let path = catalog_path(dir, n);
        if !path.exists() {
            return Err(CatalogError::Missing { n, path });
        }
        out.extend(counts(&Catalog::read_jsonl(&path)?));
    }
    Ok(out)
}

/// The text grid: one row per crossing number, one column per component
/// count, cells `"a,b"` and blank when both are zero.
pub fn render(counts: &Counts, max_n: usize) -> String {
    let columns = counts.keys().map(|&(_, m)| m).max().unwrap_or(0).max(4);
    let mut s = String::new();
    write!(s, "{:>3}", "n").unwrap();
    for m in 1..=columns {
        write!(s, " | {:>6}", format!("m={m}")).unwrap();
    }
    s.push('\n');
    for n in 6..=max_n {
        write!(s, "{n:>3}").unwrap();
        for m in 1..=columns {
            write!(s, " | {:>6}", cell(counts, n, m)).unwrap();
        }
        s.push('\n');
    }
    s
}

/// The cell for `(n, m)` as printed in the table.
pub fn cell(counts: &Counts, n: usize, m: usize) -> String {
    match counts.get(&(n, m)) {
        Some(&(a, b)) if a + b > 0 => format!("{a},{b}"),
        _ => String::new(),
    }
}
