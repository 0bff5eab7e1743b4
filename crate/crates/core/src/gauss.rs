//! Gauss codes with side marks.
//!
//! Each component is listed as the sequence of crossings it passes. A visit
//! is marked `L` when the other strand at that crossing runs from the
//! traveller's right to its left, and `R` otherwise, so the two visits of a
//! crossing always carry opposite marks. Text form: tokens `<label><mark>`
//! with 1-based labels, separated by `,` within a component and `/` between
//! components, e.g. `1L,2R,1R,2L`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::diagram::{ccw, crossing_of, dart, opposite, DoodleDiagram};
use crate::error::{malformed, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    L,
    R,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Visit {
    /// 1-based crossing label.
    pub label: usize,
    pub side: Side,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussCode {
    pub components: Vec<Vec<Visit>>,
}

/// Extracts a Gauss code. Labels are assigned in order of first appearance.
pub fn gauss_code(d: &DoodleDiagram) -> Result<GaussCode> {
    if d.n() == 0 {
        return Err(Error::NoCrossings);
    }
    if !d.is_connected() {
        return Err(Error::Disconnected);
    }
    let darts = 4 * d.n();
    let mut used = vec![false; darts];
    let mut is_entry = vec![false; darts];
    let mut passes: Vec<Vec<usize>> = Vec::new();
    for start in 0..darts {
        if used[start] {
            continue;
        }
        let mut entries = Vec::new();
        let mut e = start;
        loop {
            used[e] = true;
            used[opposite(e)] = true;
            is_entry[e] = true;
            entries.push(e);
            e = d.partner(opposite(e));
            if e == start {
                break;
            }
        }
        passes.push(entries);
    }
    let mut label = vec![0usize; d.n()];
    let mut next = 1;
    let components = passes
        .iter()
        .map(|entries| {
            entries
                .iter()
                .map(|&e| {
                    let c = crossing_of(e);
                    if label[c] == 0 {
                        label[c] = next;
                        next += 1;
                    }
                    let side = if is_entry[ccw(e)] { Side::L } else { Side::R };
                    Visit { label: label[c], side }
                })
                .collect()
        })
        .collect();
    Ok(GaussCode { components })
}

/// Rebuilds the rotation system described by a Gauss code.
pub fn rebuild_from_gauss(code: &GaussCode) -> Result<DoodleDiagram> {
    let n = code.crossing_count();
    if n == 0 {
        return Err(malformed("gauss code", "no crossings"));
    }
    let mut seen: Vec<[u8; 2]> = vec![[0, 0]; n];
    for v in code.components.iter().flatten() {
        if v.label == 0 || v.label > n {
            return Err(malformed("gauss code", alloc::format!("label {} out of range", v.label)));
        }
        seen[v.label - 1][(v.side == Side::R) as usize] += 1;
    }
    if let Some(c) = seen.iter().position(|s| *s != [1, 1]) {
        return Err(malformed(
            "gauss code",
            alloc::format!("crossing {} needs exactly one L and one R visit", c + 1),
        ));
    }
    // The L visit runs 0 -> 2, the R visit 1 -> 3.
    let entry = |v: &Visit| dart(v.label - 1, if v.side == Side::L { 0 } else { 1 });
    let mut partner = vec![usize::MAX; 4 * n];
    for comp in &code.components {
        for (i, v) in comp.iter().enumerate() {
            let next = &comp[(i + 1) % comp.len()];
            let out = opposite(entry(v));
            let inn = entry(next);
            partner[out] = inn;
            partner[inn] = out;
        }
    }
    let d = DoodleDiagram::from_partner(partner, 0)?;
    if !d.is_plane() || !d.is_connected() {
        return Err(Error::UnrealizableCode);
    }
    Ok(d)
}

impl GaussCode {
    pub fn crossing_count(&self) -> usize {
        self.components.iter().map(Vec::len).sum::<usize>() / 2
    }
}

impl DoodleDiagram {
    pub fn gauss_code(&self) -> Result<GaussCode> {
        gauss_code(self)
    }
}

impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, comp) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            for (j, v) in comp.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                let side = if v.side == Side::L { 'L' } else { 'R' };
                write!(f, "{}{}", v.label, side)?;
            }
        }
        Ok(())
    }
}

impl FromStr for GaussCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut components = Vec::new();
        for part in s.trim().split('/') {
            let mut comp = Vec::new();
            for tok in part.split(',') {
                let tok = tok.trim();
                let (num, side) = match tok.chars().last() {
                    Some('L') => (&tok[..tok.len() - 1], Side::L),
                    Some('R') => (&tok[..tok.len() - 1], Side::R),
                    _ => return Err(malformed("gauss token", String::from(tok))),
                };
                let label = num.parse().map_err(|_| malformed("gauss token", String::from(tok)))?;
                comp.push(Visit { label, side });
            }
            components.push(comp);
        }
        Ok(GaussCode { components })
    }
}
