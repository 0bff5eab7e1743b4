//! Canonical keys for rotation systems up to relabeling and reflection.
//!
//! Each connected piece is serialized by a breadth-first relabeling from a
//! chosen starting slot, reading slots either counterclockwise or clockwise
//! (the latter is the mirror image). The lexicographically smallest
//! serialization over all starts and both readings is the piece's code; the
//! key is the sorted list of piece codes plus the floating-circle count.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::diagram::{crossing_of, dart, slot_of, DoodleDiagram};
use crate::error::{malformed, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn from_bytes(bytes: Vec<u8>) -> Self {
        Self(bytes)
    }

    pub fn to_hex(&self) -> alloc::string::String {
        use core::fmt::Write;
        let mut s = alloc::string::String::with_capacity(self.0.len() * 2);
        for b in &self.0 {
            let _ = write!(s, "{b:02x}");
        }
        s
    }

    pub fn from_hex(hex: &str) -> Option<Self> {
        if !hex.len().is_multiple_of(2) {
            return None;
        }
        (0..hex.len())
            .step_by(2)
            .map(|i| u8::from_str_radix(hex.get(i..i + 2)?, 16).ok())
            .collect::<Option<Vec<u8>>>()
            .map(Self)
    }
}

impl CanonicalKey {
    /// The diagram in canonical labelling: crossings numbered in
    /// breadth-first order, each piece appended in key order.
    pub fn decode(&self) -> Result<DoodleDiagram> {
        let bytes = &self.0;
        let bad = || malformed("canonical key", "truncated");
        let mut pos = 0;
        let mut next = || -> Result<usize> {
            let hi = *bytes.get(pos).ok_or_else(bad)?;
            let lo = *bytes.get(pos + 1).ok_or_else(bad)?;
            pos += 2;
            Ok(u16::from_be_bytes([hi, lo]) as usize)
        };
        let n = next()?;
        let floating = next()?;
        let pieces = next()?;
        let mut partner = Vec::with_capacity(4 * n);
        for _ in 0..pieces {
            let len = next()?;
            if len % 8 != 0 {
                return Err(malformed("canonical key", "piece length"));
            }
            let base = partner.len() / 4;
            for _ in 0..len / 2 {
                let w = next()?;
                let s = next()?;
                if s > 3 {
                    return Err(malformed("canonical key", "slot out of range"));
                }
                partner.push(dart(base + w, s));
            }
        }
        if partner.len() != 4 * n || partner.iter().any(|&x| x >= 4 * n) {
            return Err(malformed("canonical key", "crossing count"));
        }
        DoodleDiagram::from_partner(partner, floating)
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

fn push_u16(out: &mut Vec<u8>, v: usize) {
    let v = u16::try_from(v).expect("diagram too large for canonical key");
    out.extend_from_slice(&v.to_be_bytes());
}

/// Serialization from one start. Returns `None` as soon as the partial code
/// exceeds `best`.
fn bfs_code(d: &DoodleDiagram, start: usize, mirror: bool, best: Option<&[u32]>) -> Option<Vec<u32>> {
    let n = d.n();
    let mut label = vec![u32::MAX; n];
    let mut base = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    let c0 = crossing_of(start);
    label[c0] = 0;
    base[c0] = slot_of(start);
    order.push(c0);
    let slot_at = |base: usize, j: usize| if mirror { (base + 4 - j) & 3 } else { (base + j) & 3 };
    let local = |base: usize, s: usize| if mirror { (base + 4 - s) & 3 } else { (s + 4 - base) & 3 };
    let mut code = Vec::with_capacity(2 * 4 * n);
    let mut tight = best.is_some();
    let mut head = 0;
    while head < order.len() {
        let c = order[head];
        head += 1;
        for j in 0..4 {
            let p = d.partner(dart(c, slot_at(base[c], j)));
            let w = crossing_of(p);
            if label[w] == u32::MAX {
                label[w] = order.len() as u32;
                base[w] = slot_of(p);
                order.push(w);
            }
            for v in [label[w], local(base[w], slot_of(p)) as u32] {
                if tight {
                    let b = best.unwrap()[code.len()];
                    match v.cmp(&b) {
                        Ordering::Less => tight = false,
                        Ordering::Greater => return None,
                        Ordering::Equal => {}
                    }
                }
                code.push(v);
            }
        }
    }
    Some(code)
}

fn connected_code(d: &DoodleDiagram) -> Vec<u32> {
    let mut best: Option<Vec<u32>> = None;
    for start in 0..4 * d.n() {
        for mirror in [false, true] {
            if let Some(code) = bfs_code(d, start, mirror, best.as_deref()) {
                best = Some(code);
            }
        }
    }
    best.unwrap_or_default()
}

/// Canonical key of any diagram. Two connected diagrams have equal keys
/// exactly when one maps onto the other by relabeling crossings and slots
/// while preserving, or globally reversing, every cyclic order.
pub fn canonical_key(d: &DoodleDiagram) -> CanonicalKey {
    let mut pieces: Vec<Vec<u32>> = if d.is_connected() || (d.n() > 0 && d.graph_components().0 == 1) {
        vec![connected_code(d)]
    } else {
        d.connected_pieces().iter().map(connected_code).collect()
    };
    pieces.sort();
    let mut out = Vec::new();
    push_u16(&mut out, d.n());
    push_u16(&mut out, d.floating_circles());
    push_u16(&mut out, pieces.len());
    for p in &pieces {
        push_u16(&mut out, p.len());
        for &v in p {
            push_u16(&mut out, v as usize);
        }
    }
    CanonicalKey(out)
}

impl DoodleDiagram {
    pub fn canonical_key(&self) -> CanonicalKey {
        canonical_key(self)
    }
}
