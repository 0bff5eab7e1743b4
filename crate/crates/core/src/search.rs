//! Staged census search over dual incidence matrices.
//!
//! With a largest region (a `p`-gon) taken as infinite, the rest of the
//! dual graph lies in a disc whose boundary ring has `2p` vertices:
//! v-boundary vertices at even positions and e-boundary vertices, which
//! also reach the infinite vertex, at odd positions. The remaining
//! `n + 1 - 2p` dual vertices are interior.
//!
//! Stage 1 picks the chords between ring vertices, stage 2 distributes the
//! interior vertices over the chord regions and attaches every inside
//! vertex, and stage 3 adds the remaining edges. Every completed matrix is
//! checked for admissibility and turned back into a doodle.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::ops::AddAssign;

use crate::canonical::CanonicalKey;
use crate::circles::find_removable_vertex_circles;
use crate::classify::{classify, Classification};
use crate::codes::{enumerate_codes, DoodleCode};
use crate::diagram::DoodleDiagram;
use crate::dual::{admissible_embedding, doodle_from_dual, IncidenceMatrix};
use crate::error::{Error, Result};

const NONE: usize = usize::MAX;

/// A chord `(a, b)` between ring vertices, `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Chord {
    pub a: usize,
    pub b: usize,
}

impl Chord {
    /// Non-adjacent endpoints of opposite parity on a ring of `2p`.
    pub fn is_valid(self, p: usize) -> bool {
        let Chord { a, b } = self;
        a < b && b < 2 * p && b - a >= 2 && !(a == 0 && b == 2 * p - 1) && (a + b) % 2 == 1
    }

    /// Whether the two chords cross inside the disc.
    pub fn crosses(self, other: Chord) -> bool {
        let (a, b, c, d) = (self.a, self.b, other.a, other.b);
        (a < c && c < b && b < d) || (c < a && a < d && d < b)
    }
}

/// A face of the disc cut by chords, as its ring vertices in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordRegion {
    pub vertices: Vec<usize>,
    /// Ring edges `(i, i + 1)` on the region boundary, by `i`.
    pub ring_edges: Vec<usize>,
    /// v-boundary vertices of the region that are not chord endpoints.
    pub inside: Vec<usize>,
}

impl ChordRegion {
    pub fn sides(&self) -> usize {
        self.vertices.len()
    }

    /// Whether `k` interior vertices can quadrangulate the region.
    pub fn admits(&self, k: usize) -> bool {
        match self.sides() {
            4 => (k == 0 && self.inside.is_empty()) || k >= 4,
            s if s >= 6 && s % 2 == 0 => k >= 1,
            _ => false,
        }
    }

    pub fn min_interior(&self) -> Option<usize> {
        match self.sides() {
            4 if self.inside.is_empty() => Some(0),
            s => min_interior_for_region(s),
        }
    }

    /// Edges strictly inside the region once it holds `k` interior vertices.
    pub fn required_edges(&self, k: usize) -> usize {
        2 * k + self.sides() / 2 - 2
    }
}

/// Fewest interior vertices that quadrangulate a chord region with this
/// many sides, assuming it has an inside vertex.
pub fn min_interior_for_region(boundary_edge_count: usize) -> Option<usize> {
    match boundary_edge_count {
        s if s % 2 == 1 || s < 4 => None,
        4 => Some(4),
        _ => Some(1),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordPattern {
    pub p: usize,
    pub chords: Vec<Chord>,
    /// Regions in search order.
    pub regions: Vec<ChordRegion>,
}

impl ChordPattern {
    pub fn new(p: usize, chords: Vec<Chord>) -> Self {
        let mut polys: Vec<Vec<usize>> = vec![(0..2 * p).collect()];
        for ch in &chords {
            let i = polys
                .iter()
                .position(|poly| poly.contains(&ch.a) && poly.contains(&ch.b))
                .expect("non-crossing chords");
            let poly = polys.swap_remove(i);
            let inner: Vec<usize> = poly.iter().copied().filter(|&x| ch.a <= x && x <= ch.b).collect();
            let outer: Vec<usize> = poly.iter().copied().filter(|&x| x <= ch.a || x >= ch.b).collect();
            polys.push(inner);
            polys.push(outer);
        }
        let ends: BTreeSet<usize> = chords.iter().flat_map(|c| [c.a, c.b]).collect();
        let mut regions: Vec<ChordRegion> = polys
            .into_iter()
            .map(|vertices| {
                let len = vertices.len();
                let ring_edges = (0..len)
                    .filter_map(|i| {
                        let (u, v) = (vertices[i], vertices[(i + 1) % len]);
                        (v == (u + 1) % (2 * p)).then_some(u)
                    })
                    .collect::<BTreeSet<usize>>()
                    .into_iter()
                    .collect();
                let inside = vertices.iter().copied().filter(|v| v % 2 == 0 && !ends.contains(v)).collect();
                ChordRegion {
                    vertices,
                    ring_edges,
                    inside,
                }
            })
            .collect();
        let rank = |v: usize| (v + 2 * p - 1) % (2 * p);
        regions.sort_by_key(|r| {
            (
                r.ring_edges.first().copied().unwrap_or(NONE),
                r.vertices.iter().map(|&v| rank(v)).min(),
            )
        });
        ChordPattern { p, chords, regions }
    }

    pub fn min_interior(&self) -> Option<usize> {
        self.regions.iter().map(ChordRegion::min_interior).sum()
    }
}

fn all_chords(p: usize) -> Vec<Chord> {
    let mut out = Vec::new();
    for a in 0..2 * p {
        for b in a + 1..2 * p {
            let c = Chord { a, b };
            if c.is_valid(p) {
                out.push(c);
            }
        }
    }
    out
}

/// Chord patterns whose regions can be filled with at most `budget` interior
/// vertices. Nonempty patterns start from a chord `(0, b)` with `b <= p`,
/// which every pattern reaches under a rotation or reflection of the ring.
pub fn enumerate_chord_patterns(p: usize, interior_budget: usize) -> Vec<ChordPattern> {
    patterns(p, interior_budget, true)
}

fn patterns(p: usize, budget: usize, symmetric: bool) -> Vec<ChordPattern> {
    let chords = all_chords(p);
    let mut queue: VecDeque<Vec<Chord>> = VecDeque::new();
    queue.push_back(Vec::new());
    for &c in &chords {
        if !symmetric || (c.a == 0 && c.b <= p) {
            queue.push_back(vec![c]);
        }
    }
    let mut out = Vec::new();
    while let Some(pattern) = queue.pop_front() {
        let Some(&last) = pattern.last() else {
            out.push(ChordPattern::new(p, pattern));
            continue;
        };
        for &c in chords.iter().filter(|&&c| c > last) {
            if pattern.iter().all(|x| !x.crosses(c)) {
                let mut next = pattern.clone();
                next.push(c);
                queue.push_back(next);
            }
        }
        let pat = ChordPattern::new(p, pattern);
        out.push(pat);
    }
    out.retain(|pat| pat.min_interior().is_some_and(|m| m <= budget));
    out
}

/// A stage-2 matrix together with the region bookkeeping stage 3 needs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partial {
    pub matrix: IncidenceMatrix,
    /// Ring vertices of each region.
    pub region_boundary: Vec<Vec<usize>>,
    /// Interior labels `start..end` of each region.
    pub region_interior: Vec<(usize, usize)>,
    /// Edges still to add in each region.
    pub need: Vec<usize>,
    /// Interior choice of every inside vertex, `usize::MAX` elsewhere.
    pub choice: Vec<usize>,
}

impl Partial {
    fn region_of_interior(&self, v: usize) -> usize {
        self.region_interior
            .iter()
            .position(|&(s, e)| s <= v && v < e)
            .expect("interior vertex")
    }
}

/// Largest valency of a finite dual vertex.
fn max_valency(code: &DoodleCode) -> usize {
    let s = code.finite_valency_spectrum();
    s.iter().rposition(|&c| c > 0).unwrap_or(0)
}

/// Every distribution of `interior_count` vertices over the regions and
/// every attachment of the inside vertices, up to renumbering the interior
/// vertices of a region.
pub fn enumerate_interior_choices(pattern: &ChordPattern, interior_count: usize, code: &DoodleCode) -> Vec<Partial> {
    interior_choices(pattern, interior_count, code, true)
}

fn interior_choices(pattern: &ChordPattern, interior_count: usize, code: &DoodleCode, symmetric: bool) -> Vec<Partial> {
    let mut out = Vec::new();
    let mut ks = Vec::with_capacity(pattern.regions.len());
    distribute(pattern, interior_count, code, symmetric, &mut ks, &mut out);
    out
}

fn distribute(
    pattern: &ChordPattern,
    left: usize,
    code: &DoodleCode,
    symmetric: bool,
    ks: &mut Vec<usize>,
    out: &mut Vec<Partial>,
) {
    let i = ks.len();
    if i == pattern.regions.len() {
        if left == 0 {
            attach_all(pattern, code, symmetric, ks, out);
        }
        return;
    }
    for k in 0..=left {
        if pattern.regions[i].admits(k) {
            ks.push(k);
            distribute(pattern, left - k, code, symmetric, ks, out);
            ks.pop();
        }
    }
}

fn attach_all(pattern: &ChordPattern, code: &DoodleCode, symmetric: bool, ks: &[usize], out: &mut Vec<Partial>) {
    let p = pattern.p;
    let n = code.n();
    let mut base = IncidenceMatrix::ring(n, p);
    for c in &pattern.chords {
        base.set(c.a, c.b);
    }
    let mut region_interior = Vec::new();
    let mut start = 2 * p;
    for &k in ks {
        region_interior.push((start, start + k));
        start += k;
    }
    let partial = Partial {
        matrix: base,
        region_boundary: pattern.regions.iter().map(|r| r.vertices.clone()).collect(),
        region_interior,
        need: pattern
            .regions
            .iter()
            .zip(ks)
            .map(|(r, &k)| r.required_edges(k) - r.inside.len())
            .collect(),
        choice: vec![NONE; n + 1],
    };
    // Inside vertices across all regions, each with its region's label range.
    let slots: Vec<(usize, usize, usize)> = pattern
        .regions
        .iter()
        .enumerate()
        .flat_map(|(i, r)| {
            let (s, e) = partial.region_interior[i];
            r.inside.iter().map(move |&v| (v, s, e))
        })
        .collect();
    let cap = max_valency(code);
    let mut counts = vec![0usize; n + 1];
    let mut current = partial;
    choose(&slots, 0, cap, symmetric, &mut counts, &mut current, out);
}

fn choose(
    slots: &[(usize, usize, usize)],
    i: usize,
    cap: usize,
    symmetric: bool,
    counts: &mut [usize],
    current: &mut Partial,
    out: &mut Vec<Partial>,
) {
    let Some(&(v, s, e)) = slots.get(i) else {
        out.push(current.clone());
        return;
    };
    // Labels are used in order of first appearance within a region.
    let limit = if symmetric {
        let used = (s..e).take_while(|&w| counts[w] > 0).count();
        (s + used + 1).min(e)
    } else {
        e
    };
    for w in s..limit {
        if counts[w] >= cap {
            continue;
        }
        counts[w] += 1;
        current.matrix.set(v, w);
        current.choice[v] = w;
        choose(slots, i + 1, cap, symmetric, counts, current, out);
        current.choice[v] = NONE;
        current.matrix.clear(v, w);
        counts[w] -= 1;
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub patterns: usize,
    pub partials: usize,
    /// Completed matrices passed to the admissibility check.
    pub completions: usize,
    pub admissible: usize,
    /// Admissible matrices whose graph was checked to be connected.
    pub connectivity_checks: usize,
}

impl AddAssign for SearchStats {
    fn add_assign(&mut self, o: Self) {
        self.patterns += o.patterns;
        self.partials += o.partials;
        self.completions += o.completions;
        self.admissible += o.admissible;
        self.connectivity_checks += o.connectivity_checks;
    }
}

struct Completion<'a> {
    code: &'a DoodleCode,
    spectrum: Vec<usize>,
    max_val: usize,
    locs: Vec<(usize, usize, usize)>,
    /// Vertices whose last location precedes each index.
    ready_at: Vec<Vec<usize>>,
    m: IncidenceMatrix,
    degree: Vec<usize>,
    remaining: Vec<usize>,
    colour: Vec<u8>,
    need: Vec<usize>,
    region_left: Vec<usize>,
    hist: Vec<usize>,
    stats: SearchStats,
}

impl<'a> Completion<'a> {
    fn new(partial: &'a Partial, code: &'a DoodleCode, symmetric: bool) -> Self {
        let m = partial.matrix.clone();
        let size = m.size();
        let ring = 2 * m.p();
        let mut locs = Vec::new();
        for r in 0..size {
            for c in (r + 1).max(ring)..size {
                let reg = partial.region_of_interior(c);
                let same = if r < ring {
                    partial.region_boundary[reg].contains(&r)
                } else {
                    partial.region_of_interior(r) == reg
                };
                if !same || m.get(r, c) {
                    continue;
                }
                if symmetric && partial.choice[r] != NONE && c < partial.choice[r] {
                    continue;
                }
                locs.push((r, c, reg));
            }
        }
        let mut last = vec![None; size];
        let mut remaining = vec![0usize; size];
        let mut region_left = vec![0usize; partial.need.len()];
        for (i, &(r, c, reg)) in locs.iter().enumerate() {
            last[r] = Some(i);
            last[c] = Some(i);
            remaining[r] += 1;
            remaining[c] += 1;
            region_left[reg] += 1;
        }
        let mut ready_at = vec![Vec::new(); locs.len() + 1];
        for v in 0..size {
            ready_at[last[v].map_or(0, |i| i + 1)].push(v);
        }
        let mut colour = vec![2u8; size];
        for (v, c) in colour.iter_mut().enumerate().take(ring) {
            *c = (v % 2) as u8;
        }
        for v in 0..ring {
            if partial.choice[v] != NONE {
                colour[partial.choice[v]] = 1 - colour[v];
            }
        }
        let degree = (0..size).map(|v| m.valency(v)).collect();
        let spectrum = code.finite_valency_spectrum();
        let max_val = max_valency(code);
        Completion {
            code,
            hist: vec![0; spectrum.len()],
            spectrum,
            max_val,
            locs,
            ready_at,
            m,
            degree,
            remaining,
            colour,
            need: partial.need.clone(),
            region_left,
            stats: SearchStats::default(),
        }
    }

    fn finalize(&mut self, idx: usize) -> Option<usize> {
        let mut done = 0;
        for k in 0..self.ready_at[idx].len() {
            let v = self.ready_at[idx][k];
            let d = self.degree[v];
            if d < 3 || d > self.max_val || self.hist[d] >= self.spectrum[d] {
                for &w in &self.ready_at[idx][..done] {
                    self.hist[self.degree[w]] -= 1;
                }
                return None;
            }
            self.hist[d] += 1;
            done += 1;
        }
        Some(done)
    }

    fn unfinalize(&mut self, idx: usize) {
        for &w in &self.ready_at[idx] {
            self.hist[self.degree[w]] -= 1;
        }
    }

    fn run<F: FnMut(&IncidenceMatrix, &crate::dual::PlaneGraph)>(&mut self, idx: usize, emit: &mut F) {
        if self.finalize(idx).is_none() {
            return;
        }
        if idx == self.locs.len() {
            self.leaf(emit);
            self.unfinalize(idx);
            return;
        }
        let (r, c, reg) = self.locs[idx];
        self.remaining[r] -= 1;
        self.remaining[c] -= 1;
        self.region_left[reg] -= 1;
        // Take the edge.
        if self.need[reg] > 0 && self.degree[r] < self.max_val && self.degree[c] < self.max_val {
            let (cr, cc) = (self.colour[r], self.colour[c]);
            if cr == 2 || cc == 2 || cr != cc {
                let set_r = cr == 2 && cc != 2;
                let set_c = cc == 2 && cr != 2;
                if set_r {
                    self.colour[r] = 1 - cc;
                }
                if set_c {
                    self.colour[c] = 1 - cr;
                }
                self.need[reg] -= 1;
                self.degree[r] += 1;
                self.degree[c] += 1;
                self.m.set(r, c);
                self.run(idx + 1, emit);
                self.m.clear(r, c);
                self.degree[r] -= 1;
                self.degree[c] -= 1;
                self.need[reg] += 1;
                if set_r {
                    self.colour[r] = 2;
                }
                if set_c {
                    self.colour[c] = 2;
                }
            }
        }
        // Leave it out.
        if self.need[reg] <= self.region_left[reg]
            && self.degree[r] + self.remaining[r] >= 3
            && self.degree[c] + self.remaining[c] >= 3
        {
            self.run(idx + 1, emit);
        }
        self.region_left[reg] += 1;
        self.remaining[r] += 1;
        self.remaining[c] += 1;
        self.unfinalize(idx);
    }

    fn leaf<F: FnMut(&IncidenceMatrix, &crate::dual::PlaneGraph)>(&mut self, emit: &mut F) {
        self.stats.completions += 1;
        if let Some(g) = admissible_embedding(&self.m, self.code) {
            self.stats.admissible += 1;
            assert!(g.is_connected(), "admissible matrix with a disconnected graph");
            self.stats.connectivity_checks += 1;
            emit(&self.m, &g);
        }
    }
}

/// Admissible completions of a stage-2 matrix.
pub fn complete_matrix(partial: &Partial, code: &DoodleCode) -> Vec<IncidenceMatrix> {
    let mut out = Vec::new();
    let mut c = Completion::new(partial, code, true);
    c.run(0, &mut |m, _| out.push(m.clone()));
    out
}

/// Runs stage 3 on one partial matrix, returning the keys of the doodles found.
pub fn search_partial(partial: &Partial, code: &DoodleCode, stats: &mut SearchStats) -> BTreeSet<CanonicalKey> {
    search_partial_with(partial, code, true, stats)
}

fn search_partial_with(
    partial: &Partial,
    code: &DoodleCode,
    symmetric: bool,
    stats: &mut SearchStats,
) -> BTreeSet<CanonicalKey> {
    let mut keys = BTreeSet::new();
    let mut c = Completion::new(partial, code, symmetric);
    c.run(0, &mut |_, g| {
        let d = doodle_from_dual(g).expect("admissible graphs are quadrangulations");
        keys.insert(d.canonical_key());
    });
    *stats += c.stats;
    keys
}

/// One unit of stage-3 work.
#[derive(Clone, Debug)]
pub struct Task {
    pub code: DoodleCode,
    pub partial: Partial,
}

/// Stages 1 and 2 for every prime code of `n`.
pub fn tasks(n: usize, stats: &mut SearchStats) -> Result<Vec<Task>> {
    tasks_with(n, true, stats)
}

fn tasks_with(n: usize, symmetric: bool, stats: &mut SearchStats) -> Result<Vec<Task>> {
    let mut out = Vec::new();
    for code in enumerate_codes(n, true)? {
        let p = code.p();
        if 2 * p > n + 1 {
            continue;
        }
        let budget = n + 1 - 2 * p;
        for pattern in patterns(p, budget, symmetric) {
            stats.patterns += 1;
            for partial in interior_choices(&pattern, budget, &code, symmetric) {
                stats.partials += 1;
                out.push(Task {
                    code: code.clone(),
                    partial,
                });
            }
        }
    }
    Ok(out)
}

pub fn run_task(task: &Task, stats: &mut SearchStats) -> BTreeSet<CanonicalKey> {
    search_partial(&task.partial, &task.code, stats)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusEntry {
    pub key: CanonicalKey,
    /// The diagram in canonical labelling.
    pub diagram: DoodleDiagram,
    pub code: DoodleCode,
    pub classification: Classification,
}

/// Decodes, drops diagrams with removable vertex circles and classifies.
/// Entries come out in key order.
pub fn assemble(keys: &BTreeSet<CanonicalKey>) -> Result<Vec<CensusEntry>> {
    let mut out = Vec::new();
    for key in keys {
        let diagram = key.decode()?;
        if !diagram.is_minimal() {
            return Err(Error::NotMinimal);
        }
        if !find_removable_vertex_circles(&diagram).is_empty() {
            continue;
        }
        let code = crate::codes::code_of(&diagram)?;
        let classification = classify(&diagram)?;
        out.push(CensusEntry {
            key: key.clone(),
            diagram,
            code,
            classification,
        });
    }
    Ok(out)
}

/// The reduced minimal doodles with `n` crossings found by the search,
/// single-threaded.
pub fn enumerate_doodles(n: usize) -> Result<(Vec<CensusEntry>, SearchStats)> {
    enumerate_with(n, true)
}

/// The same census with every symmetry reduction switched off: all chord
/// patterns, all interior labellings and no choice ordering. Slow; a
/// cross-check for small `n`.
pub fn enumerate_doodles_unreduced(n: usize) -> Result<(Vec<CensusEntry>, SearchStats)> {
    enumerate_with(n, false)
}

fn enumerate_with(n: usize, symmetric: bool) -> Result<(Vec<CensusEntry>, SearchStats)> {
    if n < 6 {
        return Err(Error::TooFewCrossings);
    }
    let mut stats = SearchStats::default();
    let mut keys = BTreeSet::new();
    for task in tasks_with(n, symmetric, &mut stats)? {
        keys.extend(search_partial_with(&task.partial, &task.code, symmetric, &mut stats));
    }
    Ok((assemble(&keys)?, stats))
}
