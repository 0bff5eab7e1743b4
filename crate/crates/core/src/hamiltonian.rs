//! Hamiltonian circuits and cycle codes.
//!
//! A Hamiltonian circuit splits the sphere into two discs. The remaining
//! edges are chords drawn in one disc or the other: red chords lie to the
//! left of the direction of travel, blue chords to the right. Labelling the
//! crossings `0..n` along the circuit, every crossing carries two chord ends,
//! so the chords form disjoint cycles. A cycle code lists each cycle as
//! entries `i+j` (red) or `i-j` (blue): a chord from `i` to `(i + j) mod n`.
//! Example: `(0+2,2+2,4+2)(1-2,3-2,5-2)`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::diagram::{ccw, crossing_of, dart, Dart, DoodleDiagram};
use crate::error::{malformed, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Colour {
    Red,
    Blue,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HamiltonianCircuit {
    /// Crossings in circuit order.
    pub order: Vec<usize>,
    /// `darts[i]` leaves `order[i]` towards `order[i + 1]`.
    pub darts: Vec<Dart>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleCode {
    pub n: usize,
    /// Entries `(i, colour, j)`.
    pub cycles: Vec<Vec<(usize, Colour, usize)>>,
}

/// First Hamiltonian circuit found by backtracking from crossing 0.
pub fn find_hamiltonian(d: &DoodleDiagram) -> Option<HamiltonianCircuit> {
    let n = d.n();
    if n < 3 || !d.is_connected() {
        return None;
    }
    let mut state = Search {
        d,
        visited: vec![false; n],
        darts: Vec::with_capacity(n),
    };
    state.visited[0] = true;
    if !state.extend(0) {
        return None;
    }
    let mut order = vec![0];
    for &x in &state.darts[..n - 1] {
        order.push(crossing_of(d.partner(x)));
    }
    Some(HamiltonianCircuit {
        order,
        darts: state.darts,
    })
}

struct Search<'a> {
    d: &'a DoodleDiagram,
    visited: Vec<bool>,
    darts: Vec<Dart>,
}

impl Search<'_> {
    fn extend(&mut self, at: usize) -> bool {
        let n = self.d.n();
        if self.darts.len() == n - 1 {
            for s in 0..4 {
                let x = dart(at, s);
                if crossing_of(self.d.partner(x)) == 0 && !self.uses_edge(x) {
                    self.darts.push(x);
                    return true;
                }
            }
            return false;
        }
        if !self.rest_connected(at) {
            return false;
        }
        for s in 0..4 {
            let x = dart(at, s);
            let next = crossing_of(self.d.partner(x));
            if self.visited[next] {
                continue;
            }
            self.visited[next] = true;
            self.darts.push(x);
            if self.extend(next) {
                return true;
            }
            self.darts.pop();
            self.visited[next] = false;
        }
        false
    }

    fn uses_edge(&self, x: Dart) -> bool {
        let e = self.d.edge_id(x);
        self.darts.iter().any(|&y| self.d.edge_id(y) == e)
    }

    /// The unvisited crossings must stay connected to the current end.
    fn rest_connected(&self, at: usize) -> bool {
        let mut seen = self.visited.clone();
        let mut stack = vec![at];
        let mut reached = 0;
        while let Some(v) = stack.pop() {
            for w in self.d.neighbours(v) {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == self.visited.iter().filter(|&&v| !v).count()
    }
}

/// Chord sides relative to a circuit, as `(dart, colour)` for each chord end.
fn chord_ends(d: &DoodleDiagram, h: &HamiltonianCircuit) -> Vec<(Dart, Colour)> {
    let n = h.order.len();
    let mut out = Vec::with_capacity(2 * n);
    for i in 0..n {
        let out_slot = h.darts[i];
        let in_slot = d.partner(h.darts[(i + n - 1) % n]);
        let mut x = ccw(out_slot);
        let mut colour = Colour::Red;
        while x != out_slot {
            if x == in_slot {
                colour = Colour::Blue;
            } else {
                out.push((x, colour));
            }
            x = ccw(x);
        }
    }
    out
}

/// The lexicographically smallest cycle code over all starting crossings and
/// both directions of travel.
pub fn cycle_code(d: &DoodleDiagram, h: &HamiltonianCircuit) -> CycleCode {
    let n = h.order.len();
    let mut best: Option<(String, CycleCode)> = None;
    let reversed = reverse(d, h);
    for circuit in [h, &reversed] {
        for origin in 0..n {
            let code = code_from(d, circuit, origin);
            let text = alloc::format!("{code}");
            if best.as_ref().is_none_or(|(t, _)| text < *t) {
                best = Some((text, code));
            }
        }
    }
    best.expect("non-empty circuit").1
}

fn reverse(d: &DoodleDiagram, h: &HamiltonianCircuit) -> HamiltonianCircuit {
    let n = h.order.len();
    let order: Vec<usize> = (0..n).map(|i| h.order[(n - i) % n]).collect();
    let darts = (0..n).map(|i| d.partner(h.darts[(2 * n - 1 - i) % n])).collect();
    HamiltonianCircuit { order, darts }
}

fn code_from(d: &DoodleDiagram, h: &HamiltonianCircuit, origin: usize) -> CycleCode {
    let n = h.order.len();
    let mut label = vec![0usize; d.n()];
    for (i, &c) in h.order.iter().enumerate() {
        label[c] = (i + n - origin) % n;
    }
    let ends = chord_ends(d, h);
    let mut colour_of = vec![None; 4 * d.n()];
    for &(x, c) in &ends {
        colour_of[x] = Some(c);
    }
    let mut used = vec![false; 4 * d.n()];
    let mut cycles = Vec::new();
    // Each crossing has two chord ends; walk chord, then switch to the other end.
    let by_label = |l: usize| -> [Dart; 2] {
        let c = h.order[(l + origin) % n];
        let mut v = ends.iter().filter(|(x, _)| crossing_of(*x) == c).map(|(x, _)| *x);
        [v.next().unwrap(), v.next().unwrap()]
    };
    for start in 0..n {
        let pair = by_label(start);
        if used[pair[0]] {
            continue;
        }
        let mut options = Vec::new();
        for first in pair {
            let mut cycle = Vec::new();
            let mut x = first;
            let mut seen = used.clone();
            loop {
                let y = d.partner(x);
                seen[x] = true;
                seen[y] = true;
                let (a, b) = (label[crossing_of(x)], label[crossing_of(y)]);
                debug_assert_eq!(colour_of[x], colour_of[y]);
                cycle.push((a, colour_of[x].unwrap(), (b + n - a) % n));
                let [p, q] = by_label(b);
                x = if p == y { q } else { p };
                if seen[x] {
                    break;
                }
            }
            options.push((cycle, seen));
        }
        options.sort();
        let (cycle, seen) = options.swap_remove(0);
        used = seen;
        cycles.push(cycle);
    }
    CycleCode { n, cycles }
}

impl DoodleDiagram {
    pub fn find_hamiltonian(&self) -> Option<HamiltonianCircuit> {
        find_hamiltonian(self)
    }
}

fn crosses(a: (usize, usize), b: (usize, usize)) -> bool {
    let inside = |x: usize, (lo, hi): (usize, usize)| lo < x && x < hi;
    let (a0, a1) = (a.0.min(a.1), a.0.max(a.1));
    let (b0, b1) = (b.0.min(b.1), b.0.max(b.1));
    let shared = a0 == b0 || a0 == b1 || a1 == b0 || a1 == b1;
    !shared && (inside(b0, (a0, a1)) != inside(b1, (a0, a1)))
}

/// Rebuilds the diagram: the circuit is drawn as a circle with labels
/// increasing counterclockwise, red chords inside and blue chords outside.
pub fn diagram_from_cycle_code(code: &CycleCode) -> Result<DoodleDiagram> {
    let n = code.n;
    if n < 3 {
        return Err(malformed("cycle code", "fewer than three crossings"));
    }
    let chords: Vec<(usize, usize, Colour)> = code
        .cycles
        .iter()
        .flatten()
        .map(|&(i, c, j)| (i, (i + j) % n, c))
        .collect();
    let mut ends = vec![0usize; n];
    for &(a, b, _) in &chords {
        if a >= n || a == b {
            return Err(malformed("cycle code", alloc::format!("bad chord {a} -> {b}")));
        }
        ends[a] += 1;
        ends[b] += 1;
    }
    if ends.iter().any(|&e| e != 2) {
        return Err(malformed("cycle code", "every crossing needs two chord ends"));
    }
    for (k, &(a, b, c)) in chords.iter().enumerate() {
        for &(x, y, c2) in &chords[k + 1..] {
            if c == c2 && crosses((a, b), (x, y)) {
                return Err(Error::NotRealizableAsDrawn);
            }
        }
    }
    // Rotation per crossing: next, red chords by increasing forward
    // distance, previous, blue chords by decreasing forward distance.
    let mut prev_slot = vec![0usize; n];
    let mut partner = vec![usize::MAX; 4 * n];
    let mut slots: Vec<Vec<(Colour, usize, usize, bool)>> = vec![Vec::new(); n];
    for (k, &(a, b, c)) in chords.iter().enumerate() {
        slots[a].push((c, (b + n - a) % n, k, false));
        slots[b].push((c, (a + n - b) % n, k, true));
    }
    let mut chord_dart = vec![[usize::MAX; 2]; chords.len()];
    for v in 0..n {
        let mut reds: Vec<_> = slots[v].iter().filter(|s| s.0 == Colour::Red).copied().collect();
        let mut blues: Vec<_> = slots[v].iter().filter(|s| s.0 == Colour::Blue).copied().collect();
        reds.sort_by_key(|s| (s.1, s.2));
        blues.sort_by_key(|s| (core::cmp::Reverse(s.1), s.2));
        let mut order = Vec::with_capacity(4);
        order.push(None);
        order.extend(reds.iter().map(|s| Some((s.2, s.3))));
        order.push(None);
        order.extend(blues.iter().map(|s| Some((s.2, s.3))));
        prev_slot[v] = 1 + reds.len();
        for (slot, o) in order.iter().enumerate() {
            if let Some((k, far)) = *o {
                chord_dart[k][far as usize] = dart(v, slot);
            }
        }
    }
    let link = |p: &mut Vec<usize>, a: Dart, b: Dart| {
        p[a] = b;
        p[b] = a;
    };
    for v in 0..n {
        let w = (v + 1) % n;
        link(&mut partner, dart(v, 0), dart(w, prev_slot[w]));
    }
    for cd in &chord_dart {
        link(&mut partner, cd[0], cd[1]);
    }
    let d = DoodleDiagram::from_partner(partner, 0)?;
    debug_assert!(d.is_plane());
    Ok(d)
}

impl fmt::Display for CycleCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in &self.cycles {
            f.write_str("(")?;
            for (k, &(i, c, j)) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                let sign = if c == Colour::Red { '+' } else { '-' };
                write!(f, "{i}{sign}{j}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl FromStr for CycleCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || malformed("cycle code", String::from(s));
        let s = s.trim();
        if !s.starts_with('(') || !s.ends_with(')') {
            return Err(bad());
        }
        let mut cycles = Vec::new();
        for part in s[1..s.len() - 1].split(")(") {
            let mut cycle = Vec::new();
            for tok in part.split(',') {
                let tok = tok.trim();
                let (pos, colour) = match (tok.find('+'), tok.find('-')) {
                    (Some(p), None) => (p, Colour::Red),
                    (None, Some(p)) => (p, Colour::Blue),
                    _ => return Err(bad()),
                };
                let i = tok[..pos].parse().map_err(|_| bad())?;
                let j = tok[pos + 1..].parse().map_err(|_| bad())?;
                cycle.push((i, colour, j));
            }
            cycles.push(cycle);
        }
        let n = cycles.iter().map(Vec::len).sum();
        Ok(CycleCode { n, cycles })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::known;
    use alloc::string::ToString;

    #[test]
    fn borromean_code_round_trip() {
        let b = known::borromean();
        let h = find_hamiltonian(&b).unwrap();
        assert_eq!(h.order.len(), 6);
        let code = cycle_code(&b, &h);
        let text = code.to_string();
        let parsed: CycleCode = text.parse().unwrap();
        assert_eq!(parsed, code);
        let r = diagram_from_cycle_code(&parsed).unwrap();
        assert_eq!(r.canonical_key(), b.canonical_key());
    }

    #[test]
    fn sample_code_builds_the_borromean() {
        let code: CycleCode = "(0+2,2+2,4+2)(1-2,3-2,5-2)".parse().unwrap();
        let d = diagram_from_cycle_code(&code).unwrap();
        assert_eq!(d.canonical_key(), known::borromean().canonical_key());
    }

    #[test]
    fn poppy_round_trip() {
        let p = known::poppy();
        let h = find_hamiltonian(&p).unwrap();
        let code = cycle_code(&p, &h);
        let r = diagram_from_cycle_code(&code).unwrap();
        assert_eq!(r.canonical_key(), p.canonical_key());
    }

    #[test]
    fn crossing_chords_on_one_side_rejected() {
        let code: CycleCode = "(0+2,2+2,4+2)(1+2,3+2,5+2)".parse().unwrap();
        assert_eq!(diagram_from_cycle_code(&code), Err(Error::NotRealizableAsDrawn));
    }

    #[test]
    fn circuit_visits_every_crossing_once() {
        let p = known::poppy();
        let h = find_hamiltonian(&p).unwrap();
        let mut o = h.order.clone();
        o.sort_unstable();
        assert_eq!(o, (0..p.n()).collect::<Vec<_>>());
        for (i, &x) in h.darts.iter().enumerate() {
            assert_eq!(crossing_of(x), h.order[i]);
            assert_eq!(crossing_of(p.partner(x)), h.order[(i + 1) % h.order.len()]);
        }
    }
}
