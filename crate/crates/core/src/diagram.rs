//! Doodle diagrams as rotation systems.
//!
//! A crossing owns four slots numbered `0..4` in counterclockwise order. A
//! dart is `4 * crossing + slot`; the edge leaving a slot is identified with
//! that dart, and `partner` maps a dart to the dart at the other end of its
//! edge. The strand through a crossing exits at the slot opposite the one it
//! entered, i.e. `slot + 2 mod 4`.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Index of a half-edge slot: `4 * crossing + slot`.
pub type Dart = usize;

#[inline]
pub const fn crossing_of(d: Dart) -> usize {
    d >> 2
}

#[inline]
pub const fn slot_of(d: Dart) -> usize {
    d & 3
}

#[inline]
pub const fn dart(crossing: usize, slot: usize) -> Dart {
    (crossing << 2) | (slot & 3)
}

/// Next slot counterclockwise at the same crossing.
#[inline]
pub const fn ccw(d: Dart) -> Dart {
    (d & !3) | ((d + 1) & 3)
}

/// Next slot clockwise at the same crossing.
#[inline]
pub const fn cw(d: Dart) -> Dart {
    (d & !3) | ((d + 3) & 3)
}

/// The slot on the same strand, across the crossing.
#[inline]
pub const fn opposite(d: Dart) -> Dart {
    (d & !3) | ((d + 2) & 3)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DoodleDiagram {
    partner: Vec<Dart>,
    floating: usize,
}

/// A face of the diagram. `darts[i]` traverses a boundary edge starting at
/// `crossing_of(darts[i])`; the corner that follows lies at the far end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    darts: Vec<Dart>,
}

impl Region {
    pub fn size(&self) -> usize {
        self.darts.len()
    }

    pub fn darts(&self) -> &[Dart] {
        &self.darts
    }

    /// Crossings at the boundary corners, in boundary order. A crossing
    /// touching the region at two corners is listed twice.
    pub fn corners<'a>(&'a self, diagram: &'a DoodleDiagram) -> impl Iterator<Item = usize> + 'a {
        self.darts.iter().map(move |&d| crossing_of(diagram.partner(d)))
    }

    /// Boundary edges as canonical edge ids (the smaller of the two darts).
    pub fn edges<'a>(&'a self, diagram: &'a DoodleDiagram) -> impl Iterator<Item = Dart> + 'a {
        self.darts.iter().map(move |&d| diagram.edge_id(d))
    }
}

/// A closed strand obtained by going straight through every crossing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    /// Outgoing darts in traversal order; empty for a floating circle.
    pub darts: Vec<Dart>,
    pub self_crossing: bool,
}

impl Component {
    pub fn is_floating(&self) -> bool {
        self.darts.is_empty()
    }

    /// Crossings visited, in traversal order (with repetition for self-crossings).
    pub fn crossings(&self) -> impl Iterator<Item = usize> + '_ {
        self.darts.iter().map(|&d| crossing_of(d))
    }
}

/// A monogon or bigon removal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Move {
    R1(usize),
    R2(usize, usize),
}

impl DoodleDiagram {
    /// Builds a diagram from a slot pairing. `partner.len()` must be a
    /// multiple of four and `partner` a fixed-point-free involution.
    pub fn from_partner(partner: Vec<Dart>, floating: usize) -> Result<Self> {
        if !partner.len().is_multiple_of(4) {
            return Err(Error::InvalidPairing(format!(
                "{} slots is not a multiple of 4",
                partner.len()
            )));
        }
        for (d, &p) in partner.iter().enumerate() {
            if p >= partner.len() || p == d || partner[p] != d {
                return Err(Error::InvalidPairing(format!("slot {d} -> {p}")));
            }
        }
        Ok(Self { partner, floating })
    }

    /// `floating` crossing-free circles and nothing else.
    pub fn trivial(floating: usize) -> Self {
        Self {
            partner: Vec::new(),
            floating,
        }
    }

    /// Builds a diagram of a simple 4-valent graph from the counterclockwise
    /// neighbour list at each crossing.
    pub fn from_rotation(rotation: &[[usize; 4]]) -> Result<Self> {
        let n = rotation.len();
        let mut partner = vec![usize::MAX; 4 * n];
        for (v, nbrs) in rotation.iter().enumerate() {
            for (s, &w) in nbrs.iter().enumerate() {
                if w >= n || w == v {
                    return Err(Error::InvalidPairing(format!("crossing {v} slot {s} -> {w}")));
                }
                let back: Vec<usize> = (0..4).filter(|&t| rotation[w][t] == v).collect();
                let fwd = nbrs.iter().filter(|&&x| x == w).count();
                if back.len() != 1 || fwd != 1 {
                    return Err(Error::InvalidPairing(format!(
                        "crossings {v} and {w} are not joined by exactly one edge"
                    )));
                }
                partner[dart(v, s)] = dart(w, back[0]);
            }
        }
        Self::from_partner(partner, 0)
    }

    pub fn n(&self) -> usize {
        self.partner.len() / 4
    }

    pub fn floating_circles(&self) -> usize {
        self.floating
    }

    pub fn edge_count(&self) -> usize {
        self.partner.len() / 2
    }

    #[inline]
    pub fn partner(&self, d: Dart) -> Dart {
        self.partner[d]
    }

    pub fn partners(&self) -> &[Dart] {
        &self.partner
    }

    #[inline]
    pub fn edge_id(&self, d: Dart) -> Dart {
        d.min(self.partner[d])
    }

    /// Crossing at the far end of each slot of `c`, in slot order.
    pub fn neighbours(&self, c: usize) -> [usize; 4] {
        core::array::from_fn(|s| crossing_of(self.partner[dart(c, s)]))
    }

    /// Adjacency of the underlying simple graph (loops and parallel edges collapsed).
    pub fn simple_adjacency(&self) -> Vec<Vec<usize>> {
        (0..self.n())
            .map(|c| {
                let mut nb: Vec<usize> = self.neighbours(c).into_iter().filter(|&w| w != c).collect();
                nb.sort_unstable();
                nb.dedup();
                nb
            })
            .collect()
    }

    /// Connected components of the crossing graph, as a label per crossing.
    pub fn graph_components(&self) -> (usize, Vec<usize>) {
        let n = self.n();
        let mut label = vec![usize::MAX; n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            queue.push_back(s);
            while let Some(c) = queue.pop_front() {
                for w in self.neighbours(c) {
                    if label[w] == usize::MAX {
                        label[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (count, label)
    }

    /// True when the diagram is a single connected 4-valent graph with at
    /// least one crossing and no floating circles.
    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.floating == 0 && self.graph_components().0 == 1
    }

    /// Face tracing: the successor of `d` along its face.
    #[inline]
    pub fn face_next(&self, d: Dart) -> Dart {
        ccw(self.partner[d])
    }

    /// All faces of the rotation system, with the face index of every dart.
    pub fn faces(&self) -> (Vec<Region>, Vec<usize>) {
        let mut face_of = vec![usize::MAX; self.partner.len()];
        let mut regions = Vec::new();
        for start in 0..self.partner.len() {
            if face_of[start] != usize::MAX {
                continue;
            }
            let mut darts = Vec::new();
            let mut d = start;
            loop {
                face_of[d] = regions.len();
                darts.push(d);
                d = self.face_next(d);
                if d == start {
                    break;
                }
            }
            regions.push(Region { darts });
        }
        (regions, face_of)
    }

    /// True when every connected piece of the rotation system is spherical.
    pub fn is_plane(&self) -> bool {
        let (count, label) = self.graph_components();
        let (regions, _) = self.faces();
        let mut verts = vec![0i64; count];
        let mut faces = vec![0i64; count];
        for &l in &label {
            verts[l] += 1;
        }
        for r in &regions {
            faces[label[crossing_of(r.darts[0])]] += 1;
        }
        // V - E + F = 2 with E = 2V.
        (0..count).all(|i| faces[i] - verts[i] == 2)
    }

    /// The regions of a connected diagram.
    pub fn trace_regions(&self) -> Result<Vec<Region>> {
        if self.n() == 0 {
            return Err(Error::NoCrossings);
        }
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(self.faces().0)
    }

    /// Straight-through components, floating circles included as empty entries.
    pub fn components(&self) -> Vec<Component> {
        let mut seen = vec![false; self.partner.len()];
        let mut out = Vec::new();
        for start in 0..self.partner.len() {
            if seen[start] {
                continue;
            }
            let mut darts = Vec::new();
            let mut visits = vec![0u8; self.n()];
            let mut self_crossing = false;
            let mut d = start;
            loop {
                seen[d] = true;
                seen[self.partner[d]] = true;
                darts.push(d);
                let c = crossing_of(d);
                visits[c] += 1;
                if visits[c] > 1 {
                    self_crossing = true;
                }
                d = opposite(self.partner[d]);
                if d == start {
                    break;
                }
            }
            out.push(Component { darts, self_crossing });
        }
        out.extend((0..self.floating).map(|_| Component {
            darts: Vec::new(),
            self_crossing: false,
        }));
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    /// Monogon and bigon removals currently available.
    pub fn available_moves(&self) -> Vec<Move> {
        let (regions, _) = self.faces();
        let mut moves = Vec::new();
        for r in &regions {
            match r.size() {
                1 => moves.push(Move::R1(crossing_of(r.darts[0]))),
                2 => {
                    let a = crossing_of(r.darts[0]);
                    let b = crossing_of(r.darts[1]);
                    if a != b {
                        moves.push(Move::R2(a.min(b), a.max(b)));
                    }
                }
                _ => {}
            }
        }
        moves.sort_unstable();
        moves.dedup();
        moves
    }

    pub fn apply_move(&self, m: Move) -> DoodleDiagram {
        let mut removed = vec![false; self.n()];
        match m {
            Move::R1(c) => removed[c] = true,
            Move::R2(a, b) => {
                removed[a] = true;
                removed[b] = true;
            }
        }
        self.remove_crossings(&removed)
    }

    /// Deletes the marked crossings, letting both strands through each one
    /// pass straight on. Strands closing up entirely inside the deleted set
    /// become floating circles.
    pub fn remove_crossings(&self, removed: &[bool]) -> DoodleDiagram {
        let n = self.n();
        let mut index = vec![usize::MAX; n];
        let mut kept = 0;
        for c in 0..n {
            if !removed[c] {
                index[c] = kept;
                kept += 1;
            }
        }
        let remap = |d: Dart| dart(index[crossing_of(d)], slot_of(d));
        let mut partner = vec![usize::MAX; 4 * kept];
        let mut seen = vec![false; self.partner.len()];
        for d in 0..self.partner.len() {
            if removed[crossing_of(d)] || partner[remap(d)] != usize::MAX {
                continue;
            }
            let mut e = self.partner[d];
            while removed[crossing_of(e)] {
                seen[e] = true;
                let o = opposite(e);
                seen[o] = true;
                e = self.partner[o];
            }
            partner[remap(d)] = remap(e);
            partner[remap(e)] = remap(d);
        }
        let mut floating = self.floating;
        for d in 0..self.partner.len() {
            if !removed[crossing_of(d)] || seen[d] {
                continue;
            }
            let mut e = d;
            loop {
                seen[e] = true;
                let o = opposite(e);
                seen[o] = true;
                e = self.partner[o];
                if e == d {
                    break;
                }
            }
            floating += 1;
        }
        DoodleDiagram { partner, floating }
    }

    /// Applies monogon and bigon removals until none remain, always taking
    /// the first available move.
    pub fn reduce(&self) -> DoodleDiagram {
        self.reduce_with(|_| 0)
    }

    /// Like [`reduce`](Self::reduce) with `choose` picking the index of the
    /// next move among those available.
    pub fn reduce_with<F: FnMut(&[Move]) -> usize>(&self, mut choose: F) -> DoodleDiagram {
        let mut current = self.clone();
        loop {
            let moves = current.available_moves();
            if moves.is_empty() {
                return current;
            }
            let pick = choose(&moves).min(moves.len() - 1);
            current = current.apply_move(moves[pick]);
        }
    }

    pub fn has_monogon_or_bigon(&self) -> bool {
        self.faces().0.iter().any(|r| r.size() <= 2)
    }

    /// Connected with no monogon or bigon.
    pub fn is_minimal(&self) -> bool {
        self.is_connected() && !self.has_monogon_or_bigon()
    }

    /// Global reflection: reverses the cyclic order at every crossing.
    pub fn mirror(&self) -> DoodleDiagram {
        let flip = |d: Dart| dart(crossing_of(d), (4 - slot_of(d)) & 3);
        let mut partner = vec![0; self.partner.len()];
        for d in 0..self.partner.len() {
            partner[flip(d)] = flip(self.partner[d]);
        }
        DoodleDiagram {
            partner,
            floating: self.floating,
        }
    }

    /// Relabels crossings by `perm` (old -> new) and rotates the slots of
    /// crossing `c` by `shift[c]`.
    pub fn relabel(&self, perm: &[usize], shift: &[usize]) -> DoodleDiagram {
        let map = |d: Dart| {
            let c = crossing_of(d);
            dart(perm[c], slot_of(d) + shift[c])
        };
        let mut partner = vec![0; self.partner.len()];
        for d in 0..self.partner.len() {
            partner[map(d)] = map(self.partner[d]);
        }
        DoodleDiagram {
            partner,
            floating: self.floating,
        }
    }

    /// Disjoint union; the crossings of `other` are appended.
    pub fn disjoint_union(&self, other: &DoodleDiagram) -> DoodleDiagram {
        let off = self.partner.len();
        let mut partner = self.partner.clone();
        partner.extend(other.partner.iter().map(|&p| p + off));
        DoodleDiagram {
            partner,
            floating: self.floating + other.floating,
        }
    }

    /// Splits off each connected piece of the crossing graph as its own diagram.
    /// Floating circles are not included.
    pub fn connected_pieces(&self) -> Vec<DoodleDiagram> {
        let (count, label) = self.graph_components();
        let mut members: Vec<Vec<usize>> = vec![Vec::new(); count];
        for (c, &l) in label.iter().enumerate() {
            members[l].push(c);
        }
        let mut local = vec![0; self.n()];
        for m in &members {
            for (i, &c) in m.iter().enumerate() {
                local[c] = i;
            }
        }
        members
            .iter()
            .map(|m| {
                let mut partner = vec![0; 4 * m.len()];
                for (i, &c) in m.iter().enumerate() {
                    for s in 0..4 {
                        let p = self.partner[dart(c, s)];
                        partner[dart(i, s)] = dart(local[crossing_of(p)], slot_of(p));
                    }
                }
                DoodleDiagram { partner, floating: 0 }
            })
            .collect()
    }

    /// Face-size histogram: `hist[i]` is the number of `i`-gon regions.
    pub fn region_size_histogram(&self) -> Vec<usize> {
        let (regions, _) = self.faces();
        let max = regions.iter().map(Region::size).max().unwrap_or(0);
        let mut hist = vec![0; max + 1];
        for r in &regions {
            hist[r.size()] += 1;
        }
        hist
    }

    /// Removes one straight-through component. Its own strand disappears
    /// rather than becoming a floating circle.
    pub fn delete_component(&self, component: &Component) -> DoodleDiagram {
        if component.is_floating() {
            let mut d = self.clone();
            d.floating = d.floating.saturating_sub(1);
            return d;
        }
        let mut removed = vec![false; self.n()];
        for c in component.crossings() {
            removed[c] = true;
        }
        let mut out = self.remove_crossings(&removed);
        // Strands living only on the removed crossings close into loops; the
        // component is one of them unless it is entangled with itself.
        if !component.self_crossing {
            out.floating -= 1;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::known;

    #[test]
    fn dart_arithmetic() {
        assert_eq!(ccw(dart(3, 3)), dart(3, 0));
        assert_eq!(cw(dart(3, 0)), dart(3, 3));
        assert_eq!(opposite(dart(2, 1)), dart(2, 3));
        assert_eq!(crossing_of(dart(5, 2)), 5);
    }

    #[test]
    fn borromean_regions_and_components() {
        let b = known::borromean();
        let regions = b.trace_regions().unwrap();
        assert_eq!(regions.len(), 8);
        assert!(regions.iter().all(|r| r.size() == 3));
        assert_eq!(b.component_count(), 3);
        assert!(b.is_plane());
    }

    #[test]
    fn poppy_regions_and_components() {
        let p = known::poppy();
        let mut sizes: Vec<usize> = p.trace_regions().unwrap().iter().map(Region::size).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, [3, 3, 3, 3, 3, 3, 3, 3, 4, 4]);
        assert_eq!(p.component_count(), 1);
    }

    #[test]
    fn figure_eight_kink() {
        let k = known::kink();
        let mut sizes: Vec<usize> = k.trace_regions().unwrap().iter().map(Region::size).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, [1, 1, 2]);
        assert!(!k.is_minimal());
        let r = k.reduce();
        assert_eq!(r.n(), 0);
        assert_eq!(r.floating_circles(), 1);
    }

    #[test]
    fn two_circles_meeting_in_a_bigon() {
        let d = known::two_circles_two_crossings();
        assert_eq!(d.component_count(), 2);
        let r = d.reduce();
        assert_eq!((r.n(), r.floating_circles()), (0, 2));
    }

    #[test]
    fn floating_circle_is_one_component() {
        assert_eq!(DoodleDiagram::trivial(1).component_count(), 1);
        assert_eq!(DoodleDiagram::trivial(1).trace_regions(), Err(Error::NoCrossings));
    }

    #[test]
    fn disconnected_regions_error() {
        let two = known::borromean().disjoint_union(&known::borromean());
        assert_eq!(two.trace_regions(), Err(Error::Disconnected));
    }

    #[test]
    fn minimal_examples_are_fixed_by_reduce() {
        for d in [known::borromean(), known::poppy()] {
            assert!(d.is_minimal());
            assert_eq!(d.reduce(), d);
        }
    }

    #[test]
    fn rejects_bad_pairings() {
        assert!(DoodleDiagram::from_partner(vec![1, 0, 3], 0).is_err());
        assert!(DoodleDiagram::from_partner(vec![0, 2, 1, 3], 0).is_err());
        assert!(DoodleDiagram::from_partner(vec![1, 2, 3, 0], 0).is_err());
    }
}
