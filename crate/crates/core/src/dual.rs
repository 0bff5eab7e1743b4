//! Dual graphs, incidence matrices and doodles recovered from quadrangulations.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write as _;

use crate::classify::vertex_connectivity;
use crate::codes::DoodleCode;
use crate::diagram::{ccw, dart, opposite, DoodleDiagram, Region};
use crate::error::{malformed, Error, Result};
use crate::planar::planar_rotation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexRole {
    Infinite,
    EBoundary,
    VBoundary,
    Interior,
}

/// An embedded multigraph in half-edge form. Half-edge `h` leaves
/// `tail[h]`; `twin[h]` is the reverse half-edge and `rot_next[h]` the
/// next half-edge around the same tail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneGraph {
    tail: Vec<usize>,
    twin: Vec<usize>,
    rot_next: Vec<usize>,
    roles: Vec<VertexRole>,
    infinite: Option<usize>,
}

impl PlaneGraph {
    /// Builds a simple plane graph from neighbour rotations.
    pub fn from_rotation(rotation: &[Vec<usize>], roles: Vec<VertexRole>, infinite: Option<usize>) -> Self {
        let mut start = Vec::with_capacity(rotation.len() + 1);
        let mut total = 0;
        for r in rotation {
            start.push(total);
            total += r.len();
        }
        let mut tail = vec![0; total];
        let mut twin = vec![0; total];
        let mut rot_next = vec![0; total];
        for (v, r) in rotation.iter().enumerate() {
            for (i, &w) in r.iter().enumerate() {
                let h = start[v] + i;
                tail[h] = v;
                rot_next[h] = start[v] + (i + 1) % r.len();
                let back = rotation[w].iter().position(|&x| x == v).expect("symmetric rotation");
                twin[h] = start[w] + back;
            }
        }
        Self {
            tail,
            twin,
            rot_next,
            roles,
            infinite,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.roles.len()
    }

    pub fn edge_count(&self) -> usize {
        self.tail.len() / 2
    }

    pub fn half_edge_count(&self) -> usize {
        self.tail.len()
    }

    pub fn tail(&self, h: usize) -> usize {
        self.tail[h]
    }

    pub fn head(&self, h: usize) -> usize {
        self.tail[self.twin[h]]
    }

    pub fn twin(&self, h: usize) -> usize {
        self.twin[h]
    }

    pub fn role(&self, v: usize) -> VertexRole {
        self.roles[v]
    }

    pub fn roles(&self) -> &[VertexRole] {
        &self.roles
    }

    pub fn infinite_vertex(&self) -> Option<usize> {
        self.infinite
    }

    /// Next half-edge along the face to the left of `h`.
    pub fn face_next(&self, h: usize) -> usize {
        self.rot_next[self.twin[h]]
    }

    /// Half-edges leaving `v` in rotation order.
    pub fn out_half_edges(&self, v: usize) -> Vec<usize> {
        let Some(first) = (0..self.tail.len()).find(|&h| self.tail[h] == v) else {
            return Vec::new();
        };
        let mut out = vec![first];
        let mut h = self.rot_next[first];
        while h != first {
            out.push(h);
            h = self.rot_next[h];
        }
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.tail.iter().filter(|&&t| t == v).count()
    }

    /// Faces as half-edge cycles.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.tail.len()];
        let mut out = Vec::new();
        for s in 0..self.tail.len() {
            if seen[s] {
                continue;
            }
            let mut f = Vec::new();
            let mut h = s;
            while !seen[h] {
                seen[h] = true;
                f.push(h);
                h = self.face_next(h);
            }
            out.push(f);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); n];
        for h in 0..self.tail.len() {
            adj[self.tail[h]].push(self.head(h));
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Connected and spherical: `V - E + F = 2`.
    pub fn is_spherical(&self) -> bool {
        self.is_connected() && self.vertex_count() + self.faces().len() == self.edge_count() + 2
    }

    /// Largest number of edges joining one pair of vertices (loops count as pairs `(v, v)`).
    pub fn max_multiplicity(&self) -> usize {
        let mut pairs: Vec<(usize, usize)> = (0..self.tail.len())
            .map(|h| (self.tail[h], self.head(h)))
            .filter(|(a, b)| a <= b)
            .collect();
        pairs.sort_unstable();
        let mut best = 0;
        let mut run = 0;
        for i in 0..pairs.len() {
            run = if i > 0 && pairs[i] == pairs[i - 1] { run + 1 } else { 1 };
            best = best.max(run);
        }
        best
    }

    /// The link of the infinite vertex as a closed walk `e, v, e, v, ...`:
    /// for each outside edge, taken against the rotation, its e-boundary
    /// vertex and the v-boundary vertex of the cell to its left.
    pub fn boundary_link(&self) -> Option<Vec<usize>> {
        let inf = self.infinite?;
        let mut link = Vec::new();
        for h in self.out_half_edges(inf).into_iter().rev() {
            let a = self.face_next(h);
            let b = self.face_next(a);
            link.push(self.tail(a));
            link.push(self.tail(b));
        }
        Some(link)
    }

    /// Structural counts of the disc obtained by deleting the infinite vertex.
    pub fn counting_summary(&self) -> Option<DualCounts> {
        let inf = self.infinite?;
        let link = self.boundary_link()?;
        let p = self.degree(inf);
        let mut boundary = link.clone();
        boundary.sort_unstable();
        boundary.dedup();
        let faces = self.faces();
        let infinite_face = |f: &Vec<usize>| f.iter().any(|&h| self.tail[h] == inf);
        let disc: Vec<usize> = (0..faces.len()).filter(|&i| !infinite_face(&faces[i])).collect();
        let mut face_of = vec![0; self.tail.len()];
        for (i, f) in faces.iter().enumerate() {
            for &h in f {
                face_of[h] = i;
            }
        }
        let min_adjacent = disc
            .iter()
            .map(|&i| {
                let mut nb: Vec<usize> = faces[i]
                    .iter()
                    .map(|&h| face_of[self.twin[h]])
                    .filter(|&j| j != i && !infinite_face(&faces[j]))
                    .collect();
                nb.sort_unstable();
                nb.dedup();
                nb.len()
            })
            .min()
            .unwrap_or(0);
        let edges = self.edge_count();
        Some(DualCounts {
            vertices: self.vertex_count(),
            edges,
            faces: faces.len(),
            p,
            boundary_vertices: boundary.len(),
            boundary_edges: link.len(),
            interior_edges: edges - p - link.len(),
            interior_vertices: self.vertex_count() - 1 - boundary.len(),
            disc_regions: disc.len(),
            disc_regions_four_sided: disc.iter().all(|&i| faces[i].len() == 4),
            max_multiplicity: self.max_multiplicity(),
            min_disc_region_adjacency: min_adjacent,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualCounts {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub p: usize,
    pub boundary_vertices: usize,
    pub boundary_edges: usize,
    pub interior_edges: usize,
    pub interior_vertices: usize,
    pub disc_regions: usize,
    pub disc_regions_four_sided: bool,
    pub max_multiplicity: usize,
    pub min_disc_region_adjacency: usize,
}

/// The dual graph of `d` with `infinite` as the infinite region. Dual
/// half-edge `h` crosses the diagram edge of dart `h` and starts in the
/// region containing that dart.
pub fn dual_graph(d: &DoodleDiagram, infinite: &Region) -> Result<PlaneGraph> {
    if !d.is_connected() || d.n() < 2 || vertex_connectivity(d)? < 2 {
        return Err(Error::NotTwoConnected);
    }
    let (regions, face_of) = d.faces();
    let inf = face_of[infinite.darts()[0]];
    let darts = 4 * d.n();
    let tail = face_of.clone();
    let twin: Vec<usize> = (0..darts).map(|h| d.partner(h)).collect();
    let rot_next: Vec<usize> = (0..darts).map(|h| d.face_next(h)).collect();
    let mut roles = vec![VertexRole::Interior; regions.len()];
    for &x in regions[inf].darts() {
        let v = face_of[opposite(ccw(d.partner(x)))];
        if roles[v] == VertexRole::Interior {
            roles[v] = VertexRole::VBoundary;
        }
    }
    for &x in regions[inf].darts() {
        roles[face_of[d.partner(x)]] = VertexRole::EBoundary;
    }
    roles[inf] = VertexRole::Infinite;
    Ok(PlaneGraph {
        tail,
        twin,
        rot_next,
        roles,
        infinite: Some(inf),
    })
}

/// True when the link of the infinite vertex is a cycle through `2p`
/// distinct vertices.
pub fn boundary_is_embedded_circle(g: &PlaneGraph) -> bool {
    let Some(link) = g.boundary_link() else {
        return false;
    };
    let mut sorted = link.clone();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len() == link.len() && link.iter().all(|&v| Some(v) != g.infinite)
}

/// One crossing per four-sided face, its slots following the face's edges.
pub fn doodle_from_dual(g: &PlaneGraph) -> Result<DoodleDiagram> {
    let faces = g.faces();
    let mut slot_of = vec![(0, 0); g.half_edge_count()];
    for (c, f) in faces.iter().enumerate() {
        if f.len() != 4 {
            return Err(Error::NotQuadrangulation);
        }
        for (s, &h) in f.iter().enumerate() {
            slot_of[h] = (c, s);
        }
    }
    let mut partner = vec![0; 4 * faces.len()];
    for h in 0..g.half_edge_count() {
        let (c, s) = slot_of[h];
        let (c2, s2) = slot_of[g.twin(h)];
        partner[dart(c, s)] = dart(c2, s2);
    }
    DoodleDiagram::from_partner(partner, 0)
}

/// Symmetric 0/1 matrix over the finite dual vertices. Vertices `0..2p`
/// form the boundary ring; even ones are v-boundary and odd ones carry an
/// outside edge to the infinite vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IncidenceMatrix {
    n: usize,
    p: usize,
    rows: Vec<u64>,
}

impl IncidenceMatrix {
    /// The ring alone, for a doodle of `n` crossings with a `p`-gon as
    /// infinite region.
    pub fn ring(n: usize, p: usize) -> Self {
        assert!(n < 64, "incidence matrices are limited to 63 crossings");
        assert!(2 * p <= n + 1 && p >= 2);
        let mut m = Self {
            n,
            p,
            rows: vec![0; n + 1],
        };
        for i in 0..2 * p {
            m.set(i, (i + 1) % (2 * p));
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> usize {
        self.p
    }

    /// Number of rows, `n + 1`.
    pub fn size(&self) -> usize {
        self.n + 1
    }

    pub fn get(&self, a: usize, b: usize) -> bool {
        (self.rows[a] >> b) & 1 == 1
    }

    pub fn set(&mut self, a: usize, b: usize) {
        debug_assert!(a != b);
        self.rows[a] |= 1 << b;
        self.rows[b] |= 1 << a;
    }

    pub fn clear(&mut self, a: usize, b: usize) {
        self.rows[a] &= !(1 << b);
        self.rows[b] &= !(1 << a);
    }

    pub fn row(&self, a: usize) -> u64 {
        self.rows[a]
    }

    pub fn is_boundary(&self, v: usize) -> bool {
        v < 2 * self.p
    }

    pub fn has_outside_edge(&self, v: usize) -> bool {
        v < 2 * self.p && v % 2 == 1
    }

    /// Degree in the full dual graph, outside edge included.
    pub fn valency(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize + self.has_outside_edge(v) as usize
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.size() {
            for b in a + 1..self.size() {
                if self.get(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {}", self.n, self.p);
        for a in 0..self.size() {
            for b in 0..self.size() {
                s.push(if self.get(a, b) { '1' } else { '0' });
            }
            s.push('\n');
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let head = lines.next().ok_or_else(|| malformed("incidence matrix", "empty input"))?;
        let mut it = head.split_whitespace().map(str::parse::<usize>);
        let (Some(Ok(n)), Some(Ok(p)), None) = (it.next(), it.next(), it.next()) else {
            return Err(malformed("incidence matrix", String::from(head)));
        };
        if n >= 64 || p < 2 || 2 * p > n + 1 {
            return Err(malformed("incidence matrix", String::from(head)));
        }
        let mut m = Self {
            n,
            p,
            rows: vec![0; n + 1],
        };
        for a in 0..=n {
            let line = lines
                .next()
                .ok_or_else(|| malformed("incidence matrix", alloc::format!("missing row {a}")))?
                .trim();
            if line.len() != n + 1 {
                return Err(malformed("incidence matrix", alloc::format!("row {a} has wrong length")));
            }
            for (b, ch) in line.bytes().enumerate() {
                match ch {
                    b'1' => m.rows[a] |= 1 << b,
                    b'0' => {}
                    _ => return Err(malformed("incidence matrix", alloc::format!("row {a}"))),
                }
            }
        }
        for a in 0..=n {
            if m.get(a, a) {
                return Err(malformed("incidence matrix", "non-zero diagonal"));
            }
            for b in 0..=n {
                if m.get(a, b) != m.get(b, a) {
                    return Err(malformed("incidence matrix", "not symmetric"));
                }
            }
        }
        for i in 0..2 * p {
            if !m.get(i, (i + 1) % (2 * p)) {
                return Err(malformed("incidence matrix", "boundary ring incomplete"));
            }
        }
        Ok(m)
    }

    /// Reads the matrix of a dual graph whose boundary is an embedded
    /// circle. Ring vertex 0 is a v-boundary vertex; interior vertices
    /// follow in dual-vertex order.
    pub fn from_dual(g: &PlaneGraph) -> Result<Self> {
        if !boundary_is_embedded_circle(g) || g.max_multiplicity() > 1 {
            return Err(Error::NotPrimeOrNotMinimal);
        }
        let link = g.boundary_link().unwrap();
        let inf = g.infinite_vertex().unwrap();
        let p = link.len() / 2;
        let n = g.vertex_count() - 2;
        let mut label = vec![usize::MAX; g.vertex_count()];
        // link = e0 v0 e1 v1 ...; put the last v-boundary vertex at 0.
        for (i, &v) in link.iter().enumerate() {
            label[v] = (i + 1) % (2 * p);
        }
        let mut next = 2 * p;
        for (v, l) in label.iter_mut().enumerate() {
            if v != inf && *l == usize::MAX {
                *l = next;
                next += 1;
            }
        }
        let mut m = Self::ring(n, p);
        for h in 0..g.half_edge_count() {
            let (a, b) = (g.tail(h), g.head(h));
            if a != inf && b != inf {
                m.set(label[a], label[b]);
            }
        }
        Ok(m)
    }
}

/// Embeds the full dual graph: matrix edges plus an outside edge from every
/// odd ring vertex to the infinite vertex `n + 1`. `None` when non-planar.
pub fn planar_embed(m: &IncidenceMatrix) -> Option<PlaneGraph> {
    let inf = m.size();
    let mut edges = m.edges();
    for v in (1..2 * m.p()).step_by(2) {
        edges.push((v, inf));
    }
    let rotation = planar_rotation(inf + 1, &edges)?;
    let roles = (0..=inf)
        .map(|v| {
            if v == inf {
                VertexRole::Infinite
            } else if !m.is_boundary(v) {
                VertexRole::Interior
            } else if v % 2 == 0 {
                VertexRole::VBoundary
            } else {
                VertexRole::EBoundary
            }
        })
        .collect();
    Some(PlaneGraph::from_rotation(&rotation, roles, Some(inf)))
}

/// The valency conditions alone: every valency at least 3 and the
/// finite-vertex valency spectrum equal to the code's.
pub fn valencies_match(m: &IncidenceMatrix, code: &DoodleCode) -> bool {
    if code.n() != m.n() || code.p() != m.p() {
        return false;
    }
    let want = code.finite_valency_spectrum();
    let mut have = vec![0usize; want.len()];
    for v in 0..m.size() {
        let k = m.valency(v);
        if k < 3 || k >= have.len() {
            return false;
        }
        have[k] += 1;
    }
    have == want
}

/// Planar, connected, all faces four-sided, and valencies matching the code.
pub fn is_admissible(m: &IncidenceMatrix, code: &DoodleCode) -> bool {
    admissible_embedding(m, code).is_some()
}

/// The embedding witnessing admissibility.
pub fn admissible_embedding(m: &IncidenceMatrix, code: &DoodleCode) -> Option<PlaneGraph> {
    if !valencies_match(m, code) {
        return None;
    }
    let g = planar_embed(m)?;
    if g.faces().iter().all(|f| f.len() == 4) {
        Some(g)
    } else {
        None
    }
}
