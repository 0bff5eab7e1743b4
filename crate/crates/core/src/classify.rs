//! Connectivity, primality and the structure of boundary regions.

use alloc::vec;
use alloc::vec::Vec;

use crate::diagram::{ccw, crossing_of, opposite, Dart, DoodleDiagram, Region};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Classification {
    pub connectivity: usize,
    pub is_prime: bool,
    pub is_super_prime: bool,
    /// Number of components.
    pub m: usize,
}

fn connected_without(adj: &[Vec<usize>], removed: &[bool]) -> bool {
    let n = adj.len();
    let Some(start) = (0..n).find(|&v| !removed[v]) else {
        return true;
    };
    let mut seen = removed.to_vec();
    seen[start] = true;
    let mut stack = vec![start];
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

/// Largest `k <= 4` for which the simple crossing graph is `k`-connected,
/// capped at `n - 1`. Found by removing every vertex set of size below `k`.
pub fn vertex_connectivity(d: &DoodleDiagram) -> Result<usize> {
    let n = d.n();
    if n < 2 {
        return Err(Error::Degenerate);
    }
    let adj = d.simple_adjacency();
    let cap = 4.min(n - 1);
    let mut removed = vec![false; n];
    if !connected_without(&adj, &removed) {
        return Ok(0);
    }
    for k in 1..cap {
        if has_separator(&adj, &mut removed, k, 0) {
            return Ok(k);
        }
    }
    Ok(cap)
}

fn has_separator(adj: &[Vec<usize>], removed: &mut [bool], k: usize, from: usize) -> bool {
    if k == 0 {
        return !connected_without(adj, removed);
    }
    for v in from..adj.len() {
        removed[v] = true;
        let found = has_separator(adj, removed, k - 1, v + 1);
        removed[v] = false;
        if found {
            return true;
        }
    }
    false
}

pub fn classify(d: &DoodleDiagram) -> Result<Classification> {
    let connectivity = vertex_connectivity(d)?;
    Ok(Classification {
        connectivity,
        is_prime: connectivity >= 3,
        is_super_prime: connectivity >= 4,
        m: d.component_count(),
    })
}

/// Every pair of regions is disjoint, meets in a single vertex, or meets in
/// a single edge and nothing else; every region is an embedded polygon.
pub fn region_pair_criterion(d: &DoodleDiagram) -> bool {
    let Ok(regions) = d.trace_regions() else {
        return false;
    };
    let mut verts: Vec<Vec<usize>> = Vec::with_capacity(regions.len());
    let mut edges: Vec<Vec<Dart>> = Vec::with_capacity(regions.len());
    for r in &regions {
        let mut v: Vec<usize> = r.corners(d).collect();
        let mut e: Vec<Dart> = r.edges(d).collect();
        v.sort_unstable();
        e.sort_unstable();
        let (lv, le) = (v.len(), e.len());
        v.dedup();
        e.dedup();
        if v.len() != lv || e.len() != le {
            return false;
        }
        verts.push(v);
        edges.push(e);
    }
    let shared = |a: &[usize], b: &[usize]| a.iter().filter(|x| b.binary_search(x).is_ok()).count();
    for i in 0..regions.len() {
        for j in i + 1..regions.len() {
            let e = shared(&edges[i], &edges[j]);
            let v = shared(&verts[i], &verts[j]);
            let ok = (e == 0 && v <= 1) || (e == 1 && v == 2);
            if !ok {
                return false;
            }
        }
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RegionLabel {
    Infinite,
    V,
    E,
    Interior,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryLabeling {
    /// Label of every region, indexed like `DoodleDiagram::faces`.
    pub labels: Vec<RegionLabel>,
    /// Boundary regions in order around the boundary: the e-region across
    /// each boundary edge followed by the v-region at the next corner.
    pub ring: Vec<usize>,
    /// Edge ids of the semi-boundary edges.
    pub semi_boundary_edges: Vec<Dart>,
    /// Crossings on the boundary.
    pub boundary_crossings: Vec<usize>,
}

impl BoundaryLabeling {
    pub fn count(&self, label: RegionLabel) -> usize {
        self.labels.iter().filter(|&&l| l == label).count()
    }

    /// The ring reads `E, V, E, V, ...` with every boundary region appearing once.
    pub fn alternates(&self) -> bool {
        let labels_ok = self.ring.iter().enumerate().all(|(i, &r)| {
            let want = if i % 2 == 0 { RegionLabel::E } else { RegionLabel::V };
            self.labels[r] == want
        });
        let mut sorted = self.ring.clone();
        sorted.sort_unstable();
        sorted.dedup();
        labels_ok && sorted.len() == self.ring.len()
    }
}

/// Labels the finite regions by how they meet the boundary of the chosen
/// infinite region.
pub fn label_boundary(d: &DoodleDiagram, infinite: &Region) -> Result<BoundaryLabeling> {
    let (regions, face_of) = d.faces();
    let inf = face_of[infinite.darts()[0]];
    let boundary_edges: Vec<Dart> = regions[inf].edges(d).collect();
    let mut boundary_crossings: Vec<usize> = regions[inf].corners(d).collect();
    boundary_crossings.sort_unstable();
    if boundary_crossings.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::NotPrimeOrNotMinimal);
    }
    let on_boundary = |c: usize| boundary_crossings.binary_search(&c).is_ok();
    let mut labels = vec![RegionLabel::Interior; regions.len()];
    labels[inf] = RegionLabel::Infinite;
    for (i, r) in regions.iter().enumerate() {
        if i == inf {
            continue;
        }
        let shared_edges: Vec<Dart> = r.edges(d).filter(|e| boundary_edges.contains(e)).collect();
        let mut touched: Vec<usize> = r.corners(d).filter(|&c| on_boundary(c)).collect();
        touched.sort_unstable();
        touched.dedup();
        let ends: Vec<usize> = shared_edges
            .iter()
            .flat_map(|&e| [crossing_of(e), crossing_of(d.partner(e))])
            .collect();
        let isolated = touched.iter().filter(|c| !ends.contains(c)).count();
        labels[i] = match (shared_edges.is_empty(), isolated == 0) {
            (true, true) => RegionLabel::Interior,
            (false, true) => RegionLabel::E,
            (true, false) => RegionLabel::V,
            (false, false) => return Err(Error::NotPrimeOrNotMinimal),
        };
    }
    let mut ring = Vec::new();
    let mut semi = Vec::new();
    let darts = regions[inf].darts();
    for (i, &x) in darts.iter().enumerate() {
        let next = darts[(i + 1) % darts.len()];
        ring.push(face_of[d.partner(x)]);
        ring.push(face_of[opposite(next)]);
        // The two slots at this corner that leave the boundary.
        let q = d.partner(x);
        for s in [opposite(q), opposite(ccw(q))] {
            semi.push(d.edge_id(s));
        }
    }
    semi.sort_unstable();
    semi.dedup();
    Ok(BoundaryLabeling {
        labels,
        ring,
        semi_boundary_edges: semi,
        boundary_crossings,
    })
}

/// Two boundary regions sharing an edge are one v-region and one e-region.
pub fn adjacency_parity_holds(d: &DoodleDiagram, lab: &BoundaryLabeling) -> bool {
    let (_, face_of) = d.faces();
    (0..4 * d.n()).all(|x| {
        let a = lab.labels[face_of[x]];
        let b = lab.labels[face_of[d.partner(x)]];
        !((a == RegionLabel::V && b == RegionLabel::V) || (a == RegionLabel::E && b == RegionLabel::E))
    })
}

/// A region with two semi-boundary edges meeting at an interior crossing is
/// an e-trigon.
pub fn e_trigon_property_holds(d: &DoodleDiagram, lab: &BoundaryLabeling) -> bool {
    let (regions, _) = d.faces();
    let semi = |x: Dart| lab.semi_boundary_edges.binary_search(&d.edge_id(x)).is_ok();
    regions.iter().enumerate().all(|(i, r)| {
        let ds = r.darts();
        (0..ds.len()).all(|k| {
            let x = ds[k];
            let y = ds[(k + 1) % ds.len()];
            let corner = crossing_of(d.partner(x));
            let interior = lab.boundary_crossings.binary_search(&corner).is_err();
            !(interior && semi(x) && semi(y)) || (lab.labels[i] == RegionLabel::E && r.size() == 3)
        })
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InnerComplement {
    pub vertices: Vec<usize>,
    /// Edge ids.
    pub edges: Vec<Dart>,
    /// Region indices.
    pub regions: Vec<usize>,
    pub components: usize,
    /// Rank of the first homology after filling the regions.
    pub h1: isize,
    /// Smallest vertex valency within the complement.
    pub min_valency: Option<usize>,
}

impl InnerComplement {
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_acyclic(&self) -> bool {
        self.h1 == 0
    }

    pub fn is_disk(&self) -> bool {
        self.components == 1 && self.h1 == 0 && !self.regions.is_empty()
    }
}

/// The crossings, edges and regions that do not touch the boundary of `region`.
pub fn inner_complement(d: &DoodleDiagram, region: &Region) -> InnerComplement {
    let (regions, face_of) = d.faces();
    let r = face_of[region.darts()[0]];
    let mut on = vec![false; d.n()];
    for c in regions[r].corners(d) {
        on[c] = true;
    }
    let vertices: Vec<usize> = (0..d.n()).filter(|&c| !on[c]).collect();
    let mut edges: Vec<Dart> = (0..4 * d.n())
        .filter(|&x| x < d.partner(x) && !on[crossing_of(x)] && !on[crossing_of(d.partner(x))])
        .collect();
    edges.sort_unstable();
    let inner_regions: Vec<usize> = (0..regions.len())
        .filter(|&i| regions[i].corners(d).all(|c| !on[c]))
        .collect();
    // Union-find over the 1-skeleton.
    let mut parent: Vec<usize> = (0..d.n()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut valency = vec![0usize; d.n()];
    for &e in &edges {
        let (a, b) = (crossing_of(e), crossing_of(d.partner(e)));
        valency[a] += 1;
        valency[b] += 1;
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
        }
    }
    let mut roots: Vec<usize> = vertices.iter().map(|&v| find(&mut parent, v)).collect();
    roots.sort_unstable();
    roots.dedup();
    let components = roots.len();
    let h1 = edges.len() as isize - vertices.len() as isize + components as isize - inner_regions.len() as isize;
    let min_valency = vertices.iter().map(|&v| valency[v]).min();
    InnerComplement {
        vertices,
        edges,
        regions: inner_regions,
        components,
        h1,
        min_valency,
    }
}

impl DoodleDiagram {
    pub fn classify(&self) -> Result<Classification> {
        classify(self)
    }
}
