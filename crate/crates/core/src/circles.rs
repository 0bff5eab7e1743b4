//! Removable vertex circles.
//!
//! A vertex circle is a simple component that crosses the rest of the diagram
//! exactly four times and encloses a single crossing on one side, as if drawn
//! tightly around it. Deleting one from a minimal diagram often leaves a
//! smaller minimal diagram; the prime census omits those.

use alloc::vec;
use alloc::vec::Vec;

use crate::diagram::{crossing_of, dart, Component, Dart, DoodleDiagram};

/// Vertex circles whose removal leaves a minimal diagram.
pub fn find_removable_vertex_circles(d: &DoodleDiagram) -> Vec<Component> {
    if !d.is_connected() {
        return Vec::new();
    }
    let (regions, face_of) = d.faces();
    d.components()
        .into_iter()
        .filter(|c| !c.is_floating() && !c.self_crossing && c.darts.len() == 4)
        .filter(|c| encloses_one_crossing(d, c, regions.len(), &face_of))
        .filter(|c| d.delete_component(c).is_minimal())
        .collect()
}

fn encloses_one_crossing(d: &DoodleDiagram, c: &Component, faces: usize, face_of: &[usize]) -> bool {
    let mut on_circle = vec![false; 4 * d.n()];
    for &x in &c.darts {
        on_circle[x] = true;
        on_circle[d.partner(x)] = true;
    }
    let mut parent: Vec<usize> = (0..faces).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for x in 0..4 * d.n() {
        if !on_circle[x] {
            let (a, b) = (find(&mut parent, face_of[x]), find(&mut parent, face_of[d.partner(x)]));
            if a != b {
                parent[a] = b;
            }
        }
    }
    let on: Vec<usize> = c.crossings().collect();
    let mut sides: Vec<(usize, usize)> = Vec::new();
    for v in (0..d.n()).filter(|v| !on.contains(v)) {
        let s = find(&mut parent, face_of[dart(v, 0)]);
        match sides.iter_mut().find(|(r, _)| *r == s) {
            Some(e) => e.1 += 1,
            None => sides.push((s, 1)),
        }
    }
    sides.iter().any(|&(_, k)| k == 1)
}

/// Draws a small circle around crossing `c`, cutting each of its four edges.
/// The new crossings are appended; `c` must not carry a loop.
pub fn add_vertex_circle(d: &DoodleDiagram, c: usize) -> DoodleDiagram {
    let n = d.n();
    let mut partner = d.partners().to_vec();
    partner.extend([0; 16]);
    let x = |s: usize, slot: usize| -> Dart { dart(n + s, slot) };
    let mut link = |a: Dart, b: Dart| {
        partner[a] = b;
        partner[b] = a;
    };
    for s in 0..4 {
        let inner = dart(c, s);
        let outer = d.partner(inner);
        debug_assert_ne!(crossing_of(outer), c);
        // Slot 0 faces `c`, slot 2 faces away, slots 1 and 3 run along the circle.
        link(inner, x(s, 0));
        link(x(s, 2), outer);
        link(x(s, 3), x((s + 1) % 4, 1));
    }
    DoodleDiagram::from_partner(partner, d.floating_circles()).expect("valid pairing")
}
