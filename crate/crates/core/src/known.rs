//! Hand-built reference diagrams.

use alloc::vec;
use alloc::vec::Vec;

use crate::diagram::DoodleDiagram;

/// The Borromean rings: the octahedral graph drawn as a hexagon with an
/// inner triangle on the even crossings and an outer one on the odd.
pub fn borromean() -> DoodleDiagram {
    let rot: Vec<[usize; 4]> = (0..6)
        .map(|i| {
            let f = |k: usize| (i + k) % 6;
            if i % 2 == 0 {
                [f(1), f(2), f(4), f(5)]
            } else {
                [f(1), f(5), f(4), f(2)]
            }
        })
        .collect();
    DoodleDiagram::from_rotation(&rot).expect("octahedron rotation")
}

/// The poppy: the square antiprism.
pub fn poppy() -> DoodleDiagram {
    let a = |i: usize| i % 4;
    let b = |i: usize| 4 + i % 4;
    let mut rot = vec![[0; 4]; 8];
    for i in 0..4 {
        rot[a(i)] = [b(i), a(i + 1), a(i + 3), b(i + 3)];
        rot[b(i)] = [b(i + 1), a(i + 1), a(i), b(i + 3)];
    }
    DoodleDiagram::from_rotation(&rot).expect("antiprism rotation")
}

/// A single crossing whose strands close into two loops.
pub fn kink() -> DoodleDiagram {
    DoodleDiagram::from_partner(vec![1, 0, 3, 2], 0).expect("kink")
}

/// Two circles crossing each other twice.
pub fn two_circles_two_crossings() -> DoodleDiagram {
    DoodleDiagram::from_partner(vec![6, 5, 4, 7, 2, 1, 0, 3], 0).expect("two circles")
}
