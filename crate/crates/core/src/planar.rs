//! Planarity testing with embedding for small simple graphs.
//!
//! Each biconnected block is embedded by path addition in the style of
//! Demoucron, Malgrange and Pertuiset; block rotations are then spliced at
//! cut vertices. A rotation is returned as the neighbour order around every
//! vertex, read so that a face leaving `a` towards `b` continues from `b`
//! to the rotation successor of `a` at `b`.

use alloc::vec;
use alloc::vec::Vec;

/// A planar rotation system for the simple graph with `n` vertices and the
/// given edges, or `None` when the graph is not planar.
pub fn planar_rotation(n: usize, edges: &[(usize, usize)]) -> Option<Vec<Vec<usize>>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        debug_assert!(u != v && u < n && v < n);
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut rotation = vec![Vec::new(); n];
    for block in blocks(&adj) {
        let rot = if block.len() == 1 {
            let (u, v) = block[0];
            let mut r = vec![Vec::new(); n];
            r[u].push(v);
            r[v].push(u);
            r
        } else {
            embed_block(n, &block)?
        };
        for (v, list) in rot.into_iter().enumerate() {
            rotation[v].extend(list);
        }
    }
    Some(rotation)
}

pub fn is_planar(n: usize, edges: &[(usize, usize)]) -> bool {
    planar_rotation(n, edges).is_some()
}

/// Biconnected blocks as edge lists.
fn blocks(adj: &[Vec<usize>]) -> Vec<Vec<(usize, usize)>> {
    struct State<'a> {
        adj: &'a [Vec<usize>],
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        out: Vec<Vec<(usize, usize)>>,
    }
    fn dfs(s: &mut State<'_>, u: usize, parent: usize) {
        s.time += 1;
        s.disc[u] = s.time;
        s.low[u] = s.time;
        for i in 0..s.adj[u].len() {
            let v = s.adj[u][i];
            if s.disc[v] == 0 {
                s.stack.push((u, v));
                dfs(s, v, u);
                s.low[u] = s.low[u].min(s.low[v]);
                if s.low[v] >= s.disc[u] {
                    let mut block = Vec::new();
                    while let Some(e) = s.stack.pop() {
                        block.push(e);
                        if e == (u, v) {
                            break;
                        }
                    }
                    s.out.push(block);
                }
            } else if v != parent && s.disc[v] < s.disc[u] {
                s.stack.push((u, v));
                s.low[u] = s.low[u].min(s.disc[v]);
            }
        }
    }
    let n = adj.len();
    let mut s = State {
        adj,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for u in 0..n {
        if s.disc[u] == 0 {
            dfs(&mut s, u, usize::MAX);
        }
    }
    s.out
}

struct Fragment {
    attachments: Vec<usize>,
    /// Unembedded vertices of the fragment; empty for a single edge.
    inner: Vec<usize>,
}

fn embed_block(n: usize, block: &[(usize, usize)]) -> Option<Vec<Vec<usize>>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in block {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut in_block = vec![false; n];
    for &(u, v) in block {
        in_block[u] = true;
        in_block[v] = true;
    }
    let mut edge_done = vec![false; n * n];
    let mut vert_done = vec![false; n];
    let mut remaining = block.len();
    let mark = |edge_done: &mut Vec<bool>, a: usize, b: usize, remaining: &mut usize| {
        edge_done[a * n + b] = true;
        edge_done[b * n + a] = true;
        *remaining -= 1;
    };

    // Initial cycle through the first edge.
    let (s, t) = block[0];
    let cycle = {
        let mut prev = vec![usize::MAX; n];
        prev[t] = t;
        let mut queue = alloc::collections::VecDeque::from([t]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if prev[y] == usize::MAX && !(x == t && y == s) {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        let mut path = vec![s];
        let mut x = s;
        while x != t {
            x = prev[x];
            path.push(x);
        }
        path
    };
    for i in 0..cycle.len() {
        let a = cycle[i];
        let b = cycle[(i + 1) % cycle.len()];
        vert_done[a] = true;
        mark(&mut edge_done, a, b, &mut remaining);
    }
    let mut rev = cycle.clone();
    rev.reverse();
    let mut faces: Vec<Vec<usize>> = vec![cycle, rev];

    while remaining > 0 {
        let frags = fragments(n, &adj, &in_block, &vert_done, &edge_done);
        let mut choice: Option<(usize, usize)> = None;
        for (fi, fr) in frags.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&k| fr.attachments.iter().all(|a| faces[k].contains(a)))
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face) = choice.expect("a fragment remains while edges remain");
        let fr = &frags[fi];
        let path = fragment_path(n, &adj, fr, &vert_done);
        for w in path.windows(2) {
            mark(&mut edge_done, w[0], w[1], &mut remaining);
        }
        for &v in &path {
            vert_done[v] = true;
        }
        let f = core::mem::take(&mut faces[face]);
        let a = path[0];
        let b = *path.last().unwrap();
        let ia = f.iter().position(|&x| x == a).unwrap();
        let ib = f.iter().position(|&x| x == b).unwrap();
        let k = f.len();
        let walk = |from: usize, to: usize| {
            let mut out = Vec::new();
            let mut i = from;
            loop {
                out.push(f[i]);
                if i == to {
                    break;
                }
                i = (i + 1) % k;
            }
            out
        };
        let inner = &path[1..path.len() - 1];
        // a .. b along the face, then back to a along the path.
        let mut f1 = walk(ia, ib);
        f1.extend(inner.iter().rev());
        // b .. a along the face, then back to b along the path.
        let mut f2 = walk(ib, ia);
        f2.extend(inner.iter());
        faces[face] = f1;
        faces.push(f2);
    }

    let mut succ = vec![usize::MAX; n * n];
    for f in &faces {
        let k = f.len();
        for i in 0..k {
            let a = f[(i + k - 1) % k];
            let b = f[i];
            let c = f[(i + 1) % k];
            succ[b * n + a] = c;
        }
    }
    let mut rot = vec![Vec::new(); n];
    for v in 0..n {
        if adj[v].is_empty() {
            continue;
        }
        let first = adj[v][0];
        let mut x = first;
        loop {
            rot[v].push(x);
            x = succ[v * n + x];
            if x == first {
                break;
            }
        }
        debug_assert_eq!(rot[v].len(), adj[v].len());
    }
    Some(rot)
}

fn fragments(n: usize, adj: &[Vec<usize>], in_block: &[bool], vert_done: &[bool], edge_done: &[bool]) -> Vec<Fragment> {
    let mut out = Vec::new();
    for u in 0..n {
        if !vert_done[u] {
            continue;
        }
        for &v in &adj[u] {
            if u < v && vert_done[v] && !edge_done[u * n + v] {
                out.push(Fragment {
                    attachments: vec![u, v],
                    inner: Vec::new(),
                });
            }
        }
    }
    let mut seen = vec![false; n];
    for s in 0..n {
        if !in_block[s] || vert_done[s] || seen[s] {
            continue;
        }
        let mut inner = vec![s];
        let mut attach = Vec::new();
        seen[s] = true;
        let mut head = 0;
        while head < inner.len() {
            let x = inner[head];
            head += 1;
            for &y in &adj[x] {
                if vert_done[y] {
                    if !attach.contains(&y) {
                        attach.push(y);
                    }
                } else if !seen[y] {
                    seen[y] = true;
                    inner.push(y);
                }
            }
        }
        out.push(Fragment {
            attachments: attach,
            inner,
        });
    }
    out
}

/// A path through the fragment joining two distinct attachments.
fn fragment_path(n: usize, adj: &[Vec<usize>], fr: &Fragment, vert_done: &[bool]) -> Vec<usize> {
    if fr.inner.is_empty() {
        return fr.attachments.clone();
    }
    let a = fr.attachments[0];
    let mut prev = vec![usize::MAX; n];
    let mut queue = alloc::collections::VecDeque::new();
    for &y in &adj[a] {
        if !vert_done[y] && fr.inner.contains(&y) && prev[y] == usize::MAX {
            prev[y] = a;
            queue.push_back(y);
        }
    }
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if vert_done[y] {
                if y != a {
                    let mut path = vec![y];
                    let mut z = x;
                    while z != a {
                        path.push(z);
                        z = prev[z];
                    }
                    path.push(a);
                    path.reverse();
                    return path;
                }
            } else if prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    unreachable!("fragment of a biconnected block has two attachments")
}

/// Faces of a rotation system as vertex cycles.
pub fn rotation_faces(rotation: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = rotation.len();
    let pos = |v: usize, w: usize| rotation[v].iter().position(|&x| x == w).unwrap();
    let mut used: Vec<Vec<bool>> = rotation.iter().map(|r| vec![false; r.len()]).collect();
    let mut faces = Vec::new();
    for v in 0..n {
        for i in 0..rotation[v].len() {
            if used[v][i] {
                continue;
            }
            let mut face = Vec::new();
            let (mut a, mut ai) = (v, i);
            loop {
                used[a][ai] = true;
                face.push(a);
                let b = rotation[a][ai];
                let back = pos(b, a);
                let next = (back + 1) % rotation[b].len();
                a = b;
                ai = next;
                if a == v && ai == i {
                    break;
                }
            }
            faces.push(face);
        }
    }
    faces
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(k: usize) -> Vec<(usize, usize)> {
        let mut e = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                e.push((i, j));
            }
        }
        e
    }

    fn euler_ok(n: usize, edges: &[(usize, usize)]) -> bool {
        let rot = planar_rotation(n, edges).unwrap();
        let f = rotation_faces(&rot).len();
        n + f == edges.len() + 2
    }

    #[test]
    fn small_complete_graphs() {
        assert!(euler_ok(4, &complete(4)));
        assert!(is_planar(5, &complete(5)[1..]));
        assert!(!is_planar(5, &complete(5)));
        assert!(!is_planar(6, &complete(6)));
    }

    #[test]
    fn k33_is_not_planar() {
        let mut e = Vec::new();
        for i in 0..3 {
            for j in 3..6 {
                e.push((i, j));
            }
        }
        assert!(!is_planar(6, &e));
        e.pop();
        assert!(euler_ok(6, &e));
    }

    #[test]
    fn cube_and_octahedron() {
        let cube = [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4), (1, 5), (2, 6), (3, 7)];
        assert!(euler_ok(8, &cube));
        let rot = planar_rotation(8, &cube).unwrap();
        assert!(rotation_faces(&rot).iter().all(|f| f.len() == 4));
        let mut oct = Vec::new();
        for i in 0..6 {
            for j in i + 1..6 {
                if j != i + 3 {
                    oct.push((i, j));
                }
            }
        }
        assert_eq!(oct.len(), 12);
        assert!(euler_ok(6, &oct));
    }

    #[test]
    fn cut_vertices_are_spliced() {
        // Two triangles sharing vertex 0, plus a pendant edge.
        let e = [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0), (4, 5)];
        assert!(euler_ok(6, &e));
        // Two K4s sharing a vertex.
        let e = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (0, 5), (0, 6), (4, 5), (4, 6), (5, 6)];
        assert!(euler_ok(7, &e));
    }

    #[test]
    fn petersen_is_not_planar() {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        assert!(!is_planar(10, &e));
    }
}
