//! Twin group words and their closures.
//!
//! The twin group on `k` strands is generated by involutions `t_1..t_{k-1}`
//! with `t_i t_j = t_j t_i` whenever `|i - j| > 1`. A word is drawn bottom to
//! top on `k` vertical strands, `t_i` crossing strands `i` and `i + 1`; its
//! closure joins the top of each strand to its bottom around the side.
//!
//! Going the other way, a connected diagram is oriented, its Seifert circles
//! are made coherent with finger moves, and the word is read off around the
//! common axis. Text form: `k=4: t3 t1 t2`.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::diagram::{ccw, crossing_of, cw, dart, Dart, DoodleDiagram};
use crate::error::{malformed, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwinWord {
    strands: usize,
    letters: Vec<usize>,
}

impl TwinWord {
    pub fn new(strands: usize, letters: Vec<usize>) -> Result<Self> {
        if strands == 0 {
            return Err(malformed("twin word", "no strands"));
        }
        if let Some(&l) = letters.iter().find(|&&l| l == 0 || l >= strands) {
            return Err(malformed("twin word", alloc::format!("t{l} on {strands} strands")));
        }
        Ok(Self { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Shortlex-least word for the same group element.
    pub fn normalize(&self) -> TwinWord {
        let commute = |a: usize, b: usize| a.abs_diff(b) > 1;
        // Free reduction: a letter cancels against an equal one it can slide to.
        let mut reduced: Vec<usize> = Vec::with_capacity(self.letters.len());
        for &x in &self.letters {
            let mut cancelled = false;
            for j in (0..reduced.len()).rev() {
                if reduced[j] == x {
                    reduced.remove(j);
                    cancelled = true;
                    break;
                }
                if !commute(reduced[j], x) {
                    break;
                }
            }
            if !cancelled {
                reduced.push(x);
            }
        }
        // Lexicographically least arrangement: repeatedly take the smallest
        // letter that commutes with everything before it.
        let mut out = Vec::with_capacity(reduced.len());
        while !reduced.is_empty() {
            let mut best = 0;
            for j in 1..reduced.len() {
                if reduced[j] < reduced[best] && reduced[..j].iter().all(|&y| commute(y, reduced[j])) {
                    best = j;
                }
            }
            out.push(reduced.remove(best));
        }
        TwinWord {
            strands: self.strands,
            letters: out,
        }
    }

    /// The closure as a diagram. Crossing `j` comes from letter `j`, with
    /// slots `0..4` at its south-west, south-east, north-east and north-west
    /// corners. Strands no letter touches become floating circles.
    pub fn closure(&self) -> DoodleDiagram {
        let n = self.letters.len();
        let mut partner = vec![usize::MAX; 4 * n];
        let mut bottom: Vec<Option<Dart>> = vec![None; self.strands];
        let mut top: Vec<Option<Dart>> = vec![None; self.strands];
        let attach = |partner: &mut Vec<usize>, bottom: &mut Vec<Option<Dart>>, end: Option<Dart>, pos: usize, x: Dart| match end {
            Some(e) => {
                partner[e] = x;
                partner[x] = e;
            }
            None => bottom[pos] = Some(x),
        };
        for (c, &l) in self.letters.iter().enumerate() {
            let (left, right) = (l - 1, l);
            attach(&mut partner, &mut bottom, top[left], left, dart(c, 0));
            attach(&mut partner, &mut bottom, top[right], right, dart(c, 1));
            top[left] = Some(dart(c, 3));
            top[right] = Some(dart(c, 2));
        }
        let mut floating = 0;
        for pos in 0..self.strands {
            match (top[pos], bottom[pos]) {
                (Some(a), Some(b)) => {
                    partner[a] = b;
                    partner[b] = a;
                }
                _ => floating += 1,
            }
        }
        DoodleDiagram::from_partner(partner, floating).expect("closure pairing")
    }
}

impl fmt::Display for TwinWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={}:", self.strands)?;
        for l in &self.letters {
            write!(f, " t{l}")?;
        }
        Ok(())
    }
}

impl FromStr for TwinWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || malformed("twin word", String::from(s));
        let (head, rest) = s.trim().split_once(':').ok_or_else(bad)?;
        let k = head.trim().strip_prefix("k=").ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let letters = rest
            .split_whitespace()
            .map(|t| t.strip_prefix('t').and_then(|v| v.parse().ok()).ok_or_else(bad))
            .collect::<Result<Vec<usize>>>()?;
        TwinWord::new(k, letters)
    }
}

/// `forward[x]` is true when the oriented strand leaves its crossing through
/// dart `x`. Component `i` (in [`DoodleDiagram::components`] order) runs
/// against its traversal when `reversed[i]` is set.
pub fn orientation(d: &DoodleDiagram, reversed: &[bool]) -> Vec<bool> {
    let mut forward = vec![false; 4 * d.n()];
    for (i, comp) in d.components().iter().filter(|c| !c.is_floating()).enumerate() {
        let rev = reversed.get(i).copied().unwrap_or(false);
        for &x in &comp.darts {
            forward[x] = !rev;
            forward[d.partner(x)] = rev;
        }
    }
    forward
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertGraph {
    /// Each circle as its outgoing darts in travel order.
    pub circles: Vec<Vec<Dart>>,
    /// Circle carrying the edge of each dart.
    pub circle_of: Vec<usize>,
    /// `(crossing, circle, circle)` for every crossing.
    pub bridges: Vec<(usize, usize, usize)>,
}

/// Outgoing slot joined to the incoming slot `q` by the oriented smoothing.
fn smooth(forward: &[bool], q: Dart) -> Dart {
    if forward[ccw(q)] {
        ccw(q)
    } else {
        cw(q)
    }
}

pub fn seifert_graph(d: &DoodleDiagram, forward: &[bool]) -> SeifertGraph {
    let darts = 4 * d.n();
    let mut circle_of = vec![usize::MAX; darts];
    let mut circles = Vec::new();
    for start in (0..darts).filter(|&x| forward[x]) {
        if circle_of[start] != usize::MAX {
            continue;
        }
        let id = circles.len();
        let mut circle = Vec::new();
        let mut x = start;
        loop {
            circle_of[x] = id;
            circle_of[d.partner(x)] = id;
            circle.push(x);
            x = smooth(forward, d.partner(x));
            if x == start {
                break;
            }
        }
        circles.push(circle);
    }
    let bridges = (0..d.n())
        .map(|c| {
            let outs: Vec<usize> = (0..4).map(|s| dart(c, s)).filter(|&x| forward[x]).collect();
            (c, circle_of[outs[0]], circle_of[outs[1]])
        })
        .collect();
    SeifertGraph {
        circles,
        circle_of,
        bridges,
    }
}

/// A face containing two edges of different circles that both run with (or
/// both against) the face boundary. Returns those two face darts.
fn find_defect(d: &DoodleDiagram, forward: &[bool], s: &SeifertGraph) -> Option<(Dart, Dart)> {
    let (regions, _) = d.faces();
    for r in &regions {
        let ds = r.darts();
        for (i, &a) in ds.iter().enumerate() {
            for &b in &ds[i + 1..] {
                if forward[a] == forward[b] && s.circle_of[a] != s.circle_of[b] {
                    return Some((a, b));
                }
            }
        }
    }
    None
}

/// Pushes a finger of the edge of `a` across the edge of `b` inside the face
/// both darts bound, adding two crossings.
fn v_move(d: &DoodleDiagram, forward: &[bool], a: Dart, b: Dart) -> (DoodleDiagram, Vec<bool>) {
    let n = d.n();
    let (x, y) = (n, n + 1);
    let (pa, pb) = (d.partner(a), d.partner(b));
    let (fa, fb) = (forward[a], forward[b]);
    let mut partner = d.partners().to_vec();
    partner.extend([0; 8]);
    let mut fw = forward.to_vec();
    fw.extend([false; 8]);
    let mut link = |p: Dart, q: Dart| {
        partner[p] = q;
        partner[q] = p;
    };
    link(a, dart(x, 0));
    link(pb, dart(x, 1));
    link(dart(x, 2), dart(y, 2));
    link(dart(x, 3), dart(y, 1));
    link(pa, dart(y, 0));
    link(b, dart(y, 3));
    fw[dart(x, 0)] = !fa;
    fw[dart(x, 2)] = fa;
    fw[dart(y, 2)] = !fa;
    fw[dart(y, 0)] = fa;
    fw[dart(y, 3)] = !fb;
    fw[dart(y, 1)] = fb;
    fw[dart(x, 3)] = !fb;
    fw[dart(x, 1)] = fb;
    let out = DoodleDiagram::from_partner(partner, d.floating_circles()).expect("finger move pairing");
    debug_assert!(out.is_plane());
    (out, fw)
}

/// Result of making the Seifert circles coherent.
#[derive(Clone, Debug)]
pub struct Braided {
    pub diagram: DoodleDiagram,
    pub forward: Vec<bool>,
    pub v_moves: usize,
}

/// Applies finger moves until no face holds an incoherent pair of circles.
pub fn braid(d: &DoodleDiagram, reversed: &[bool]) -> Braided {
    let mut diagram = d.clone();
    let mut forward = orientation(d, reversed);
    let mut v_moves = 0;
    loop {
        let s = seifert_graph(&diagram, &forward);
        let Some((a, b)) = find_defect(&diagram, &forward, &s) else {
            return Braided {
                diagram,
                forward,
                v_moves,
            };
        };
        let (next, fw) = v_move(&diagram, &forward, a, b);
        diagram = next;
        forward = fw;
        v_moves += 1;
        assert!(v_moves <= 4 * (d.n() + 2) * (d.n() + 2), "finger moves do not terminate");
    }
}

/// Reads the word of a braided diagram around its axis.
fn read_word(b: &Braided) -> TwinWord {
    let d = &b.diagram;
    let s = seifert_graph(d, &b.forward);
    let k = s.circles.len();
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); k];
    for &(_, u, v) in &s.bridges {
        assert_ne!(u, v, "crossing joins a circle to itself");
        adj[u].insert(v);
        adj[v].insert(u);
    }
    let end = (0..k).find(|&c| adj[c].len() == 1).expect("circle graph is a path");
    let mut path = vec![end];
    while path.len() < k {
        let last = path[path.len() - 1];
        let prev = if path.len() > 1 { Some(path[path.len() - 2]) } else { None };
        let next = adj[last].iter().copied().find(|&c| Some(c) != prev).expect("circle graph is a path");
        assert!(adj[last].len() <= 2 && !path.contains(&next), "circle graph is a path");
        path.push(next);
    }
    let mut level = vec![0usize; k];
    for (i, &c) in path.iter().enumerate() {
        level[c] = i;
    }
    // A ray from inside the innermost circle out across every circle once.
    let (regions, face_of) = d.faces();
    let mut face = regions
        .iter()
        .position(|r| r.darts().iter().all(|&x| s.circle_of[x] == path[0]))
        .expect("innermost circle bounds a face");
    let mut cut = vec![0usize; k];
    for &c in &path {
        let x = *regions[face]
            .darts()
            .iter()
            .find(|&&x| s.circle_of[x] == c)
            .expect("ray reaches the next circle");
        cut[c] = if b.forward[x] { x } else { d.partner(x) };
        face = face_of[d.partner(x)];
    }
    // Each circle orders its crossings starting after the cut.
    let n = d.n();
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut indeg = vec![0usize; n];
    for (c, circle) in s.circles.iter().enumerate() {
        let start = circle.iter().position(|&x| x == cut[c]).unwrap();
        let seq: Vec<usize> = (0..circle.len())
            .map(|j| crossing_of(d.partner(circle[(start + j) % circle.len()])))
            .collect();
        for w in seq.windows(2) {
            succ[w[0]].push(w[1]);
            indeg[w[1]] += 1;
        }
    }
    let letter = |c: usize| {
        let (_, u, v) = s.bridges[c];
        level[u].min(level[v]) + 1
    };
    let mut ready: BTreeSet<(usize, usize)> = (0..n).filter(|&c| indeg[c] == 0).map(|c| (letter(c), c)).collect();
    let mut letters = Vec::with_capacity(n);
    while let Some(&(l, c)) = ready.iter().next() {
        ready.remove(&(l, c));
        letters.push(l);
        for &w in &succ[c] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                ready.insert((letter(w), w));
            }
        }
    }
    assert_eq!(letters.len(), n, "readout constraints are cyclic");
    TwinWord { strands: k, letters }
}

/// A word whose closure reduces to `d`. Every orientation of the components
/// is tried and the first one needing the fewest finger moves is used.
pub fn to_twin_word(d: &DoodleDiagram) -> Result<TwinWord> {
    if d.n() == 0 {
        return Err(Error::NoCrossings);
    }
    if !d.is_connected() {
        return Err(Error::Disconnected);
    }
    let m = d.component_count();
    let mut best: Option<Braided> = None;
    for mask in 0u64..(1u64 << m) {
        let reversed: Vec<bool> = (0..m).map(|i| (mask >> (m - 1 - i)) & 1 == 1).collect();
        let b = braid(d, &reversed);
        if best.as_ref().is_none_or(|x| b.v_moves < x.v_moves) {
            best = Some(b);
        }
    }
    Ok(read_word(&best.unwrap()))
}

impl DoodleDiagram {
    pub fn to_twin_word(&self) -> Result<TwinWord> {
        to_twin_word(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::known;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn w(k: usize, l: &[usize]) -> TwinWord {
        TwinWord::new(k, l.to_vec()).unwrap()
    }

    #[test]
    fn text_form() {
        let t = w(4, &[3, 1, 2]);
        assert_eq!(t.to_string(), "k=4: t3 t1 t2");
        assert_eq!("k=4: t3 t1 t2".parse::<TwinWord>().unwrap(), t);
        assert_eq!(w(2, &[]).to_string(), "k=2:");
        assert!("k=2: t2".parse::<TwinWord>().is_err());
    }

    #[test]
    fn normal_forms() {
        assert_eq!(w(4, &[3, 1, 2]).normalize(), w(4, &[1, 3, 2]));
        assert_eq!(w(4, &[1, 3, 1]).normalize(), w(4, &[3]));
        assert_eq!(w(3, &[1, 2, 1]).normalize(), w(3, &[1, 2, 1]));
        assert_eq!(w(5, &[2, 4, 1, 3, 3, 1, 4, 2]).normalize(), w(5, &[]));
    }

    #[test]
    fn closure_of_single_letter() {
        let d = w(2, &[1]).closure();
        assert_eq!(d.n(), 1);
        assert_eq!(d.partners(), &[3, 2, 1, 0]);
        assert!(d.is_plane());
        let d = w(3, &[1]).closure();
        assert_eq!(d.floating_circles(), 1);
    }

    #[test]
    fn seifert_circles_of_a_kink() {
        let d = w(2, &[1]).closure();
        let s = seifert_graph(&d, &orientation(&d, &[false]));
        assert_eq!(s.circles.len(), 2);
        assert_eq!(s.bridges.len(), 1);
    }

    #[test]
    fn borromean_seifert_graph() {
        let b = known::borromean();
        let s = seifert_graph(&b, &orientation(&b, &[false, false, false]));
        assert_eq!(s.bridges.len(), 6);
        assert_eq!(s.circles.iter().map(Vec::len).sum::<usize>(), 12);
    }

    #[test]
    fn finger_move_undoes_by_reduction() {
        let b = known::borromean();
        let fw = orientation(&b, &[false, true, false]);
        let s = seifert_graph(&b, &fw);
        if let Some((x, y)) = find_defect(&b, &fw, &s) {
            let (m, _) = v_move(&b, &fw, x, y);
            assert_eq!(m.n(), 8);
            assert!(m.is_plane());
            assert_eq!(m.reduce().canonical_key(), b.canonical_key());
        }
    }

    #[test]
    fn words_close_to_their_diagrams() {
        for d in [known::borromean(), known::poppy()] {
            let t = to_twin_word(&d).unwrap();
            assert_eq!(t.closure().reduce().canonical_key(), d.canonical_key(), "{t}");
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn normalize_is_idempotent(k in 2usize..6, raw in proptest::collection::vec(0usize..100, 0..16)) {
            let t = TwinWord::new(k, raw.iter().map(|x| x % (k - 1) + 1).collect()).unwrap();
            let n = t.normalize();
            prop_assert_eq!(n.normalize(), n.clone());
            prop_assert!(n.len() <= t.len());
            prop_assert_eq!(n.len() % 2, t.len() % 2);
        }

        #[test]
        fn closures_are_plane(k in 2usize..6, raw in proptest::collection::vec(0usize..100, 0..16)) {
            let t = TwinWord::new(k, raw.iter().map(|x| x % (k - 1) + 1).collect()).unwrap();
            prop_assert!(t.closure().is_plane());
        }
    }
}
