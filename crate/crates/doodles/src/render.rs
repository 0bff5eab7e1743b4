//! SVG drawings.
//!
//! Every dart becomes a vertex of the truncated diagram: the four darts of a
//! crossing form a small square and each edge joins two darts. The darts of
//! the largest face are pinned to a circle and the rest are placed at the
//! average of their neighbours (Tutte's barycentric embedding). A crossing is
//! drawn where the diagonals of its square meet, and each strand is a chain
//! of quadratic curves through those points.

use std::f64::consts::TAU;
use std::fmt::Write;

use doodle_core::diagram::{ccw, crossing_of, dart, opposite, Region};
use doodle_core::{DoodleDiagram, Error};

const SIZE: f64 = 400.0;
const RADIUS: f64 = 180.0;
const SWEEPS: usize = 2000;
const PALETTE: [&str; 8] = [
    "#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf",
];

type Point = (f64, f64);

/// Positions for every dart, after barycentric relaxation.
pub fn layout(d: &DoodleDiagram) -> Result<Vec<Point>, Error> {
    let regions = d.trace_regions()?;
    let outer = regions
        .iter()
        .enumerate()
        .max_by_key(|(i, r)| (r.size(), std::cmp::Reverse(*i)))
        .map(|(_, r)| r)
        .expect("connected diagrams have regions");
    let darts = 4 * d.n();
    let mut pos = vec![(0.0, 0.0); darts];
    let mut pinned = vec![false; darts];
    let ring = outer_ring(d, outer);
    for (k, &x) in ring.iter().enumerate() {
        let a = TAU * k as f64 / ring.len() as f64;
        pos[x] = (RADIUS * a.cos(), RADIUS * a.sin());
        pinned[x] = true;
    }
    let neighbours: Vec<[usize; 3]> = (0..darts)
        .map(|x| [ccw(x), ccw(ccw(ccw(x))), d.partner(x)])
        .collect();
    for _ in 0..SWEEPS {
        for x in (0..darts).filter(|&x| !pinned[x]) {
            let (mut sx, mut sy) = (0.0, 0.0);
            for &y in &neighbours[x] {
                sx += pos[y].0;
                sy += pos[y].1;
            }
            pos[x] = (sx / 3.0, sy / 3.0);
        }
    }
    Ok(pos)
}

/// The face of the truncation lying inside `r`: each boundary edge
/// contributes both of its darts.
fn outer_ring(d: &DoodleDiagram, r: &Region) -> Vec<usize> {
    r.darts().iter().flat_map(|&x| [x, d.partner(x)]).collect()
}

fn crossing_point(pos: &[Point], c: usize) -> Point {
    let [a, b, p, q] = [0, 2, 1, 3].map(|s| pos[dart(c, s)]);
    let (r, s) = ((b.0 - a.0, b.1 - a.1), (q.0 - p.0, q.1 - p.1));
    let den = r.0 * s.1 - r.1 * s.0;
    if den.abs() < 1e-12 {
        return ((a.0 + b.0 + p.0 + q.0) / 4.0, (a.1 + b.1 + p.1 + q.1) / 4.0);
    }
    let t = ((p.0 - a.0) * s.1 - (p.1 - a.1) * s.0) / den;
    (a.0 + t * r.0, a.1 + t * r.1)
}

fn screen((x, y): Point) -> String {
    format!("{:.2},{:.2}", SIZE / 2.0 + x, SIZE / 2.0 - y)
}

fn mid(a: Point, b: Point) -> Point {
    ((a.0 + b.0) / 2.0, (a.1 + b.1) / 2.0)
}

/// Draws `d` as an SVG document with one `<g class="component">` per
/// component and one `class="crossing"` marker per crossing.
pub fn render_svg(d: &DoodleDiagram) -> Result<String, Error> {
    let floating = d.floating_circles();
    let width = SIZE + if floating > 0 { 60.0 } else { 0.0 };
    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{SIZE}" viewBox="0 0 {width} {SIZE}">"#
    )
    .unwrap();
    writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    let mut colour = 0;
    if d.n() > 0 {
        let pos = layout(d)?;
        let points: Vec<Point> = (0..d.n()).map(|c| crossing_point(&pos, c)).collect();
        for comp in d.components().iter().filter(|c| !c.is_floating()) {
            let stroke = PALETTE[colour % PALETTE.len()];
            colour += 1;
            writeln!(s, r#"<g class="component" stroke="{stroke}" stroke-width="3" fill="none">"#).unwrap();
            let first = comp.darts[0];
            let mut path = format!("M{}", screen(mid(pos[first], pos[d.partner(first)])));
            for &x in &comp.darts {
                let arrive = d.partner(x);
                let leave = opposite(arrive);
                let next = d.partner(leave);
                write!(
                    path,
                    " Q{} {} Q{} {}",
                    screen(pos[arrive]),
                    screen(points[crossing_of(arrive)]),
                    screen(pos[leave]),
                    screen(mid(pos[leave], pos[next]))
                )
                .unwrap();
            }
            path.push_str(" Z");
            writeln!(s, r#"<path d="{path}"/>"#).unwrap();
            writeln!(s, "</g>").unwrap();
        }
        for p in &points {
            let (x, y) = (SIZE / 2.0 + p.0, SIZE / 2.0 - p.1);
            writeln!(s, r#"<circle class="crossing" cx="{x:.2}" cy="{y:.2}" r="4" fill="black"/>"#).unwrap();
        }
    }
    for i in 0..floating {
        let stroke = PALETTE[colour % PALETTE.len()];
        colour += 1;
        let cy = 30.0 + 50.0 * i as f64;
        writeln!(s, r#"<g class="component" stroke="{stroke}" stroke-width="3" fill="none">"#).unwrap();
        writeln!(
            s,
            r#"<path d="M{:.2},{cy:.2} a20,20 0 1,0 40,0 a20,20 0 1,0 -40,0 Z"/>"#,
            SIZE + 10.0
        )
        .unwrap();
        writeln!(s, "</g>").unwrap();
    }
    s.push_str("</svg>\n");
    Ok(s)
}
