use doodles::catalog::{Catalog, Name};
use doodles::render::render_svg;
use doodles::run_census;

fn catalogs() -> Vec<Catalog> {
    (6..=12).map(|n| run_census(n, 2).unwrap().catalog).collect()
}

#[test]
fn names_follow_key_order() {
    for c in catalogs() {
        let mut last: Option<(Name, String)> = None;
        for e in &c.entries {
            let name = e.name().unwrap();
            assert_eq!(name.super_prime, e.super_prime);
            assert_eq!((name.n, name.m), (e.n, e.m));
            if let Some((prev, key)) = &last {
                let same_group = (prev.n, prev.m, prev.super_prime) == (name.n, name.m, name.super_prime);
                if same_group {
                    assert_eq!(name.index, prev.index + 1);
                    assert!(*key < e.key);
                } else {
                    assert_eq!(name.index, 1);
                    assert!((prev.m, prev.super_prime) < (name.m, name.super_prime));
                }
            } else {
                assert_eq!(name.index, 1);
            }
            last = Some((name, e.key.clone()));
        }
    }
}

#[test]
fn eleven_and_twelve_crossing_names() {
    let c = catalogs();
    let names = |i: usize| c[i].entries.iter().map(|e| e.name.clone()).collect::<Vec<_>>();
    assert_eq!(names(5), ["P11^1_1", "P11^3_1", "S11^3_1"]);
    let four: Vec<String> = names(6).into_iter().filter(|s| s.contains("^4_")).collect();
    assert_eq!(four, ["S12^4_1", "S12^4_2"]);
}

#[test]
fn jsonl_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for c in catalogs() {
        let path = dir.path().join("x.jsonl");
        c.write_jsonl(&path).unwrap();
        assert_eq!(Catalog::read_jsonl(&path).unwrap(), c);
    }
}

#[test]
fn duplicate_keys_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dup.jsonl");
    let mut c = run_census(6, 1).unwrap().catalog;
    c.entries.push(c.entries[0].clone());
    c.write_jsonl(&path).unwrap();
    assert!(Catalog::read_jsonl(&path).is_err());
}

#[test]
fn every_entry_renders() {
    for c in catalogs() {
        for e in &c.entries {
            let d = e.diagram().unwrap();
            let svg = render_svg(&d).unwrap();
            assert_eq!(svg.matches(r#"<g class="component""#).count(), e.m, "{}", e.name);
            assert_eq!(svg.matches(r#"class="crossing""#).count(), e.n, "{}", e.name);
            assert_eq!(svg, render_svg(&d).unwrap());
        }
    }
}

fn proper_cross(a: (f64, f64), b: (f64, f64), c: (f64, f64), d: (f64, f64)) -> bool {
    let orient = |p: (f64, f64), q: (f64, f64), r: (f64, f64)| (q.0 - p.0) * (r.1 - p.1) - (q.1 - p.1) * (r.0 - p.0);
    let (o1, o2) = (orient(a, b, c), orient(a, b, d));
    let (o3, o4) = (orient(c, d, a), orient(c, d, b));
    o1 * o2 < -1e-9 && o3 * o4 < -1e-9
}

#[test]
fn layouts_are_straight_line_plane() {
    use doodle_core::diagram::ccw;
    for c in catalogs() {
        for e in &c.entries {
            let d = e.diagram().unwrap();
            let pos = doodles::render::layout(&d).unwrap();
            let mut edges = Vec::new();
            for x in 0..4 * d.n() {
                edges.push((x, ccw(x)));
                if x < d.partner(x) {
                    edges.push((x, d.partner(x)));
                }
            }
            for (i, &(a, b)) in edges.iter().enumerate() {
                for &(p, q) in &edges[i + 1..] {
                    if [a, b].iter().any(|v| [p, q].contains(v)) {
                        continue;
                    }
                    assert!(!proper_cross(pos[a], pos[b], pos[p], pos[q]), "{} edges {a}-{b} {p}-{q}", e.name);
                }
            }
        }
    }
}
