use std::collections::BTreeSet;

use frieze_core::polygon::{all_triangulations, triangulation_from_picks};
use frieze_core::PolygonTriangulation;
use proptest::prelude::*;

/// Triangles as the 3-cliques of the edge graph (sides plus chords).
fn faces_by_cliques(t: &PolygonTriangulation) -> Vec<[u32; 3]> {
    let n = t.n();
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                if t.is_edge(a, b) && t.is_edge(b, c) && t.is_edge(a, c) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

fn walks(n: u32, a: u32, b: u32) -> (Vec<u32>, Vec<u32>) {
    let mut fwd = vec![a];
    let mut v = a;
    while v != b {
        v = v % n + 1;
        fwd.push(v);
    }
    let mut back = vec![a];
    let mut v = a;
    while v != b {
        v = if v == 1 { n } else { v - 1 };
        back.push(v);
    }
    (fwd, back)
}

fn check_cc_equals_bci(t: &PolygonTriangulation) {
    let n = t.n();
    for a in 1..=n {
        let labels = t.cc_labels(a).unwrap();
        for b in 1..=n {
            let (fwd, back) = walks(n, a, b);
            let cc = labels[&b];
            assert_eq!(t.bci_count(&fwd).unwrap(), cc, "{t:?} {a}->{b} forward");
            assert_eq!(t.bci_count(&back).unwrap(), cc, "{t:?} {a}->{b} backward");
        }
    }
}

fn check_structure(t: &PolygonTriangulation) {
    let n = t.n();
    let faces = t.faces();
    assert_eq!(faces, faces_by_cliques(t));
    assert_eq!(faces.len(), n as usize - 2);
    let q = t.quiddity();
    assert_eq!(q.iter().sum::<u32>(), 3 * n - 6);
    let rebuilt = PolygonTriangulation::from_quiddity(&q).unwrap();
    assert_eq!(rebuilt.quiddity(), q);
    let p = t.frieze_pattern().unwrap();
    assert!(p.satisfies_rules());
    if n >= 4 {
        let ears: BTreeSet<u32> = t.ears().into_iter().collect();
        let apart = ears.iter().any(|&x| ears.iter().any(|&y| y != x && y != x % n + 1 && x != y % n + 1));
        assert!(apart, "{t:?} needs two non-consecutive ears");
    }
}

#[test]
fn exhaustive_small_polygons() {
    for n in 3..=8 {
        for t in all_triangulations(n) {
            check_structure(&t);
            check_cc_equals_bci(&t);
        }
    }
}

#[test]
fn bci_conventions() {
    let t = PolygonTriangulation::new(5, [(1, 3), (1, 4)]).unwrap();
    assert_eq!(t.bci_count(&[2]).unwrap(), 0);
    assert_eq!(t.bci_count(&[2, 3]).unwrap(), 1);
    assert_eq!(t.bci_count(&[5, 1]).unwrap(), 1);
}

#[test]
fn heptagon_window() {
    // rows (-1)..(8), columns (-1)..(9); None marks cells outside the band
    let expected: [[Option<u64>; 11]; 10] = {
        const X: Option<u64> = None;
        let s = |v: u64| Some(v);
        [
            [X, s(1), s(4), s(3), s(2), s(3), s(1), X, X, X, X],
            [X, X, s(1), s(1), s(1), s(2), s(1), s(1), X, X, X],
            [X, X, X, s(1), s(2), s(5), s(3), s(4), s(1), X, X],
            [X, X, X, X, s(1), s(3), s(2), s(3), s(1), s(1), X],
            [X, X, X, X, X, s(1), s(1), s(2), s(1), s(2), s(1)],
            [X, X, X, X, X, X, s(1), s(3), s(2), s(5), s(3)],
            [X, X, X, X, X, X, X, s(1), s(1), s(3), s(2)],
            [X, X, X, X, X, X, X, X, s(1), s(4), s(3)],
            [X, X, X, X, X, X, X, X, X, s(1), s(1)],
            [X, X, X, X, X, X, X, X, X, X, s(1)],
        ]
    };
    let t = PolygonTriangulation::from_quiddity(&[1, 2, 3, 1, 3, 1, 4]).unwrap();
    let p = t.frieze_pattern().unwrap();
    for (r, row) in expected.iter().enumerate() {
        for (c, &want) in row.iter().enumerate() {
            let (i, j) = (r as i64 - 1, c as i64 - 1);
            assert_eq!(p.get(i, j), want, "f({i}, {j})");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn random_larger_polygons(n in 9u32..=12, picks in prop::collection::vec(any::<usize>(), 16)) {
        let mut it = picks.into_iter().cycle();
        let t = triangulation_from_picks(n, |k| it.next().unwrap() % k).unwrap();
        check_structure(&t);
        check_cc_equals_bci(&t);
    }
}
