mod common;

use frieze_core::counting::{bci_entry, cc_entry};
use frieze_core::synthesis::StepAVerdict;
use frieze_core::{psi, BigInt, FriezeView, M2Class, QuiddityDescriptor, SynthesisOptions, SynthesisState};
use proptest::prelude::*;

const WINDOW: (i64, i64) = (-6, 6);

/// Everything that should hold for the triangulation built from `q`.
fn check_bijection(q: &QuiddityDescriptor, window: (i64, i64)) {
    let (lo, hi) = window;
    let out = psi(q, &SynthesisOptions::new(window)).unwrap();
    let t = &out.triangulation;
    assert_eq!(t.quiddity_of().unwrap(), q.window(lo, hi), "round trip");
    t.check().unwrap();
    assert!(t.is_admissible_window());
    assert!(t.special_upper_points().is_empty());

    let f = FriezeView::new(q.clone());
    let arcs: Vec<(i64, i64)> = t.peripheral_arcs().collect();
    for i in lo..=hi {
        for j in i + 2..=hi {
            assert_eq!(f.entry(i, j) == BigInt::from(1), arcs.contains(&(i, j)), "t({i}, {j}) = 1 vs arc");
        }
        let bridged = t.bridging_arcs().any(|(_, p)| p == i);
        let covered = arcs.iter().any(|&(a, b)| a < i && i < b);
        assert_ne!(bridged, covered, "lower point {i}");
    }
    for i in lo..=hi {
        for j in i..=(i + 8).min(hi) {
            let want = f.entry(i, j);
            assert_eq!(BigInt::from(cc_entry(t, i, j).unwrap()), want, "cc({i}, {j})");
            assert_eq!(BigInt::from(bci_entry(t, i, j).unwrap()), want, "bci({i}, {j})");
        }
    }
}

fn check_dehn(q: &QuiddityDescriptor, window: (i64, i64)) {
    let out = psi(q, &SynthesisOptions::new(window)).unwrap();
    let t = &out.triangulation;
    if t.m2_class() != M2Class::BiInfinite {
        return;
    }
    for n in -3..=3 {
        let d = t.dehn_twist(n).unwrap();
        assert_eq!(d.quiddity_of().unwrap(), t.quiddity_of().unwrap());
        assert_eq!(t.dehn_equivalent(&d).unwrap(), Some(n));
    }
    let (lo, hi) = t.region();
    let anchors: Vec<i64> = (lo..=hi).filter(|&p| out.state.residual().value_at(p) > 2).collect();
    let first = anchors[0];
    for &other in &anchors[1..] {
        let mut opts = SynthesisOptions::new(window);
        opts.anchor = Some(first);
        let a = psi(q, &opts).unwrap().triangulation;
        opts.anchor = Some(other);
        let b = psi(q, &opts).unwrap().triangulation;
        let predicted = out.state.dehn_offset(first, other);
        assert_eq!(a.dehn_equivalent(&b).unwrap(), Some(predicted), "anchors {first}, {other}");
    }
}

#[test]
fn named_examples() {
    for (_, q) in common::named() {
        check_bijection(&q, WINDOW);
        check_dehn(&q, WINDOW);
    }
}

#[test]
fn example_trace() {
    let q = QuiddityDescriptor::new(vec![3], vec![4, 2, 1, 6], vec![2], -3).unwrap();
    let out = psi(&q, &SynthesisOptions::new((-8, 8))).unwrap();
    assert_eq!(out.step_a, StepAVerdict::Terminated { passes: 2 });
    let trace = out.state.trace();
    assert_eq!(trace[0].arcs, vec![(-2, 0)]);
    assert_eq!(trace[1].arcs, vec![(-3, 0)]);
    let s1 = SynthesisState::new(&q, (-24, 24)).step_a_pass().unwrap();
    assert_eq!(s1.residual().window(-5, 2), vec![3, 3, 4, 1, 0, 5, 2, 2]);
    assert_eq!(out.state.residual().window(-5, 2), vec![3, 3, 3, 0, 0, 4, 2, 2]);
    let t = &out.triangulation;
    assert_eq!(t.m2_class(), M2Class::NatLeft);
    assert_eq!(t.quiddity_on(-8, 8).unwrap(), q.window(-8, 8));

    // three upper points on (0,0), the rightmost one fans out to the right,
    // the leftmost one also reaches (-3,0), which gains one more
    let at = |p: i64| t.bridging_arcs().filter(|&(_, x)| x == p).map(|(u, _)| u).collect::<Vec<_>>();
    assert_eq!(at(0), vec![-2, -1, 0]);
    for p in 1..=8 {
        assert_eq!(at(p), vec![0]);
    }
    assert_eq!(at(-3), vec![-3, -2]);
    assert!(at(-1).is_empty() && at(-2).is_empty());
}

#[test]
fn empty_class_has_ones() {
    let q = QuiddityDescriptor::new(vec![5, 1], vec![2, 3], vec![1, 5], 0).unwrap();
    let t = psi(&q, &SynthesisOptions::new(WINDOW)).unwrap().triangulation;
    assert_eq!(t.m2_class(), M2Class::Empty);
    assert!(q.window(-6, 6).contains(&1));
    assert_eq!(t.bridging_arcs().count(), 0);
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn random_descriptors(q in common::valid_descriptor()) {
        check_bijection(&q, WINDOW);
        check_dehn(&q, WINDOW);
        let t = psi(&q, &SynthesisOptions::new(WINDOW)).unwrap().triangulation;
        if t.m2_class() == M2Class::Empty {
            prop_assert!(q.window(WINDOW.0, WINDOW.1).contains(&1));
        }
    }

    #[test]
    fn shifting_the_quiddity_shifts_the_triangulation(q in common::valid_descriptor(), s in -3i64..=3) {
        let a = psi(&q, &SynthesisOptions::new(WINDOW)).unwrap().triangulation;
        let b = psi(&q.shift(s), &SynthesisOptions::new((WINDOW.0 + s, WINDOW.1 + s))).unwrap().triangulation;
        prop_assert_eq!(a.m2_class(), b.m2_class());
        prop_assert_eq!(a.quiddity_of().unwrap(), b.quiddity_of().unwrap());
    }
}
