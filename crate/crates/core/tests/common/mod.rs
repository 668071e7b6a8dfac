#![allow(dead_code)]

use frieze_core::QuiddityDescriptor;
use proptest::prelude::*;

/// Descriptors with constant 2 or 3 tails and a short random core, kept
/// only if every entry up to band 64 is positive.
pub fn valid_descriptor() -> impl Strategy<Value = QuiddityDescriptor> {
    (
        prop_oneof![Just(2i64), Just(3i64)],
        prop_oneof![Just(2i64), Just(3i64)],
        prop::collection::vec(1i64..=6, 0..=8),
        -4i64..=4,
    )
        .prop_map(|(l, r, core, start)| QuiddityDescriptor::new(vec![l], core, vec![r], start).unwrap())
        .prop_filter("positive to depth 64", |q| q.validate(64).unwrap().is_valid())
}

/// Small hand-checked valid friezes.
pub fn named() -> Vec<(&'static str, QuiddityDescriptor)> {
    vec![
        ("constant-2", QuiddityDescriptor::constant(2).unwrap()),
        ("bumped", QuiddityDescriptor::new(vec![2], vec![3], vec![2], -1).unwrap()),
        ("enough-ones", QuiddityDescriptor::new(vec![5, 1], vec![2, 3], vec![1, 5], 0).unwrap()),
        ("example", QuiddityDescriptor::new(vec![3], vec![4, 2, 1, 6], vec![2], -3).unwrap()),
        ("constant-3", QuiddityDescriptor::constant(3).unwrap()),
        ("zigzag", QuiddityDescriptor::new(vec![3], vec![1, 2], vec![3], 0).unwrap()),
    ]
}
