#![allow(dead_code)]

use std::collections::BTreeMap;

use proptest::prelude::*;
use sfpl::semantics::{FiniteFrame, Model, WorldSet};
use sfpl::syntax::Formula;

pub fn formula(letters: u32, depth: u32) -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        1 => Just(Formula::Bot),
        1 => Just(Formula::top()),
        6 => (0..letters).prop_map(Formula::letter),
    ];
    leaf.prop_recursive(depth, 64, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::imp(a, b)),
        ]
    })
}

pub fn frame(max_worlds: usize) -> impl Strategy<Value = FiniteFrame> {
    (1..=max_worlds, any::<u64>()).prop_map(|(n, code)| {
        let mask = if n * n == 64 {
            u64::MAX
        } else {
            (1 << (n * n)) - 1
        };
        FiniteFrame::from_code(n, code & mask)
    })
}

/// A frame together with two arbitrary subsets of its worlds.
pub fn frame_and_sets(
    max_worlds: usize,
) -> impl Strategy<Value = (FiniteFrame, WorldSet, WorldSet)> {
    (frame(max_worlds), any::<u64>(), any::<u64>()).prop_map(|(f, x, y)| {
        let n = f.size();
        (f, WorldSet::from_bits(n, x), WorldSet::from_bits(n, y))
    })
}

/// A box-pre model: each of `letters` letters gets a fixpoint picked by an
/// arbitrary index.
pub fn box_pre_model(max_worlds: usize, letters: u32) -> impl Strategy<Value = Model> {
    (
        frame(max_worlds),
        prop::collection::vec(any::<usize>(), letters as usize),
    )
        .prop_map(|(f, picks)| {
            let fixpoints = f.enumerate_fixpoints().expect("small frame");
            let valuation: BTreeMap<u32, WorldSet> = picks
                .iter()
                .enumerate()
                .map(|(l, k)| (l as u32, fixpoints[k % fixpoints.len()]))
                .collect();
            Model::new(f, valuation).expect("fixpoint valuation")
        })
}
