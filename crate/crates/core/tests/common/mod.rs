#![allow(dead_code)]

use krcrystal::{enumerate_patterns, CrystalShape, Pattern};
use proptest::prelude::*;

pub fn shape(n: usize, m: u32, i: usize) -> CrystalShape {
    CrystalShape::new(n, m, i).unwrap()
}

pub fn pattern(n: usize, m: u32, i: usize, rows: Vec<Vec<u32>>) -> Pattern {
    Pattern::new(shape(n, m, i), rows).unwrap()
}

/// Every shape with `n <= max_n`, `m <= max_m`.
pub fn shapes(max_n: usize, max_m: u32) -> Vec<CrystalShape> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for m in 0..=max_m {
            for i in 1..=n {
                out.push(shape(n, m, i));
            }
        }
    }
    out
}

pub fn arb_shape(max_n: usize, max_m: u32) -> impl Strategy<Value = CrystalShape> {
    (1..=max_n, 0..=max_m)
        .prop_flat_map(|(n, m)| (Just(n), Just(m), 1..=n))
        .prop_map(|(n, m, i)| shape(n, m, i))
}

/// A uniformly chosen member of a random shape.
pub fn arb_member(max_n: usize, max_m: u32) -> impl Strategy<Value = Pattern> {
    arb_shape(max_n, max_m)
        .prop_map(enumerate_patterns)
        .prop_flat_map(|all| {
            let len = all.len();
            (Just(all), 0..len)
        })
        .prop_map(|(all, k)| all[k].clone())
}
