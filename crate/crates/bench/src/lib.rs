//! Shapes used by the benchmarks.

use krcrystal::CrystalShape;

/// Every shape with `n <= max_n`, `m <= max_m`.
pub fn shapes(max_n: usize, max_m: u32) -> Vec<CrystalShape> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for m in 0..=max_m {
            for i in 1..=n {
                out.push(CrystalShape::new(n, m, i).expect("valid shape"));
            }
        }
    }
    out
}
