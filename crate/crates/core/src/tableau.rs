//! Rectangular semistandard tableaux: a reference model for `B^{m,i}`.
//!
//! A tableau of shape `(n, m, i)` has `i` rows and `m` columns with entries
//! in `1..=n+1`. Operators use the reading word taken column by column,
//! bottom to top, columns left to right. Bracketing runs over the reversed
//! word (columns right to left, each top to bottom) as a tensor product of
//! single letters: `l` is a `+`, `l+1` a `-`, adjacent `(+, -)` pairs cancel,
//! `f_l` raises the letter under the leftmost surviving `+` and `e_l` lowers
//! the one under the rightmost surviving `-`.
//!
//! Promotion removes every `n+1`, adds one to the rest, slides the holes to
//! the top-left by jeu de taquin and fills them with `1`.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::crystal::{build_graph, rooted_isomorphism, Crystal};
use crate::error::{Error, Result};
use crate::polytope::PolytopeCrystal;
use crate::shape::{enumerate_patterns, CrystalShape, Pattern};
use crate::tensor::SignatureString;
use crate::verify::{Clause, Report};
use crate::weight::Weight;

/// A rectangular tableau; JSON form `{"rows":[[1,1,2],[2,3,3]]}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// Validates rectangularity, the alphabet `1..=n+1` and semistandardness.
    pub fn new(shape: CrystalShape, rows: Vec<Vec<u32>>) -> Result<Self> {
        let t = Tableau { rows };
        t.check(shape)?;
        Ok(t)
    }

    fn check(&self, shape: CrystalShape) -> Result<()> {
        let width = shape.m() as usize;
        let top = shape.n() as u32 + 1;
        if self.rows.len() != shape.i() || self.rows.iter().any(|r| r.len() != width) {
            return Err(Error::InvalidTableau(format!(
                "expected {} rows of length {width}",
                shape.i()
            )));
        }
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &x) in row.iter().enumerate() {
                if x == 0 || x > top {
                    return Err(Error::InvalidTableau(format!(
                        "entry {x} at ({r},{c}) outside 1..={top}"
                    )));
                }
                if c > 0 && row[c - 1] > x {
                    return Err(Error::InvalidTableau(format!("row {r} decreases at {c}")));
                }
                if r > 0 && self.rows[r - 1][c] >= x {
                    return Err(Error::InvalidTableau(format!(
                        "column {c} not strict at {r}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn from_json(shape: CrystalShape, text: &str) -> Result<Self> {
        let t: Tableau = serde_json::from_str(text)?;
        t.check(shape)?;
        Ok(t)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tableau serializes")
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.rows[r][c]
    }

    fn width(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    /// Number of occurrences of each letter `1..=n+1`.
    pub fn content(&self, n: usize) -> Vec<i64> {
        let mut out = vec![0i64; n + 1];
        for &x in self.rows.iter().flatten() {
            out[x as usize - 1] += 1;
        }
        out
    }

    /// Cells of the reversed reading word, in order.
    fn bracketing_cells(&self) -> Vec<(usize, usize)> {
        (0..self.width())
            .rev()
            .flat_map(|c| (0..self.rows.len()).map(move |r| (r, c)))
            .collect()
    }

    /// Column reading word: columns left to right, each bottom to top.
    pub fn reading_word(&self) -> Vec<u32> {
        let mut cells = self.bracketing_cells();
        cells.reverse();
        cells.into_iter().map(|(r, c)| self.rows[r][c]).collect()
    }

    fn signature(&self, l: usize) -> (Vec<(usize, usize)>, SignatureString) {
        let cells = self.bracketing_cells();
        let l = l as u32;
        let counts: Vec<(i64, i64)> = cells
            .iter()
            .map(|&(r, c)| match self.rows[r][c] {
                x if x == l => (0, 1),
                x if x == l + 1 => (1, 0),
                _ => (0, 0),
            })
            .collect();
        (cells, SignatureString::reduce(&counts))
    }

    /// Rows joined by `/`: `1 1 2/2 3 3`.
    pub fn compact(&self) -> String {
        self.rows
            .iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join("/")
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau[{}]", self.compact())
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        for (k, row) in self.rows.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Row `r` filled with `r`.
pub fn highest_tableau(shape: CrystalShape) -> Tableau {
    Tableau {
        rows: (1..=shape.i() as u32)
            .map(|r| vec![r; shape.m() as usize])
            .collect(),
    }
}

/// All strictly increasing columns of height `i` over `1..=top`, lex order.
fn columns(i: usize, top: u32) -> Vec<Vec<u32>> {
    fn go(i: usize, from: u32, top: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == i {
            out.push(cur.clone());
            return;
        }
        for x in from..=top {
            cur.push(x);
            go(i, x + 1, top, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(i, 1, top, &mut Vec::new(), &mut out);
    out
}

/// Every SSYT of the `i x m` rectangle over `1..=n+1`, sorted.
pub fn enumerate_ssyt(shape: CrystalShape) -> Vec<Tableau> {
    let cols = columns(shape.i(), shape.n() as u32 + 1);
    let width = shape.m() as usize;
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::with_capacity(width);

    fn go(cols: &[Vec<u32>], width: usize, chosen: &mut Vec<usize>, out: &mut Vec<Tableau>) {
        if chosen.len() == width {
            let i = cols[0].len();
            let rows = (0..i)
                .map(|r| chosen.iter().map(|&k| cols[k][r]).collect())
                .collect();
            out.push(Tableau { rows });
            return;
        }
        for k in 0..cols.len() {
            let fits = chosen
                .last()
                .is_none_or(|&prev| cols[prev].iter().zip(&cols[k]).all(|(a, b)| a <= b));
            if fits {
                chosen.push(k);
                go(cols, width, chosen, out);
                chosen.pop();
            }
        }
    }

    if width == 0 {
        return vec![Tableau {
            rows: vec![Vec::new(); shape.i()],
        }];
    }
    go(&cols, width, &mut chosen, &mut out);
    out.sort();
    out
}

/// `f_l` by the bracketing rule, `l` in `1..=n`.
pub fn tab_f(t: &Tableau, l: usize) -> Option<Tableau> {
    let (cells, sig) = t.signature(l);
    let (r, c) = cells[sig.leftmost_plus()?];
    let mut out = t.clone();
    out.rows[r][c] += 1;
    Some(out)
}

/// `e_l` by the bracketing rule, `l` in `1..=n`.
pub fn tab_e(t: &Tableau, l: usize) -> Option<Tableau> {
    let (cells, sig) = t.signature(l);
    let (r, c) = cells[sig.rightmost_minus()?];
    let mut out = t.clone();
    out.rows[r][c] -= 1;
    Some(out)
}

/// Order in which the emptied cells are slid.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HoleOrder {
    RowMajor,
    ColumnMajor,
}

/// Promotion on tableaux over `1..=n+1`, holes slid in row-major order.
pub fn jdt_promote(t: &Tableau, n: usize) -> Tableau {
    jdt_promote_ordered(t, n, HoleOrder::RowMajor)
}

pub fn jdt_promote_ordered(t: &Tableau, n: usize, order: HoleOrder) -> Tableau {
    let top = n as u32 + 1;
    let height = t.rows.len();
    let width = t.width();
    // None marks a hole
    let mut grid: Vec<Vec<Option<u32>>> = t
        .rows
        .iter()
        .map(|row| row.iter().map(|&x| (x != top).then_some(x + 1)).collect())
        .collect();
    let mut holes: Vec<(usize, usize)> = (0..height)
        .flat_map(|r| (0..width).map(move |c| (r, c)))
        .filter(|&(r, c)| grid[r][c].is_none())
        .collect();
    if order == HoleOrder::ColumnMajor {
        holes.sort_by_key(|&(r, c)| (c, r));
    }

    // settled[r][c]: cell already holds a slid-in hole, i.e. a future 1
    let mut settled = vec![vec![false; width]; height];
    for (mut r, mut c) in holes {
        loop {
            let up = (r > 0 && !settled[r - 1][c])
                .then(|| grid[r - 1][c])
                .flatten();
            let left = (c > 0 && !settled[r][c - 1])
                .then(|| grid[r][c - 1])
                .flatten();
            match (up, left) {
                (None, None) => break,
                (Some(u), Some(lv)) if lv > u => {
                    grid[r][c] = Some(lv);
                    c -= 1;
                }
                (Some(u), _) => {
                    grid[r][c] = Some(u);
                    r -= 1;
                }
                (None, Some(lv)) => {
                    grid[r][c] = Some(lv);
                    c -= 1;
                }
            }
            grid[r][c] = None;
        }
        settled[r][c] = true;
    }
    Tableau {
        rows: grid
            .into_iter()
            .map(|row| row.into_iter().map(|x| x.unwrap_or(1)).collect())
            .collect(),
    }
}

/// Tableaux of a fixed shape with classical operators and `f_0 = pr^{-1} f_1 pr`.
#[derive(Clone, Copy, Debug)]
pub struct TableauCrystal {
    shape: CrystalShape,
}

impl TableauCrystal {
    pub fn new(shape: CrystalShape) -> Self {
        TableauCrystal { shape }
    }

    pub fn shape(&self) -> CrystalShape {
        self.shape
    }

    pub fn promote(&self, t: &Tableau) -> Tableau {
        jdt_promote(t, self.shape.n())
    }

    pub fn promote_inverse(&self, t: &Tableau) -> Tableau {
        (0..self.shape.n()).fold(t.clone(), |acc, _| self.promote(&acc))
    }

    fn check(&self, l: usize) {
        assert!(l <= self.shape.n(), "tableau crystal has no index {l}");
    }
}

impl Crystal for TableauCrystal {
    type Element = Tableau;

    fn rank(&self) -> usize {
        self.shape.n()
    }

    fn weight(&self, t: &Tableau) -> Weight {
        Weight::from_content(t.content(self.shape.n()))
    }

    fn phi(&self, t: &Tableau, l: usize) -> i64 {
        self.check(l);
        if l == 0 {
            return self.phi(&self.promote(t), 1);
        }
        t.signature(l).1.plus_count() as i64
    }

    fn eps(&self, t: &Tableau, l: usize) -> i64 {
        self.check(l);
        if l == 0 {
            return self.eps(&self.promote(t), 1);
        }
        t.signature(l).1.minus_count() as i64
    }

    fn f(&self, t: &Tableau, l: usize) -> Option<Tableau> {
        self.check(l);
        if l == 0 {
            return tab_f(&self.promote(t), 1).map(|x| self.promote_inverse(&x));
        }
        tab_f(t, l)
    }

    fn e(&self, t: &Tableau, l: usize) -> Option<Tableau> {
        self.check(l);
        if l == 0 {
            return tab_e(&self.promote(t), 1).map(|x| self.promote_inverse(&x));
        }
        tab_e(t, l)
    }

    fn contains(&self, t: &Tableau) -> bool {
        t.check(self.shape).is_ok()
    }
}

/// Weak promotion check of [`jdt_promote`] on every tableau of `shape`.
pub fn verify_tableau_promotion(shape: CrystalShape) -> Report {
    let mut report = Report::default();
    let n = shape.n();
    let all = enumerate_ssyt(shape);
    let model = TableauCrystal::new(shape);
    let mut images = HashSet::new();
    for (k, t) in all.iter().enumerate() {
        let image = model.promote(t);
        if !model.contains(&image) {
            report.push(Clause::Closure, Some(k), &[], format!("{t:?} -> {image:?}"));
            continue;
        }
        if model.weight(&image) != model.weight(t).rotate_content() {
            report.push(
                Clause::ContentShift,
                Some(k),
                &[],
                format!("{t:?} -> {image:?}"),
            );
        }
        if !images.insert(image.clone()) {
            report.push(
                Clause::Bijective,
                Some(k),
                &[],
                format!("{image:?} hit twice"),
            );
        }
        for j in 1..n {
            let lf = tab_f(t, j).map(|x| model.promote(&x));
            let rf = tab_f(&image, j + 1);
            let le = tab_e(t, j).map(|x| model.promote(&x));
            let re = tab_e(&image, j + 1);
            if lf != rf || le != re {
                report.push(
                    Clause::Intertwining,
                    Some(k),
                    &[j, j + 1],
                    format!("{t:?}: f {lf:?} vs {rf:?}, e {le:?} vs {re:?}"),
                );
            }
        }
        let back = (0..=n).fold(t.clone(), |acc, _| model.promote(&acc));
        if &back != t {
            report.push(
                Clause::Order,
                Some(k),
                &[],
                format!("{t:?}: pr^(n+1) = {back:?}"),
            );
        }
    }
    report
}

/// Outcome of [`compare_models`].
#[derive(Clone, Debug)]
pub struct Comparison {
    /// Size of the certified vertex bijection.
    pub vertices: usize,
    /// Number of `f_0` edges found to agree.
    pub zero_edges: usize,
    pub report: Report,
}

impl Comparison {
    pub fn certified(&self) -> bool {
        self.report.is_empty()
    }
}

/// Matches the polytope crystal against the tableau crystal.
///
/// Roots are the all-zero pattern and the row-`r`-filled-with-`r` tableau.
/// The classical isomorphism is grown along `f_l`, `e_l` for `l = 1..=n`,
/// checked to be a bijection between all patterns and all tableaux that
/// preserves weights, and then checked against `f_0` and `e_0` on both
/// sides.
pub fn compare_models(shape: CrystalShape) -> Comparison {
    let mut report = Report::default();
    let poly = PolytopeCrystal::new(shape);
    let tab = TableauCrystal::new(shape);
    let classical: Vec<usize> = (1..=shape.n()).collect();
    let map = match rooted_isomorphism(
        &poly,
        &Pattern::zero(shape),
        &tab,
        &highest_tableau(shape),
        &classical,
    ) {
        Ok(map) => map,
        Err(witness) => {
            report.push(Clause::Isomorphism, None, &classical, witness);
            return Comparison {
                vertices: 0,
                zero_edges: 0,
                report,
            };
        }
    };

    let patterns = enumerate_patterns(shape);
    let tableaux = enumerate_ssyt(shape);
    if map.len() != patterns.len() || map.len() != tableaux.len() {
        report.push(
            Clause::Bijective,
            None,
            &[],
            format!(
                "map covers {} vertices; {} patterns, {} tableaux",
                map.len(),
                patterns.len(),
                tableaux.len()
            ),
        );
    }

    let mut zero_edges = 0;
    for (k, p) in patterns.iter().enumerate() {
        let Some(t) = map.get(p) else {
            report.push(Clause::Bijective, Some(k), &[], format!("{p:?} unmatched"));
            continue;
        };
        if poly.weight(p) != tab.weight(t) {
            report.push(
                Clause::Isomorphism,
                Some(k),
                &[],
                format!("{p:?} and {t:?} differ in weight"),
            );
        }
        let pf = poly.f(p, 0);
        let tf = tab.f(t, 0);
        if pf.as_ref().map(|x| map.get(x)) != tf.as_ref().map(Some) {
            report.push(
                Clause::Intertwining,
                Some(k),
                &[0],
                format!("f_0: {p:?} -> {pf:?}, {t:?} -> {tf:?}"),
            );
        } else if pf.is_some() {
            zero_edges += 1;
        }
        let pe = poly.e(p, 0);
        let te = tab.e(t, 0);
        if pe.as_ref().map(|x| map.get(x)) != te.as_ref().map(Some) {
            report.push(
                Clause::Intertwining,
                Some(k),
                &[0],
                format!("e_0: {p:?} -> {pe:?}, {t:?} -> {te:?}"),
            );
        }
    }
    Comparison {
        vertices: map.len(),
        zero_edges,
        report,
    }
}

/// Classical graph of the tableau model grown from the highest weight tableau.
pub fn tableau_graph(shape: CrystalShape, affine: bool) -> crate::crystal::CrystalGraph<Tableau> {
    let labels: Vec<usize> = (usize::from(!affine)..=shape.n()).collect();
    build_graph(
        &TableauCrystal::new(shape),
        &labels,
        &[highest_tableau(shape)],
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(n: usize, m: u32, i: usize) -> CrystalShape {
        CrystalShape::new(n, m, i).unwrap()
    }

    fn tab(s: CrystalShape, rows: Vec<Vec<u32>>) -> Tableau {
        Tableau::new(s, rows).unwrap()
    }

    #[test]
    fn enumeration_examples() {
        let s = shape(2, 1, 2);
        let all = enumerate_ssyt(s);
        let expected = vec![
            tab(s, vec![vec![1], vec![2]]),
            tab(s, vec![vec![1], vec![3]]),
            tab(s, vec![vec![2], vec![3]]),
        ];
        assert_eq!(all, expected);
        assert_eq!(enumerate_ssyt(shape(2, 3, 2)).len(), 10);
        let rows: Vec<Vec<Vec<u32>>> = enumerate_ssyt(shape(1, 2, 1))
            .into_iter()
            .map(|t| t.rows().to_vec())
            .collect();
        assert_eq!(
            rows,
            vec![vec![vec![1, 1]], vec![vec![1, 2]], vec![vec![2, 2]]]
        );
        assert_eq!(enumerate_ssyt(shape(3, 0, 2)).len(), 1);
    }

    #[test]
    fn validation() {
        let s = shape(2, 2, 2);
        assert!(Tableau::new(s, vec![vec![1, 1], vec![1, 2]]).is_err());
        assert!(Tableau::new(s, vec![vec![2, 1], vec![3, 3]]).is_err());
        assert!(Tableau::new(s, vec![vec![1, 4], vec![2, 3]]).is_err());
        assert!(Tableau::new(s, vec![vec![1, 1]]).is_err());
    }

    #[test]
    fn operator_examples() {
        let s = shape(2, 1, 2);
        let t = tab(s, vec![vec![1], vec![2]]);
        assert_eq!(tab_f(&t, 2), Some(tab(s, vec![vec![1], vec![3]])));
        assert_eq!(tab_f(&t, 1), None);
        let hw = highest_tableau(shape(3, 2, 2));
        for l in 1..=3 {
            assert_eq!(tab_e(&hw, l), None);
        }
        let row = tab(shape(1, 2, 1), vec![vec![1, 1]]);
        assert_eq!(tab_f(&row, 1).unwrap().rows(), &[vec![1, 2]]);
    }

    #[test]
    fn reading_word_order() {
        let t = tab(shape(2, 3, 2), vec![vec![1, 1, 2], vec![2, 3, 3]]);
        assert_eq!(t.reading_word(), vec![2, 1, 3, 1, 3, 2]);
    }

    #[test]
    fn promotion_examples() {
        let s = shape(2, 1, 2);
        assert_eq!(
            jdt_promote(&tab(s, vec![vec![2], vec![3]]), 2),
            tab(s, vec![vec![1], vec![3]])
        );
        assert_eq!(
            jdt_promote(&tab(s, vec![vec![1], vec![2]]), 2),
            tab(s, vec![vec![2], vec![3]])
        );
    }

    #[test]
    fn hole_order_irrelevant() {
        for (n, m, i) in [(2, 3, 2), (3, 2, 2), (3, 2, 1), (4, 2, 3)] {
            let s = shape(n, m, i);
            for t in enumerate_ssyt(s) {
                assert_eq!(
                    jdt_promote_ordered(&t, n, HoleOrder::RowMajor),
                    jdt_promote_ordered(&t, n, HoleOrder::ColumnMajor)
                );
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let s = shape(2, 3, 2);
        let t = tab(s, vec![vec![1, 1, 2], vec![2, 3, 3]]);
        assert_eq!(t.to_json(), r#"{"rows":[[1,1,2],[2,3,3]]}"#);
        assert_eq!(Tableau::from_json(s, &t.to_json()).unwrap(), t);
        assert!(Tableau::from_json(s, r#"{"rows":[[3,3,3],[3,3,3]]}"#).is_err());
    }

    #[test]
    fn comparison_examples() {
        for ((n, m, i), size) in [((2, 3, 2), 10), ((3, 1, 2), 6), ((2, 2, 1), 6)] {
            let c = compare_models(shape(n, m, i));
            assert!(c.certified(), "{}", c.report);
            assert_eq!(c.vertices, size);
        }
    }
}
