//! Parameters `(n, m, i)`, the pattern grid and the lattice points of `B^{m,i}`.
//!
//! A pattern of shape `(n, m, i)` is a grid with `i` columns (`p = 1..=i`)
//! and `n - i + 1` rows (`q = i..=n`). The public API uses these 1-based
//! indices through [`Pattern::get`]; storage is row-major and 0-based, with
//! cell `(p, q)` at offset `(q - i) * i + (p - 1)`. That mapping lives only
//! in [`Pattern::offset`].
//!
//! A grid belongs to `B^{m,i}` when every entry is non-negative and every
//! monotone staircase from the top-left cell `(1, i)` to the bottom-right
//! cell `(i, n)` (moving one column right or one row down per step) has
//! entry sum at most `m`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weight::Weight;

/// The triple `(n, m, i)`: rank of `A_n`, level `m`, classical node `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CrystalShape {
    n: usize,
    i: usize,
    m: u32,
}

impl CrystalShape {
    pub fn new(n: usize, m: u32, i: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::InvalidShape { n, m, i });
        }
        Ok(CrystalShape { n, i, m })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn i(&self) -> usize {
        self.i
    }

    /// Number of columns, `i`.
    pub fn width(&self) -> usize {
        self.i
    }

    /// Number of rows, `n - i + 1`.
    pub fn height(&self) -> usize {
        self.n - self.i + 1
    }

    /// Same `n` and `i`, different level.
    pub fn with_level(&self, m: u32) -> Self {
        CrystalShape { m, ..*self }
    }

    fn check_dims<T>(&self, rows: &[Vec<T>]) -> Result<()> {
        if rows.len() != self.height() || rows.iter().any(|r| r.len() != self.width()) {
            return Err(Error::Dimension {
                expected_rows: self.height(),
                expected_cols: self.width(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for CrystalShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B^{{{},{}}} (n={})", self.m, self.i, self.n)
    }
}

/// An element of `B^{m,i}`.
///
/// Values of this type always satisfy the membership conditions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PatternJson", into = "PatternJson")]
pub struct Pattern {
    shape: CrystalShape,
    entries: Vec<u32>,
}

impl Pattern {
    /// Builds a pattern from rows `q = i..=n`, each listing columns `p = 1..=i`.
    pub fn new(shape: CrystalShape, rows: Vec<Vec<u32>>) -> Result<Self> {
        shape.check_dims(&rows)?;
        let pattern = Pattern {
            shape,
            entries: rows.into_iter().flatten().collect(),
        };
        if pattern.max_dyck_sum() > u64::from(shape.m) {
            return Err(Error::NotMember {
                n: shape.n,
                m: shape.m,
                i: shape.i,
            });
        }
        Ok(pattern)
    }

    /// The all-zero pattern, the classical highest weight element.
    pub fn zero(shape: CrystalShape) -> Self {
        Pattern {
            shape,
            entries: vec![0; shape.width() * shape.height()],
        }
    }

    /// Accepts a grid of signed entries, as read from external input.
    pub fn from_signed_rows(shape: CrystalShape, rows: &[Vec<i64>]) -> Result<Self> {
        if !is_member(rows, shape)? {
            return Err(Error::NotMember {
                n: shape.n,
                m: shape.m,
                i: shape.i,
            });
        }
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| v as u32).collect())
            .collect();
        Pattern::new(shape, rows)
    }

    pub(crate) fn from_entries_unchecked(shape: CrystalShape, entries: Vec<u32>) -> Self {
        debug_assert_eq!(entries.len(), shape.width() * shape.height());
        Pattern { shape, entries }
    }

    pub fn shape(&self) -> CrystalShape {
        self.shape
    }

    #[inline]
    fn offset(&self, p: usize, q: usize) -> usize {
        debug_assert!(p >= 1 && p <= self.shape.i, "column {p} out of range");
        debug_assert!(
            q >= self.shape.i && q <= self.shape.n,
            "row {q} out of range"
        );
        (q - self.shape.i) * self.shape.i + (p - 1)
    }

    /// Entry `a_{p,q}`: column `p` in `1..=i`, row `q` in `i..=n`.
    #[inline]
    pub fn get(&self, p: usize, q: usize) -> u32 {
        self.entries[self.offset(p, q)]
    }

    /// Rows `q = i..=n`.
    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.entries
            .chunks(self.shape.width())
            .map(<[u32]>::to_vec)
            .collect()
    }

    /// Column `p` read top to bottom (rows `i..=n`).
    pub fn column(&self, p: usize) -> Vec<u32> {
        (self.shape.i..=self.shape.n)
            .map(|q| self.get(p, q))
            .collect()
    }

    /// Returns a copy with `a_{p,q}` replaced by `value`, if the result is
    /// still a member.
    pub fn with_entry(&self, p: usize, q: usize, value: u32) -> Result<Self> {
        let mut rows = self.rows();
        rows[q - self.shape.i][p - 1] = value;
        Pattern::new(self.shape, rows)
    }

    /// Copy re-interpreted at another level. Fails if not a member there.
    pub fn at_level(&self, m: u32) -> Result<Self> {
        Pattern::new(self.shape.with_level(m), self.rows())
    }

    pub fn max_dyck_sum(&self) -> u64 {
        let rows: Vec<Vec<i64>> = self
            .rows()
            .into_iter()
            .map(|r| r.into_iter().map(i64::from).collect())
            .collect();
        max_dyck_sum(&rows) as u64
    }

    /// Weight in content coordinates `(r_1, ..., r_{n+1})`.
    ///
    /// Starts from `m` on the first `i` coordinates and subtracts
    /// `a_{p,q} (e_p - e_{q+1})` for every cell.
    pub fn content(&self) -> Vec<i64> {
        let CrystalShape { n, i, m } = self.shape;
        let mut r = vec![0i64; n + 1];
        for slot in r.iter_mut().take(i) {
            *slot = i64::from(m);
        }
        for q in i..=n {
            for p in 1..=i {
                let a = i64::from(self.get(p, q));
                r[p - 1] -= a;
                r[q] += a;
            }
        }
        r
    }

    pub fn weight(&self) -> Weight {
        Weight::from_content(self.content())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("pattern serialization cannot fail")
    }

    /// Parses the interchange form; shape and membership errors keep their kind.
    pub fn from_json(text: &str) -> Result<Self> {
        let json: PatternJson = serde_json::from_str(text)?;
        Pattern::try_from(json)
    }

    /// Rows joined by `/`, entries separated by spaces: `1 0/2 1/0 1`.
    pub fn compact(&self) -> String {
        self.rows()
            .iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join("/")
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pattern[{}; {}]", self.shape, self.compact())
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .entries
            .iter()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        for (k, row) in self.rows().iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Interchange form: `{"n":4,"m":5,"i":2,"rows":[[1,0],[2,1],[0,1]]}`.
#[derive(Serialize, Deserialize)]
struct PatternJson {
    n: usize,
    m: u32,
    i: usize,
    rows: Vec<Vec<i64>>,
}

impl TryFrom<PatternJson> for Pattern {
    type Error = Error;

    fn try_from(json: PatternJson) -> Result<Self> {
        let shape = CrystalShape::new(json.n, json.m, json.i)?;
        Pattern::from_signed_rows(shape, &json.rows)
    }
}

impl From<Pattern> for PatternJson {
    fn from(p: Pattern) -> Self {
        PatternJson {
            n: p.shape.n,
            m: p.shape.m,
            i: p.shape.i,
            rows: p
                .rows()
                .into_iter()
                .map(|r| r.into_iter().map(i64::from).collect())
                .collect(),
        }
    }
}

/// Maximum entry sum over all staircase paths of a rectangular grid.
///
/// Dynamic programming over `M(p,q) = a_{p,q} + max(M(p-1,q), M(p,q-1))`.
/// Entries may be negative; only existing predecessors are considered.
pub fn max_dyck_sum(rows: &[Vec<i64>]) -> i64 {
    let height = rows.len();
    let width = rows.first().map_or(0, Vec::len);
    if height == 0 || width == 0 {
        return 0;
    }
    let mut best = vec![0i64; width];
    for (r, row) in rows.iter().enumerate() {
        for c in 0..width {
            let pred = match (r > 0, c > 0) {
                (false, false) => 0,
                (true, false) => best[c],
                (false, true) => best[c - 1],
                (true, true) => best[c].max(best[c - 1]),
            };
            best[c] = pred.checked_add(row[c]).expect("path sum overflows i64");
        }
    }
    best[width - 1]
}

/// Membership test for `B^{m,i}` on a raw grid.
pub fn is_member(rows: &[Vec<i64>], shape: CrystalShape) -> Result<bool> {
    shape.check_dims(rows)?;
    if rows
        .iter()
        .flatten()
        .any(|&v| v < 0 || v > i64::from(u32::MAX))
    {
        return Ok(false);
    }
    Ok(max_dyck_sum(rows) <= i64::from(shape.m))
}

/// A staircase path from `(1, i)` to `(i, n)` in 1-based indices `(p, q)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    steps: Vec<(usize, usize)>,
}

impl DyckPath {
    pub fn steps(&self) -> &[(usize, usize)] {
        &self.steps
    }

    /// Sum of the grid entries visited by the path.
    pub fn sum(&self, shape: CrystalShape, rows: &[Vec<i64>]) -> i64 {
        self.steps
            .iter()
            .map(|&(p, q)| rows[q - shape.i][p - 1])
            .sum()
    }
}

/// All `binomial(n-1, i-1)` paths. Column moves are tried before row moves.
pub fn dyck_paths(shape: CrystalShape) -> Vec<DyckPath> {
    fn extend(shape: CrystalShape, current: &mut Vec<(usize, usize)>, out: &mut Vec<DyckPath>) {
        let (p, q) = *current.last().expect("path is non-empty");
        if (p, q) == (shape.i, shape.n) {
            out.push(DyckPath {
                steps: current.clone(),
            });
            return;
        }
        if p < shape.i {
            current.push((p + 1, q));
            extend(shape, current, out);
            current.pop();
        }
        if q < shape.n {
            current.push((p, q + 1));
            extend(shape, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    extend(shape, &mut vec![(1, shape.i)], &mut out);
    out
}

/// Every member of `B^{m,i}` in lexicographic order of the row-major entries.
///
/// Cells are filled in row-major order while the path DP is maintained
/// incrementally; a cell's value is capped by `m` minus the best path into it.
pub fn enumerate_patterns(shape: CrystalShape) -> Vec<Pattern> {
    let width = shape.width();
    let cells = width * shape.height();
    let m = u64::from(shape.m);
    let mut out = Vec::new();
    let mut entries = vec![0u32; cells];
    let mut best = vec![0u64; cells];

    fn fill(
        k: usize,
        width: usize,
        m: u64,
        shape: CrystalShape,
        entries: &mut Vec<u32>,
        best: &mut Vec<u64>,
        out: &mut Vec<Pattern>,
    ) {
        if k == entries.len() {
            out.push(Pattern::from_entries_unchecked(shape, entries.clone()));
            return;
        }
        let (r, c) = (k / width, k % width);
        let above = (r > 0).then(|| best[k - width]);
        let left = (c > 0).then(|| best[k - 1]);
        let pred = above.into_iter().chain(left).max().unwrap_or(0);
        for v in 0..=(m - pred) {
            entries[k] = v as u32;
            best[k] = pred + v;
            fill(k + 1, width, m, shape, entries, best, out);
        }
        entries[k] = 0;
    }

    fill(0, width, m, shape, &mut entries, &mut best, &mut out);
    out
}

/// `dim V(m w_i)` for `sl_{n+1}` by the Weyl dimension formula.
pub fn weyl_dimension(shape: CrystalShape) -> u64 {
    let CrystalShape { n, i, m } = shape;
    let lambda = |a: usize| if a <= i { u64::from(m) } else { 0 };
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for a in 1..=n + 1 {
        for b in a + 1..=n + 1 {
            let diff = (b - a) as u64;
            num *= lambda(a) - lambda(b) + diff;
            den *= diff;
        }
    }
    debug_assert_eq!(&num % &den, BigUint::from(0u32));
    (num / den).to_u64().expect("dimension exceeds u64")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(n: usize, m: u32, i: usize) -> CrystalShape {
        CrystalShape::new(n, m, i).unwrap()
    }

    #[test]
    fn shape_validation() {
        assert!(CrystalShape::new(3, 1, 0).is_err());
        assert!(CrystalShape::new(3, 1, 4).is_err());
        let s = shape(4, 5, 2);
        assert_eq!((s.width(), s.height()), (2, 3));
    }

    #[test]
    fn dp_examples() {
        assert_eq!(max_dyck_sum(&[vec![1, 0], vec![2, 1], vec![0, 1]]), 5);
        assert_eq!(
            max_dyck_sum(&[vec![1, 0, 0], vec![0, 1, 3], vec![1, 0, 1]]),
            6
        );
        assert_eq!(max_dyck_sum(&vec![vec![0; 3]; 2]), 0);
    }

    #[test]
    fn dyck_path_sums_for_first_example() {
        let s = shape(4, 5, 2);
        let rows = vec![vec![1, 0], vec![2, 1], vec![0, 1]];
        let mut sums: Vec<i64> = dyck_paths(s).iter().map(|p| p.sum(s, &rows)).collect();
        sums.sort();
        assert_eq!(sums, vec![3, 4, 5]);
    }

    #[test]
    fn membership_examples() {
        let yes = vec![vec![1, 0], vec![2, 1], vec![0, 1]];
        assert!(is_member(&yes, shape(4, 5, 2)).unwrap());
        let no = vec![vec![1, 0, 0], vec![0, 1, 3], vec![1, 0, 1]];
        assert!(!is_member(&no, shape(5, 5, 3)).unwrap());
        assert!(is_member(&vec![vec![0, 0]; 3], shape(4, 0, 2)).unwrap());
        assert!(!is_member(&[vec![0, -1], vec![0, 0], vec![0, 0]], shape(4, 5, 2)).unwrap());
        assert_eq!(
            is_member(&[vec![0, 0]], shape(4, 5, 2)),
            Err(Error::Dimension {
                expected_rows: 3,
                expected_cols: 2
            })
        );
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_patterns(shape(2, 3, 2)).len(), 10);
        assert_eq!(enumerate_patterns(shape(1, 4, 1)).len(), 5);
        let got: Vec<Vec<Vec<u32>>> = enumerate_patterns(shape(2, 1, 2))
            .iter()
            .map(Pattern::rows)
            .collect();
        assert_eq!(
            got,
            vec![vec![vec![0, 0]], vec![vec![0, 1]], vec![vec![1, 0]]]
        );
    }

    #[test]
    fn enumeration_is_sorted_and_unique() {
        let all = enumerate_patterns(shape(4, 2, 2));
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn path_counts() {
        assert_eq!(dyck_paths(shape(4, 0, 2)).len(), 3);
        assert_eq!(dyck_paths(shape(5, 0, 3)).len(), 6);
        assert_eq!(dyck_paths(shape(6, 0, 1)).len(), 1);
        for path in dyck_paths(shape(5, 0, 3)) {
            assert_eq!(path.steps().len(), 5);
            assert_eq!(path.steps()[0], (1, 3));
            assert_eq!(*path.steps().last().unwrap(), (3, 5));
        }
    }

    #[test]
    fn weyl_examples() {
        assert_eq!(weyl_dimension(shape(2, 3, 2)), 10);
        assert_eq!(weyl_dimension(shape(1, 4, 1)), 5);
        assert_eq!(weyl_dimension(shape(3, 1, 2)), 6);
        assert_eq!(weyl_dimension(shape(3, 2, 2)), 20);
        assert_eq!(weyl_dimension(shape(5, 0, 3)), 1);
    }

    #[test]
    fn content_examples() {
        let s = shape(5, 3, 3);
        assert_eq!(Pattern::zero(s).content(), vec![3, 3, 3, 0, 0, 0]);
        let p = Pattern::new(s, vec![vec![1, 1, 1], vec![2, 0, 0], vec![0, 0, 0]]).unwrap();
        assert_eq!(p.content(), vec![0, 2, 2, 3, 2, 0]);
        let p = Pattern::new(shape(4, 5, 2), vec![vec![1, 0], vec![2, 1], vec![0, 1]]).unwrap();
        assert_eq!(p.content(), vec![2, 3, 1, 3, 1]);
    }

    #[test]
    fn json_round_trip_and_rejection() {
        let text = r#"{"n":4,"m":5,"i":2,"rows":[[1,0],[2,1],[0,1]]}"#;
        let p = Pattern::from_json(text).unwrap();
        assert_eq!(p.to_json(), text);
        assert_eq!(p.compact(), "1 0/2 1/0 1");
        assert!(
            Pattern::from_json(r#"{"n":5,"m":5,"i":3,"rows":[[1,0,0],[0,1,3],[1,0,1]]}"#).is_err()
        );
        assert!(Pattern::from_json(r#"{"n":2,"m":5,"i":3,"rows":[[0]]}"#).is_err());
    }

    #[test]
    fn with_entry_guards_membership() {
        let p = Pattern::zero(shape(2, 1, 2));
        assert!(p.with_entry(1, 2, 1).is_ok());
        assert!(p.with_entry(1, 2, 2).is_err());
    }
}
