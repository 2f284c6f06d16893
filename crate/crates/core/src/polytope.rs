//! Classical crystal structure on `B^{m,i}`.
//!
//! For `l > i` the statistics of index `l` depend only on rows `l-1` and `l`;
//! for `l < i` only on columns `l` and `l+1`. Both reduce to the same scan
//! over two sequences `u`, `v` of the split sums
//! `S(p) = sum_{j<=p} u_j + sum_{j>=p} v_j`, see [`split_scan`].
//! For `l = i` only the corner `a_{i,i}` and the hook through it matter, and
//! `phi_i` is the only quantity that depends on `m`.

use crate::crystal::Crystal;
use crate::error::{Error, Result};
use crate::promotion;
use crate::shape::{CrystalShape, Pattern};
use crate::weight::Weight;

/// Result of scanning the split sums of two sequences.
///
/// Positions are 0-based offsets into the sequences.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitScan {
    /// Smallest position attaining the maximum split sum.
    pub first_max: usize,
    /// Largest position attaining the maximum split sum.
    pub last_max: usize,
    /// `sum_{j<=first_max} u_j - sum_{j<first_max} v_j`.
    pub head: i64,
    /// `sum_{j>=last_max} v_j - sum_{j>last_max} u_j`.
    pub tail: i64,
}

pub fn split_scan(u: &[i64], v: &[i64]) -> SplitScan {
    assert_eq!(u.len(), v.len(), "split scan needs equal lengths");
    assert!(!u.is_empty(), "split scan needs non-empty sequences");
    let len = u.len();
    let mut prefix_u = vec![0i64; len + 1];
    let mut prefix_v = vec![0i64; len + 1];
    for k in 0..len {
        prefix_u[k + 1] = prefix_u[k] + u[k];
        prefix_v[k + 1] = prefix_v[k] + v[k];
    }
    let total_v = prefix_v[len];
    let total_u = prefix_u[len];
    let split = |p: usize| prefix_u[p + 1] + (total_v - prefix_v[p]);
    let max = (0..len).map(split).max().expect("non-empty");
    let first_max = (0..len).find(|&p| split(p) == max).expect("max attained");
    let last_max = (0..len)
        .rev()
        .find(|&p| split(p) == max)
        .expect("max attained");
    SplitScan {
        first_max,
        last_max,
        head: prefix_u[first_max + 1] - prefix_v[first_max],
        tail: (total_v - prefix_v[last_max]) - (total_u - prefix_u[last_max + 1]),
    }
}

/// Which case applied, with its critical indices in 1-based
/// numbering.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Critical {
    /// `l = i`.
    Corner,
    /// `l > i`: column indices `1 <= p_plus <= q_plus <= i`.
    Upper { p_plus: usize, q_plus: usize },
    /// `l < i`: row indices `i <= q_minus <= p_minus <= n`.
    Lower { p_minus: usize, q_minus: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StringData {
    pub phi: i64,
    pub eps: i64,
    pub critical: Critical,
}

fn check_index(shape: CrystalShape, l: usize) -> Result<()> {
    if l == 0 || l > shape.n() {
        return Err(Error::IndexOutOfRange {
            index: l,
            n: shape.n(),
        });
    }
    Ok(())
}

fn row(p: &Pattern, q: usize) -> Vec<i64> {
    (1..=p.shape().i())
        .map(|c| i64::from(p.get(c, q)))
        .collect()
}

fn col(p: &Pattern, c: usize) -> Vec<i64> {
    p.column(c).into_iter().map(i64::from).collect()
}

/// `phi_l`, `eps_l` and the critical indices of `l` at `p`.
pub fn string_data(p: &Pattern, l: usize) -> Result<StringData> {
    let shape = p.shape();
    check_index(shape, l)?;
    let i = shape.i();
    let data = if l == i {
        let hook: i64 = (1..i).map(|j| i64::from(p.get(j, i))).sum::<i64>()
            + (i..=shape.n()).map(|q| i64::from(p.get(i, q))).sum::<i64>();
        StringData {
            phi: i64::from(shape.m()) - hook,
            eps: i64::from(p.get(i, i)),
            critical: Critical::Corner,
        }
    } else if l > i {
        let scan = split_scan(&row(p, l - 1), &row(p, l));
        StringData {
            phi: scan.head,
            eps: scan.tail,
            critical: Critical::Upper {
                p_plus: scan.first_max + 1,
                q_plus: scan.last_max + 1,
            },
        }
    } else {
        let scan = split_scan(&col(p, l), &col(p, l + 1));
        StringData {
            phi: scan.tail,
            eps: scan.head,
            critical: Critical::Lower {
                p_minus: scan.last_max + i,
                q_minus: scan.first_max + i,
            },
        }
    };
    Ok(data)
}

/// Applies `+1` / `-1` replacements to entries and checks the image.
fn replace(p: &Pattern, changes: &[(usize, usize, i64)]) -> Result<Pattern> {
    let mut rows = p.rows();
    let i = p.shape().i();
    for &(c, q, delta) in changes {
        let cell = &mut rows[q - i][c - 1];
        *cell = u32::try_from(i64::from(*cell) + delta).map_err(|_| {
            Error::Invariant(format!("entry a_{{{c},{q}}} of {p:?} leaves the naturals"))
        })?;
    }
    Pattern::new(p.shape(), rows)
        .map_err(|_| Error::Invariant(format!("image of {p:?} is not a member")))
}

/// Lowering operator `f_l`, `l` in `1..=n`. `None` when `phi_l = 0`.
pub fn f(p: &Pattern, l: usize) -> Result<Option<Pattern>> {
    let data = string_data(p, l)?;
    if data.phi == 0 {
        return Ok(None);
    }
    let i = p.shape().i();
    let changes = match data.critical {
        Critical::Corner => vec![(i, i, 1)],
        Critical::Upper { p_plus, .. } => vec![(p_plus, l - 1, -1), (p_plus, l, 1)],
        Critical::Lower { p_minus, .. } => vec![(l, p_minus, 1), (l + 1, p_minus, -1)],
    };
    replace(p, &changes).map(Some)
}

/// Raising operator `e_l`, `l` in `1..=n`. `None` when `eps_l = 0`.
pub fn e(p: &Pattern, l: usize) -> Result<Option<Pattern>> {
    let data = string_data(p, l)?;
    if data.eps == 0 {
        return Ok(None);
    }
    let i = p.shape().i();
    let changes = match data.critical {
        Critical::Corner => vec![(i, i, -1)],
        Critical::Upper { q_plus, .. } => vec![(q_plus, l - 1, 1), (q_plus, l, -1)],
        Critical::Lower { q_minus, .. } => vec![(l, q_minus, -1), (l + 1, q_minus, 1)],
    };
    replace(p, &changes).map(Some)
}

/// The polytope `B^{m,i}` as a crystal model.
///
/// Indices `1..=n` are the classical operators; index `0` is the affine pair
/// conjugated by promotion.
#[derive(Clone, Copy, Debug)]
pub struct PolytopeCrystal {
    shape: CrystalShape,
}

impl PolytopeCrystal {
    pub fn new(shape: CrystalShape) -> Self {
        PolytopeCrystal { shape }
    }

    pub fn shape(&self) -> CrystalShape {
        self.shape
    }

    fn promoted(b: &Pattern) -> Pattern {
        promotion::promote(b).expect("promotion of a member")
    }
}

impl Crystal for PolytopeCrystal {
    type Element = Pattern;

    fn rank(&self) -> usize {
        self.shape.n()
    }

    fn weight(&self, b: &Pattern) -> Weight {
        b.weight()
    }

    fn phi(&self, b: &Pattern, l: usize) -> i64 {
        if l == 0 {
            return string_data(&Self::promoted(b), 1).expect("index 1").phi;
        }
        string_data(b, l).expect("valid index").phi
    }

    fn eps(&self, b: &Pattern, l: usize) -> i64 {
        if l == 0 {
            return string_data(&Self::promoted(b), 1).expect("index 1").eps;
        }
        string_data(b, l).expect("valid index").eps
    }

    fn f(&self, b: &Pattern, l: usize) -> Option<Pattern> {
        if l == 0 {
            return promotion::f0(b).expect("f0 on a member");
        }
        f(b, l).expect("f on a member")
    }

    fn e(&self, b: &Pattern, l: usize) -> Option<Pattern> {
        if l == 0 {
            return promotion::e0(b).expect("e0 on a member");
        }
        e(b, l).expect("e on a member")
    }

    fn contains(&self, b: &Pattern) -> bool {
        b.shape() == self.shape
    }
}
