//! The promotion operator on `B^{m,i}` and the affine operators built from it.
//!
//! Promotion is computed column by column, right to left. Each step compares
//! a column of the input with the current right-hand column (first the last
//! column, afterwards the auxiliary column produced by the previous step),
//! emits one column of the image and a new auxiliary column. The first image
//! column is fixed last so that the image content is the cyclic shift of the
//! input content.
//!
//! Inside a step, the break rows `l_1 < l_2 < ... < l_t = n` are found by
//! repeated [`pair_stats`] on the two columns truncated strictly below the
//! previous break row, starting from the full columns.

use std::fmt;

use crate::crystal::{build_graph, CrystalGraph};
use crate::error::{Error, Result};
use crate::polytope::{self, split_scan, PolytopeCrystal};
use crate::shape::{enumerate_patterns, CrystalShape, Pattern};
use crate::verify::{Clause, Report};

/// A column restricted to rows `start_row..=n` (1-based row numbering).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedColumn {
    start_row: usize,
    values: Vec<i64>,
}

impl TruncatedColumn {
    /// `values[k]` is the entry of row `start_row + k`.
    pub fn new(start_row: usize, values: Vec<i64>) -> Self {
        TruncatedColumn { start_row, values }
    }

    /// Drops rows before `start_row`. `full` starts at row `first_row`.
    fn truncate(first_row: usize, full: &[i64], start_row: usize) -> Self {
        TruncatedColumn {
            start_row,
            values: full[start_row - first_row..].to_vec(),
        }
    }

    pub fn start_row(&self) -> usize {
        self.start_row
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }
}

/// `(q_minus, eps)` of two truncated columns.
///
/// `q_minus` is the smallest row maximizing
/// `sum_{j=s}^{p} left_j + sum_{j=p}^{n} right_j`, and
/// `eps = sum_{j=s}^{q_minus} left_j - sum_{j=s}^{q_minus-1} right_j`.
pub fn pair_stats(left: &TruncatedColumn, right: &TruncatedColumn) -> Result<(usize, i64)> {
    if left.start_row != right.start_row
        || left.values.len() != right.values.len()
        || left.values.is_empty()
    {
        return Err(Error::MismatchedRows);
    }
    let scan = split_scan(&left.values, &right.values);
    Ok((left.start_row + scan.first_max, scan.head))
}

/// One column step of the algorithm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PromotionStep {
    /// Index `k` of the left input column; the step emits image column `k+1`.
    pub left_column: usize,
    /// Break rows `l_1 < ... < l_t = n`.
    pub breaks: Vec<usize>,
    /// Image column `k+1`, rows `i..=n`.
    pub image_column: Vec<i64>,
    /// Auxiliary column passed to the next step, rows `i..=n`.
    pub auxiliary: Vec<i64>,
}

/// Steps in execution order (rightmost pair first). Empty for `i = 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PromotionTrace {
    pub steps: Vec<PromotionStep>,
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

impl fmt::Display for PromotionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, step) in self.steps.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            writeln!(f, "l^{}: {}", step.left_column, join(&step.breaks, "<"))?;
            writeln!(f, "{}", join(&step.image_column, " "))?;
            write!(f, "{}", join(&step.auxiliary, " "))?;
        }
        Ok(())
    }
}

fn eps_below(first_row: usize, left: &[i64], right: &[i64], start_row: usize) -> Result<i64> {
    let l = TruncatedColumn::truncate(first_row, left, start_row);
    let r = TruncatedColumn::truncate(first_row, right, start_row);
    Ok(pair_stats(&l, &r)?.1)
}

/// Runs one column step on `left` and `right` (both rows `i..=n`).
fn column_step(
    i: usize,
    n: usize,
    left: &[i64],
    right: &[i64],
) -> Result<(Vec<usize>, Vec<i64>, Vec<i64>)> {
    let mut breaks = Vec::new();
    let mut prev = i - 1;
    while prev < n {
        let l = TruncatedColumn::truncate(i, left, prev + 1);
        let r = TruncatedColumn::truncate(i, right, prev + 1);
        let (q, _) = pair_stats(&l, &r)?;
        breaks.push(q);
        prev = q;
    }

    let at = |col: &[i64], row: usize| col[row - i];
    let mut image = Vec::with_capacity(n - i + 1);
    for r in i..=n {
        let value = if r == i {
            eps_below(i, left, right, i)?
        } else if breaks.contains(&(r - 1)) {
            eps_below(i, left, right, r)?
        } else {
            at(right, r - 1)
        };
        image.push(value);
    }

    let mut aux = Vec::with_capacity(n - i + 1);
    for r in i..=n {
        let value = if r == n {
            at(left, n) + at(right, n)
        } else if breaks.contains(&r) {
            at(left, r) + at(right, r) - eps_below(i, left, right, r + 1)?
        } else {
            at(left, r)
        };
        aux.push(value);
    }
    if aux.iter().any(|&v| v < 0) {
        return Err(Error::Invariant(format!(
            "negative auxiliary column {aux:?}"
        )));
    }
    Ok((breaks, image, aux))
}

/// Promotion with its step-by-step trace.
pub fn promote_traced(p: &Pattern) -> Result<(Pattern, PromotionTrace)> {
    let shape = p.shape();
    let (n, i, m) = (shape.n(), shape.i(), i64::from(shape.m()));
    let get = |c: usize, q: usize| i64::from(p.get(c, q));

    // image[c-1][q-i] is pr(a_{c,q})
    let mut image = vec![vec![0i64; n - i + 1]; i];
    let mut trace = PromotionTrace::default();

    if i == 1 {
        let total: i64 = (1..=n).map(|q| get(1, q)).sum();
        image[0][0] = m - total;
        for q in 2..=n {
            image[0][q - 1] = get(1, q - 1);
        }
    } else {
        let columns: Vec<Vec<i64>> = (1..=i)
            .map(|c| p.column(c).into_iter().map(i64::from).collect())
            .collect();
        let mut right = columns[i - 1].clone();
        for k in (1..i).rev() {
            let (breaks, col, aux) = column_step(i, n, &columns[k - 1], &right)?;
            image[k] = col.clone();
            trace.steps.push(PromotionStep {
                left_column: k,
                breaks,
                image_column: col,
                auxiliary: aux.clone(),
            });
            right = aux;
        }
        let last_col_sum: i64 = (i..=n).map(|q| get(i, q)).sum();
        let corner_sum: i64 = (2..=i).map(|c| image[c - 1][0]).sum();
        image[0][0] = m - last_col_sum - corner_sum;
        for r in i + 1..=n {
            let above: i64 = (1..=i).map(|c| get(c, r - 1)).sum();
            let placed: i64 = (2..=i).map(|c| image[c - 1][r - i]).sum();
            image[0][r - i] = above - placed;
        }
    }

    if image[0].iter().any(|&v| v < 0) {
        return Err(Error::Invariant(format!(
            "first promoted column of {p:?} is negative: {:?}",
            image[0]
        )));
    }
    let rows: Vec<Vec<i64>> = (0..=n - i)
        .map(|r| (0..i).map(|c| image[c][r]).collect())
        .collect();
    let out = Pattern::from_signed_rows(shape, &rows)
        .map_err(|_| Error::Invariant(format!("promotion of {p:?} left B^{{m,i}}: {rows:?}")))?;
    Ok((out, trace))
}

pub fn promote(p: &Pattern) -> Result<Pattern> {
    promote_traced(p).map(|(out, _)| out)
}

/// `pr^k`.
pub fn promote_power(p: &Pattern, k: usize) -> Result<Pattern> {
    let mut cur = p.clone();
    for _ in 0..k {
        cur = promote(&cur)?;
    }
    Ok(cur)
}

/// `pr^{-1}`, computed as `pr^n`.
pub fn promote_inverse(p: &Pattern) -> Result<Pattern> {
    promote_power(p, p.shape().n())
}

/// `f_0 = pr^{-1} f_1 pr`.
pub fn f0(p: &Pattern) -> Result<Option<Pattern>> {
    match polytope::f(&promote(p)?, 1)? {
        Some(q) => promote_inverse(&q).map(Some),
        None => Ok(None),
    }
}

/// `e_0 = pr^{-1} e_1 pr`.
pub fn e0(p: &Pattern) -> Result<Option<Pattern>> {
    match polytope::e(&promote(p)?, 1)? {
        Some(q) => promote_inverse(&q).map(Some),
        None => Ok(None),
    }
}

/// Weak promotion check of `promote` over every member of `shape`.
pub fn verify_weak_promotion(shape: CrystalShape) -> Report {
    verify_weak_promotion_with(shape, promote)
}

/// Weak promotion check of an arbitrary map `pr` on `B^{m,i}`: content shift,
/// bijectivity, intertwining for `j = 1..n-1`, and `pr^{n+1} = id`.
pub fn verify_weak_promotion_with(
    shape: CrystalShape,
    pr: impl Fn(&Pattern) -> Result<Pattern>,
) -> Report {
    let mut report = Report::default();
    let members = enumerate_patterns(shape);
    let n = shape.n();
    let mut images = std::collections::HashSet::new();

    let lift = |x: Result<Option<Pattern>>| -> Result<Option<Pattern>> {
        match x? {
            Some(q) => pr(&q).map(Some),
            None => Ok(None),
        }
    };

    for (k, p) in members.iter().enumerate() {
        let image = match pr(p) {
            Ok(img) if img.shape() == shape => img,
            Ok(img) => {
                report.push(Clause::Closure, Some(k), &[], format!("{p:?} -> {img:?}"));
                continue;
            }
            Err(err) => {
                report.push(Clause::Closure, Some(k), &[], format!("{p:?}: {err}"));
                continue;
            }
        };
        let expected = p.weight().rotate_content();
        if image.weight() != expected {
            report.push(
                Clause::ContentShift,
                Some(k),
                &[],
                format!(
                    "{p:?}: content {:?}, expected {:?}",
                    image.content(),
                    expected.content()
                ),
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
            let left_f = lift(polytope::f(p, j));
            let right_f = polytope::f(&image, j + 1);
            if left_f != right_f {
                report.push(
                    Clause::Intertwining,
                    Some(k),
                    &[j, j + 1],
                    format!("pr f_{j} {p:?} = {left_f:?}, f_{} pr = {right_f:?}", j + 1),
                );
            }
            let left_e = lift(polytope::e(p, j));
            let right_e = polytope::e(&image, j + 1);
            if left_e != right_e {
                report.push(
                    Clause::Intertwining,
                    Some(k),
                    &[j, j + 1],
                    format!("pr e_{j} {p:?} = {left_e:?}, e_{} pr = {right_e:?}", j + 1),
                );
            }
        }
        let mut cur = Ok(p.clone());
        for _ in 0..=n {
            cur = cur.and_then(|c| pr(&c));
        }
        if cur.as_ref() != Ok(p) {
            report.push(
                Clause::Order,
                Some(k),
                &[],
                format!("{p:?}: pr^(n+1) = {cur:?}"),
            );
        }
    }
    if images.len() != members.len() && !report.has(Clause::Bijective) {
        report.push(
            Clause::Bijective,
            None,
            &[],
            "image size differs from member count",
        );
    }
    report
}

/// The affine crystal graph: classical edges plus `f_0` edges, index set
/// `{0, ..., n}`, grown from the all-zero pattern.
pub fn build_affine_graph(shape: CrystalShape) -> CrystalGraph<Pattern> {
    let labels: Vec<usize> = (0..=shape.n()).collect();
    build_graph(
        &PolytopeCrystal::new(shape),
        &labels,
        &[Pattern::zero(shape)],
    )
}
