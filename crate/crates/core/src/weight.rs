//! Classical `sl_{n+1}` weights.
//!
//! A weight is stored by its content `(r_1, ..., r_{n+1})`, the coefficients
//! on `e_1, ..., e_{n+1}`, with `w_l = e_1 + ... + e_l` and
//! `alpha_l = e_l - e_{l+1}`. Content is only defined up to adding the
//! all-ones vector; [`Weight::omega_coeffs`] is the canonical view and is what
//! cross-model comparisons should use.
//!
//! Index `0` is the affine node. On classical weights it acts through the
//! level-zero pairing `<alpha_0^vee, mu> = r_{n+1} - r_1`, and
//! `alpha_0 = -theta = e_{n+1} - e_1`.

use std::fmt;
use std::ops::Add;

use serde::Serialize;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Weight {
    content: Vec<i64>,
}

impl Weight {
    pub fn from_content(content: Vec<i64>) -> Self {
        assert!(!content.is_empty(), "content of sl_1 weight is meaningless");
        Weight { content }
    }

    /// Weight `sum_l c_l w_l`, represented with `r_{n+1} = 0`.
    pub fn from_omega(coeffs: &[i64]) -> Self {
        let n = coeffs.len();
        let mut content = vec![0i64; n + 1];
        let mut acc = 0;
        for j in (0..n).rev() {
            acc += coeffs[j];
            content[j] = acc;
        }
        Weight { content }
    }

    pub fn zero(n: usize) -> Self {
        Weight {
            content: vec![0; n + 1],
        }
    }

    /// Rank `n` of `A_n`.
    pub fn rank(&self) -> usize {
        self.content.len() - 1
    }

    pub fn content(&self) -> &[i64] {
        &self.content
    }

    /// Coefficients `<alpha_l^vee, wt>` for `l = 1..=n`.
    pub fn omega_coeffs(&self) -> Vec<i64> {
        self.content.windows(2).map(|w| w[0] - w[1]).collect()
    }

    /// `<alpha_l^vee, wt>` for `l` in `0..=n`.
    pub fn pairing(&self, l: usize) -> i64 {
        let n = self.rank();
        assert!(l <= n, "index {l} out of range 0..={n}");
        if l == 0 {
            self.content[n] - self.content[0]
        } else {
            self.content[l - 1] - self.content[l]
        }
    }

    /// Simple root `alpha_l` in content coordinates, `l` in `0..=n`.
    pub fn simple_root(n: usize, l: usize) -> Self {
        assert!(l <= n, "index {l} out of range 0..={n}");
        let mut content = vec![0; n + 1];
        if l == 0 {
            content[0] = -1;
            content[n] = 1;
        } else {
            content[l - 1] = 1;
            content[l] = -1;
        }
        Weight { content }
    }

    /// `self + sign * alpha_l`.
    pub fn shift_by_root(&self, l: usize, sign: i64) -> Self {
        let root = Weight::simple_root(self.rank(), l);
        Weight {
            content: self
                .content
                .iter()
                .zip(root.content)
                .map(|(a, b)| a + sign * b)
                .collect(),
        }
    }

    /// Equality of the underlying classical weights, ignoring the content
    /// normalization.
    pub fn same_class(&self, other: &Weight) -> bool {
        self.omega_coeffs() == other.omega_coeffs()
    }

    /// Cyclic shift `(r_{n+1}, r_1, ..., r_n)`.
    pub fn rotate_content(&self) -> Self {
        let mut content = self.content.clone();
        content.rotate_right(1);
        Weight { content }
    }
}

impl Add for &Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.content.len(), rhs.content.len(), "rank mismatch");
        Weight {
            content: self
                .content
                .iter()
                .zip(&rhs.content)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Weight{:?}", self.content)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn views_agree() {
        let w = Weight::from_content(vec![2, 3, 1, 3, 1]);
        assert_eq!(w.omega_coeffs(), vec![-1, 2, -2, 2]);
        for l in 1..=4 {
            assert_eq!(w.pairing(l), w.content()[l - 1] - w.content()[l]);
        }
        let back = Weight::from_omega(&w.omega_coeffs());
        assert!(back.same_class(&w));
        assert_ne!(back, w);
    }

    #[test]
    fn roots_pair_by_cartan_matrix() {
        let n = 3;
        for l in 1..=n {
            let root = Weight::simple_root(n, l);
            for k in 1..=n {
                let expected = match (l as i64 - k as i64).abs() {
                    0 => 2,
                    1 => -1,
                    _ => 0,
                };
                assert_eq!(root.pairing(k), expected);
            }
        }
        // affine node: alpha_0 pairs to 2 with itself and -1 with 1 and n
        let a0 = Weight::simple_root(n, 0);
        assert_eq!(a0.pairing(0), 2);
        assert_eq!(a0.pairing(1), -1);
        assert_eq!(a0.pairing(n), -1);
        assert_eq!(a0.pairing(2), 0);
    }

    #[test]
    fn rotation() {
        let w = Weight::from_content(vec![3, 3, 0]);
        assert_eq!(w.rotate_content().content(), &[0, 3, 3]);
    }
}
