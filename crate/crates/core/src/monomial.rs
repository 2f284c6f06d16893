//! Nakajima monomials in the variables `Y_l(k)` with their crystal structure.
//!
//! For a monomial `M = prod Y_l(k)^{y_l(k)}`:
//!
//! * `phi_l(M) = max_k sum_{j<=k} y_l(j)`, attained first at `n_f`;
//! * `eps_l(M) = max_k (-sum_{j>k} y_l(j))`, attained last at `n_e`;
//! * `f_l M = A_l(n_f)^{-1} M`, `e_l M = A_l(n_e) M`, with
//!   `A_l(k) = Y_l(k) Y_l(k+1) prod_{j ~ l} Y_j(k + c_{j,l})^{-1}`.
//!
//! Both maxima are taken over the support of `y_l` widened by one position on
//! each side; partial sums are constant outside that window.

use std::collections::BTreeMap;
use std::fmt;

use crate::crystal::{build_graph, Crystal, CrystalGraph};
use crate::error::{Error, Result};
use crate::shape::CrystalShape;
use crate::weight::Weight;

/// Laurent monomial; zero exponents are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exponents: BTreeMap<(usize, i64), i64>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    /// `Y_l(k)^e`.
    pub fn var(l: usize, k: i64, e: i64) -> Self {
        let mut out = Monomial::one();
        out.mul_var(l, k, e);
        out
    }

    pub fn exponent(&self, l: usize, k: i64) -> i64 {
        self.exponents.get(&(l, k)).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &BTreeMap<(usize, i64), i64> {
        &self.exponents
    }

    pub fn is_one(&self) -> bool {
        self.exponents.is_empty()
    }

    fn mul_var(&mut self, l: usize, k: i64, e: i64) {
        let slot = self.exponents.entry((l, k)).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.exponents.remove(&(l, k));
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.clone();
        for (&(l, k), &e) in &other.exponents {
            out.mul_var(l, k, e);
        }
        out
    }

    pub fn inverse(&self) -> Monomial {
        Monomial {
            exponents: self.exponents.iter().map(|(&key, &e)| (key, -e)).collect(),
        }
    }

    /// `(position, exponent)` pairs of `Y_l`, sorted by position.
    fn row(&self, l: usize) -> Vec<(i64, i64)> {
        self.exponents
            .range((l, i64::MIN)..=(l, i64::MAX))
            .map(|(&(_, k), &e)| (k, e))
            .collect()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .exponents
            .iter()
            .map(|(&(l, k), &e)| {
                if e == 1 {
                    format!("Y_{l}({k})")
                } else {
                    format!("Y_{l}({k})^{e}")
                }
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial[{self}]")
    }
}

/// The integers `c_{j,l}` for adjacent `j, l`, with `c_{j,l} + c_{l,j} = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct COffsets {
    n: usize,
    c: BTreeMap<(usize, usize), i64>,
}

impl COffsets {
    /// `c_{j,l} = 1` if `j < l`, else `0`.
    pub fn ascending(n: usize) -> Self {
        Self::from_rule(n, |j, l| i64::from(j < l))
    }

    /// `c_{j,l} = 0` if `j < l`, else `1`.
    pub fn descending(n: usize) -> Self {
        Self::from_rule(n, |j, l| i64::from(j > l))
    }

    fn from_rule(n: usize, rule: impl Fn(usize, usize) -> i64) -> Self {
        let mut c = BTreeMap::new();
        for j in 1..n {
            c.insert((j, j + 1), rule(j, j + 1));
            c.insert((j + 1, j), rule(j + 1, j));
        }
        COffsets { n, c }
    }

    /// Custom offsets; every adjacent pair must be given and sum to one.
    pub fn new(n: usize, c: BTreeMap<(usize, usize), i64>) -> Result<Self> {
        for j in 1..n {
            let (a, b) = (c.get(&(j, j + 1)), c.get(&(j + 1, j)));
            match (a, b) {
                (Some(a), Some(b)) if a + b == 1 => {}
                _ => {
                    return Err(Error::Invariant(format!(
                        "c offsets for ({j},{}) must sum to 1",
                        j + 1
                    )))
                }
            }
        }
        Ok(COffsets { n, c })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn get(&self, j: usize, l: usize) -> i64 {
        self.c[&(j, l)]
    }
}

/// `A_l(k) = Y_l(k) Y_l(k+1) prod_{j ~ l} Y_j(k + c_{j,l})^{-1}`.
pub fn a_factor(l: usize, k: i64, c: &COffsets) -> Monomial {
    assert!(l >= 1 && l <= c.rank(), "index {l} out of range");
    let mut out = Monomial::var(l, k, 1);
    out.mul_var(l, k + 1, 1);
    for j in [l.wrapping_sub(1), l + 1] {
        if j >= 1 && j <= c.rank() {
            out.mul_var(j, k + c.get(j, l), -1);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialStats {
    pub weight: Weight,
    pub phi: i64,
    pub eps: i64,
    /// Defined when `phi > 0`.
    pub n_f: Option<i64>,
    /// Defined when `eps > 0`.
    pub n_e: Option<i64>,
}

/// Weight, `phi_l`, `eps_l`, `n_f` and `n_e` of `m` in rank `n`.
pub fn monomial_stats(m: &Monomial, l: usize, n: usize) -> MonomialStats {
    let mut coeffs = vec![0i64; n];
    for (&(j, _), &e) in m.exponents() {
        coeffs[j - 1] += e;
    }
    let weight = Weight::from_omega(&coeffs);

    let row = m.row(l);
    if row.is_empty() {
        return MonomialStats {
            weight,
            phi: 0,
            eps: 0,
            n_f: None,
            n_e: None,
        };
    }
    let lo = row[0].0 - 1;
    let hi = row[row.len() - 1].0 + 1;
    let total: i64 = row.iter().map(|&(_, e)| e).sum();
    // prefix[k] = sum_{j<=k} y_l(j) for k in lo..=hi
    let prefix: Vec<(i64, i64)> = (lo..=hi)
        .scan(0i64, |acc, k| {
            *acc += m.exponent(l, k);
            Some((k, *acc))
        })
        .collect();
    let phi = prefix.iter().map(|&(_, s)| s).max().unwrap_or(0);
    // -sum_{j>k} y = prefix[k] - total
    let eps = prefix.iter().map(|&(_, s)| s - total).max().unwrap_or(0);
    let n_f = (phi > 0).then(|| prefix.iter().find(|&&(_, s)| s == phi).expect("attained").0);
    let n_e = (eps > 0).then(|| {
        prefix
            .iter()
            .rev()
            .find(|&&(_, s)| s - total == eps)
            .expect("attained")
            .0
    });
    MonomialStats {
        weight,
        phi,
        eps,
        n_f,
        n_e,
    }
}

pub fn m_f(m: &Monomial, l: usize, c: &COffsets) -> Option<Monomial> {
    let k = monomial_stats(m, l, c.rank()).n_f?;
    Some(m.mul(&a_factor(l, k, c).inverse()))
}

pub fn m_e(m: &Monomial, l: usize, c: &COffsets) -> Option<Monomial> {
    let k = monomial_stats(m, l, c.rank()).n_e?;
    Some(m.mul(&a_factor(l, k, c)))
}

/// The monomial crystal for a fixed choice of offsets. Classical indices only.
#[derive(Clone, Debug)]
pub struct MonomialCrystal {
    c: COffsets,
}

impl MonomialCrystal {
    pub fn new(c: COffsets) -> Self {
        MonomialCrystal { c }
    }

    pub fn offsets(&self) -> &COffsets {
        &self.c
    }

    fn check(&self, l: usize) {
        assert!(
            l >= 1 && l <= self.c.rank(),
            "monomial crystal has no index {l}"
        );
    }
}

impl Crystal for MonomialCrystal {
    type Element = Monomial;

    fn rank(&self) -> usize {
        self.c.rank()
    }

    fn weight(&self, b: &Monomial) -> Weight {
        monomial_stats(b, 1, self.c.rank()).weight
    }

    fn phi(&self, b: &Monomial, l: usize) -> i64 {
        self.check(l);
        monomial_stats(b, l, self.c.rank()).phi
    }

    fn eps(&self, b: &Monomial, l: usize) -> i64 {
        self.check(l);
        monomial_stats(b, l, self.c.rank()).eps
    }

    fn f(&self, b: &Monomial, l: usize) -> Option<Monomial> {
        self.check(l);
        m_f(b, l, &self.c)
    }

    fn e(&self, b: &Monomial, l: usize) -> Option<Monomial> {
        self.check(l);
        m_e(b, l, &self.c)
    }
}

/// `Y_i(0)^m`, the highest weight monomial of weight `m w_i`.
pub fn highest_monomial(shape: CrystalShape) -> Monomial {
    Monomial::var(shape.i(), 0, i64::from(shape.m()))
}

/// Connected component of `Y_i(0)^m` over indices `1..=n`.
pub fn generate_component(shape: CrystalShape, c: &COffsets) -> CrystalGraph<Monomial> {
    assert_eq!(c.rank(), shape.n(), "offsets rank differs from shape");
    let labels: Vec<usize> = (1..=shape.n()).collect();
    build_graph(
        &MonomialCrystal::new(c.clone()),
        &labels,
        &[highest_monomial(shape)],
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stats_examples() {
        let m = Monomial::var(2, 0, 3);
        let s = monomial_stats(&m, 2, 3);
        assert_eq!(s.weight.omega_coeffs(), vec![0, 3, 0]);
        assert_eq!((s.phi, s.eps), (3, 0));

        let m = Monomial::var(1, 1, -1).mul(&Monomial::var(2, 0, 1));
        let s = monomial_stats(&m, 1, 2);
        assert_eq!((s.eps, s.phi), (1, 0));
        assert_eq!(s.n_e, Some(0));

        let s = monomial_stats(&Monomial::one(), 1, 2);
        assert_eq!((s.phi, s.eps), (0, 0));
        assert_eq!(s.weight.omega_coeffs(), vec![0, 0]);
    }

    #[test]
    fn a_factor_examples() {
        let c = COffsets::ascending(2);
        let a2 = a_factor(2, 0, &c);
        let expected = Monomial::var(2, 0, 1)
            .mul(&Monomial::var(2, 1, 1))
            .mul(&Monomial::var(1, 1, -1));
        assert_eq!(a2, expected);
        let a1 = a_factor(1, 0, &c);
        let expected = Monomial::var(1, 0, 1)
            .mul(&Monomial::var(1, 1, 1))
            .mul(&Monomial::var(2, 0, -1));
        assert_eq!(a1, expected);
        assert!(a1.mul(&a1.inverse()).is_one());
    }

    #[test]
    fn operator_examples() {
        let c = COffsets::ascending(2);
        let got = m_f(&Monomial::var(2, 0, 1), 2, &c).unwrap();
        assert_eq!(got, Monomial::var(2, 1, -1).mul(&Monomial::var(1, 1, 1)));
        assert_eq!(got.to_string(), "Y_1(1) Y_2(1)^-1");
        let top = Monomial::var(2, 0, 3);
        for l in 1..=2 {
            assert_eq!(m_e(&top, l, &c), None);
        }
    }

    #[test]
    fn display_sorted_by_index_then_position() {
        let m = Monomial::var(2, 0, 1).mul(&Monomial::var(1, 1, -1));
        assert_eq!(m.to_string(), "Y_1(1)^-1 Y_2(0)");
        assert_eq!(Monomial::one().to_string(), "1");
    }

    #[test]
    fn offsets_validation() {
        let mut c = BTreeMap::new();
        c.insert((1, 2), 1);
        c.insert((2, 1), 1);
        assert!(COffsets::new(2, c).is_err());
        assert_eq!(COffsets::descending(3).get(1, 2), 0);
        assert_eq!(COffsets::descending(3).get(2, 1), 1);
    }

    #[test]
    fn component_sizes() {
        let sizes = [((2, 1, 1), 3), ((2, 3, 2), 10), ((3, 0, 2), 1)];
        for ((n, m, i), size) in sizes {
            let shape = CrystalShape::new(n, m, i).unwrap();
            assert_eq!(
                generate_component(shape, &COffsets::ascending(n)).len(),
                size
            );
        }
    }
}
