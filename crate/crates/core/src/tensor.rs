//! Tensor products of crystals via the signature rule.
//!
//! Factor `k` contributes `eps_l` minus signs followed by `phi_l` plus signs.
//! Adjacent `(+, -)` pairs cancel until the word reads `-...-+...+`; `f_l`
//! acts on the factor owning the leftmost surviving `+`, `e_l` on the factor
//! owning the rightmost surviving `-`. For two factors this is the rule
//! "`f_l` acts on `b_1` iff `phi_l(b_1) > eps_l(b_2)`".

use crate::crystal::Crystal;
use crate::weight::Weight;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Minus,
    Plus,
}

/// A reduced signature; each symbol remembers the factor it came from.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SignatureString {
    symbols: Vec<(Sign, usize)>,
}

impl SignatureString {
    /// Reduces per-factor `(eps, phi)` counts.
    pub fn reduce(counts: &[(i64, i64)]) -> Self {
        let mut symbols: Vec<(Sign, usize)> = Vec::new();
        for (k, &(eps, phi)) in counts.iter().enumerate() {
            for _ in 0..eps {
                if matches!(symbols.last(), Some((Sign::Plus, _))) {
                    symbols.pop();
                } else {
                    symbols.push((Sign::Minus, k));
                }
            }
            for _ in 0..phi {
                symbols.push((Sign::Plus, k));
            }
        }
        SignatureString { symbols }
    }

    pub fn symbols(&self) -> &[(Sign, usize)] {
        &self.symbols
    }

    pub fn signs(&self) -> Vec<Sign> {
        self.symbols.iter().map(|&(s, _)| s).collect()
    }

    pub fn plus_count(&self) -> usize {
        self.symbols
            .iter()
            .filter(|(s, _)| *s == Sign::Plus)
            .count()
    }

    pub fn minus_count(&self) -> usize {
        self.symbols.len() - self.plus_count()
    }

    /// Factor owning the leftmost `+`.
    pub fn leftmost_plus(&self) -> Option<usize> {
        self.symbols
            .iter()
            .find(|(s, _)| *s == Sign::Plus)
            .map(|&(_, k)| k)
    }

    /// Factor owning the rightmost `-`.
    pub fn rightmost_minus(&self) -> Option<usize> {
        self.symbols
            .iter()
            .rev()
            .find(|(s, _)| *s == Sign::Minus)
            .map(|&(_, k)| k)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TensorElement<E>(pub Vec<E>);

/// `B_1 (x) ... (x) B_k` over a common index set.
#[derive(Clone, Debug)]
pub struct TensorCrystal<C> {
    factors: Vec<C>,
}

impl<C: Crystal> TensorCrystal<C> {
    pub fn new(factors: Vec<C>) -> Self {
        assert!(!factors.is_empty(), "tensor product needs a factor");
        let rank = factors[0].rank();
        assert!(
            factors.iter().all(|c| c.rank() == rank),
            "factors differ in rank"
        );
        TensorCrystal { factors }
    }

    pub fn factors(&self) -> &[C] {
        &self.factors
    }

    pub fn l_signature(&self, t: &TensorElement<C::Element>, l: usize) -> SignatureString {
        let counts: Vec<(i64, i64)> = self
            .factors
            .iter()
            .zip(&t.0)
            .map(|(c, b)| (c.eps(b, l), c.phi(b, l)))
            .collect();
        SignatureString::reduce(&counts)
    }

    pub fn tensor_f(
        &self,
        t: &TensorElement<C::Element>,
        l: usize,
    ) -> Option<TensorElement<C::Element>> {
        let k = self.l_signature(t, l).leftmost_plus()?;
        let mut out = t.clone();
        out.0[k] = self.factors[k].f(&t.0[k], l)?;
        Some(out)
    }

    pub fn tensor_e(
        &self,
        t: &TensorElement<C::Element>,
        l: usize,
    ) -> Option<TensorElement<C::Element>> {
        let k = self.l_signature(t, l).rightmost_minus()?;
        let mut out = t.clone();
        out.0[k] = self.factors[k].e(&t.0[k], l)?;
        Some(out)
    }

    /// `(wt, phi_l, eps_l)` by the left-associated fold of the two-factor
    /// closed formulas.
    pub fn tensor_stats(&self, t: &TensorElement<C::Element>, l: usize) -> (Weight, i64, i64) {
        let mut parts = self.factors.iter().zip(&t.0);
        let (c0, b0) = parts.next().expect("non-empty tensor");
        let mut wt = c0.weight(b0);
        let (mut phi, mut eps) = (c0.phi(b0, l), c0.eps(b0, l));
        for (c, b) in parts {
            let (phi2, eps2) = (c.phi(b, l), c.eps(b, l));
            let (phi1, eps1) = (phi, eps);
            phi = phi2.max(phi1 + phi2 - eps2);
            eps = eps1.max(eps1 + eps2 - phi1);
            wt = &wt + &c.weight(b);
        }
        (wt, phi, eps)
    }
}

impl<C: Crystal> Crystal for TensorCrystal<C> {
    type Element = TensorElement<C::Element>;

    fn rank(&self) -> usize {
        self.factors[0].rank()
    }

    fn weight(&self, t: &Self::Element) -> Weight {
        self.tensor_stats(t, 1).0
    }

    fn phi(&self, t: &Self::Element, l: usize) -> i64 {
        self.l_signature(t, l).plus_count() as i64
    }

    fn eps(&self, t: &Self::Element, l: usize) -> i64 {
        self.l_signature(t, l).minus_count() as i64
    }

    fn f(&self, t: &Self::Element, l: usize) -> Option<Self::Element> {
        self.tensor_f(t, l)
    }

    fn e(&self, t: &Self::Element, l: usize) -> Option<Self::Element> {
        self.tensor_e(t, l)
    }

    fn contains(&self, t: &Self::Element) -> bool {
        t.0.len() == self.factors.len() && self.factors.iter().zip(&t.0).all(|(c, b)| c.contains(b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sign::*;

    #[test]
    fn signature_examples() {
        assert!(SignatureString::reduce(&[(0, 1), (1, 0)])
            .symbols()
            .is_empty());
        let s = SignatureString::reduce(&[(0, 1), (0, 1)]);
        assert_eq!(s.signs(), vec![Plus, Plus]);
        assert_eq!(s.leftmost_plus(), Some(0));
        let s = SignatureString::reduce(&[(2, 0), (0, 1)]);
        assert_eq!(s.signs(), vec![Minus, Minus, Plus]);
        assert_eq!(s.rightmost_minus(), Some(0));
        assert_eq!(s.leftmost_plus(), Some(1));
    }

    #[test]
    fn empty_signature_blocks_both_operators() {
        let s = SignatureString::reduce(&[(0, 1), (1, 0)]);
        assert_eq!(s.leftmost_plus(), None);
        assert_eq!(s.rightmost_minus(), None);
    }

    #[test]
    fn partial_cancellation() {
        // + + | - - - +  ->  - +
        let s = SignatureString::reduce(&[(0, 2), (3, 1)]);
        assert_eq!(s.symbols(), &[(Minus, 1), (Plus, 1)]);
    }
}
