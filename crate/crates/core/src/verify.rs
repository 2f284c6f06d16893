//! Structured verifiers for the abstract crystal axioms and the Stembridge
//! local conditions.
//!
//! Verifiers never fail; every violated clause is recorded in a [`Report`]
//! with the offending vertex and labels.

use std::fmt;

use crate::crystal::{Crystal, CrystalGraph};
use crate::weight::Weight;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Clause {
    /// `phi_l - eps_l = <alpha_l^vee, wt>`.
    Pairing,
    /// `wt(e_l b) = wt(b) + alpha_l`.
    RaiseWeight,
    /// `wt(f_l b) = wt(b) - alpha_l`.
    LowerWeight,
    /// `eps`/`phi` shift by one under `e_l`.
    RaiseStrings,
    /// `eps`/`phi` shift by one under `f_l`.
    LowerStrings,
    /// `f_l b = b'` iff `e_l b' = b`, on the model and on the graph edges.
    Inverse,
    /// `eps` and `phi` must be finite and non-negative.
    Finite,
    /// `eps`/`phi` equal the string lengths.
    Semiregular,
    /// An operator leaves the vertex set or the underlying set.
    Closure,
    /// More than one `f_l`- or `e_l`-edge at a vertex.
    Deterministic,
    Connected,
    Stembridge1,
    Stembridge2,
    Stembridge3,
    Stembridge4,
    Stembridge5,
    /// Weak promotion: content is not cyclically shifted.
    ContentShift,
    /// Weak promotion: not a bijection of the member set.
    Bijective,
    /// Weak promotion: fails to intertwine `f_j`/`e_j` with `f_{j+1}`/`e_{j+1}`.
    Intertwining,
    /// `pr^{n+1} != id`.
    Order,
    /// Model comparison mismatch.
    Isomorphism,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Clause::Pairing => "axiom (1) pairing",
            Clause::RaiseWeight => "axiom (2) weight of e",
            Clause::LowerWeight => "axiom (3) weight of f",
            Clause::RaiseStrings => "axiom (4) strings under e",
            Clause::LowerStrings => "axiom (5) strings under f",
            Clause::Inverse => "axiom (6) f/e inverse",
            Clause::Finite => "axiom (7) finiteness",
            Clause::Semiregular => "semiregularity",
            Clause::Closure => "closure",
            Clause::Deterministic => "edge determinism",
            Clause::Connected => "connectivity",
            Clause::Stembridge1 => "stembridge (1)",
            Clause::Stembridge2 => "stembridge (2)",
            Clause::Stembridge3 => "stembridge (3)",
            Clause::Stembridge4 => "stembridge (4)",
            Clause::Stembridge5 => "stembridge (5)",
            Clause::ContentShift => "promotion content shift",
            Clause::Bijective => "promotion bijectivity",
            Clause::Intertwining => "promotion intertwining",
            Clause::Order => "promotion order n+1",
            Clause::Isomorphism => "model isomorphism",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub clause: Clause,
    /// Vertex index in the graph, when the violation is local.
    pub vertex: Option<usize>,
    pub labels: Vec<usize>,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.clause)?;
        if let Some(v) = self.vertex {
            write!(f, " at vertex {v}")?;
        }
        if !self.labels.is_empty() {
            write!(f, " labels {:?}", self.labels)?;
        }
        write!(f, ": {}", self.detail)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn len(&self) -> usize {
        self.violations.len()
    }

    pub fn has(&self, clause: Clause) -> bool {
        self.violations.iter().any(|v| v.clause == clause)
    }

    pub fn push(
        &mut self,
        clause: Clause,
        vertex: Option<usize>,
        labels: &[usize],
        detail: impl Into<String>,
    ) {
        self.violations.push(Violation {
            clause,
            vertex,
            labels: labels.to_vec(),
            detail: detail.into(),
        });
    }

    pub fn extend(&mut self, other: Report) {
        self.violations.extend(other.violations);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("OK");
        }
        for (k, v) in self.violations.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

fn same(a: &Weight, b: &Weight) -> bool {
    a.same_class(b)
}

/// Checks the crystal axioms (1)-(7), semiregularity, closure, edge
/// determinism and connectivity of `graph` against `model`.
///
/// Weights are compared as classical weights; index `0` uses the level-zero
/// pairing of [`Weight::pairing`].
pub fn verify_axioms<C: Crystal>(graph: &CrystalGraph<C::Element>, model: &C) -> Report {
    let mut report = Report::default();
    let cap = graph.len() as i64 + 1;

    let mut seen = std::collections::HashSet::new();
    for &(s, l, t) in graph.edges() {
        if !seen.insert(("f", s, l)) {
            report.push(Clause::Deterministic, Some(s), &[l], "two outgoing edges");
        }
        if !seen.insert(("e", t, l)) {
            report.push(Clause::Deterministic, Some(t), &[l], "two incoming edges");
        }
        let (src, dst) = (&graph.vertices()[s], &graph.vertices()[t]);
        if model.f(src, l).as_ref() != Some(dst) || model.e(dst, l).as_ref() != Some(src) {
            report.push(
                Clause::Inverse,
                Some(s),
                &[l],
                format!("edge {s} -> {t} is not an f/e pair of the model"),
            );
        }
    }

    for (k, b) in graph.vertices().iter().enumerate() {
        if !model.contains(b) {
            report.push(
                Clause::Closure,
                Some(k),
                &[],
                format!("{b:?} is not an element"),
            );
        }
        let wt = model.weight(b);
        for &l in graph.index_set() {
            let (phi, eps) = (model.phi(b, l), model.eps(b, l));
            if phi < 0 || eps < 0 {
                report.push(
                    Clause::Finite,
                    Some(k),
                    &[l],
                    format!("phi={phi}, eps={eps}"),
                );
            }
            if phi - eps != wt.pairing(l) {
                report.push(
                    Clause::Pairing,
                    Some(k),
                    &[l],
                    format!("phi={phi}, eps={eps}, pairing={}", wt.pairing(l)),
                );
            }

            let fb = model.f(b, l);
            let eb = model.e(b, l);

            if let Some(b2) = &eb {
                if !same(&model.weight(b2), &wt.shift_by_root(l, 1)) {
                    report.push(Clause::RaiseWeight, Some(k), &[l], format!("{b2:?}"));
                }
                if model.eps(b2, l) != eps - 1 || model.phi(b2, l) != phi + 1 {
                    report.push(Clause::RaiseStrings, Some(k), &[l], format!("{b2:?}"));
                }
                if model.f(b2, l).as_ref() != Some(b) {
                    report.push(Clause::Inverse, Some(k), &[l], "f(e(b)) != b");
                }
                match graph.index_of(b2) {
                    None => report.push(Clause::Closure, Some(k), &[l], "e-image outside graph"),
                    Some(t) => {
                        if graph.f_target(t, l) != Some(k) {
                            report.push(Clause::Inverse, Some(k), &[l], "missing edge for e-image");
                        }
                    }
                }
            }
            if let Some(b2) = &fb {
                if !same(&model.weight(b2), &wt.shift_by_root(l, -1)) {
                    report.push(Clause::LowerWeight, Some(k), &[l], format!("{b2:?}"));
                }
                if model.eps(b2, l) != eps + 1 || model.phi(b2, l) != phi - 1 {
                    report.push(Clause::LowerStrings, Some(k), &[l], format!("{b2:?}"));
                }
                if model.e(b2, l).as_ref() != Some(b) {
                    report.push(Clause::Inverse, Some(k), &[l], "e(f(b)) != b");
                }
                match graph.index_of(b2) {
                    None => report.push(Clause::Closure, Some(k), &[l], "f-image outside graph"),
                    Some(t) => {
                        if graph.f_target(k, l) != Some(t) {
                            report.push(Clause::Inverse, Some(k), &[l], "missing edge for f-image");
                        }
                    }
                }
            } else if graph.f_target(k, l).is_some() {
                report.push(
                    Clause::Inverse,
                    Some(k),
                    &[l],
                    "graph edge where f is undefined",
                );
            }

            let e_len = string_length(b, cap, |x| model.e(x, l));
            let f_len = string_length(b, cap, |x| model.f(x, l));
            if e_len != eps || f_len != phi {
                report.push(
                    Clause::Semiregular,
                    Some(k),
                    &[l],
                    format!("eps={eps} vs e-string {e_len}, phi={phi} vs f-string {f_len}"),
                );
            }
        }
    }

    if graph.len() > 1 && graph.component_count() != 1 {
        report.push(
            Clause::Connected,
            None,
            &[],
            format!("{} components", graph.component_count()),
        );
    }
    report
}

fn string_length<T: Clone>(b: &T, cap: i64, step: impl Fn(&T) -> Option<T>) -> i64 {
    let mut k = 0;
    let mut cur = b.clone();
    while let Some(next) = step(&cur) {
        k += 1;
        cur = next;
        if k > cap {
            break;
        }
    }
    k
}

/// Checks the local Stembridge conditions on the graph alone.
///
/// `eps`/`phi` are string lengths along graph edges. All ordered pairs of
/// distinct labels from the graph's index set are examined; conditions (3)
/// and (5) can only trigger for adjacent labels.
pub fn verify_stembridge<E: Clone + Eq + std::hash::Hash>(graph: &CrystalGraph<E>) -> Report {
    let mut report = Report::default();
    let labels = graph.index_set().to_vec();
    let eps = |v: usize, l: usize| graph.eps_len(v, l);
    let phi = |v: usize, l: usize| graph.phi_len(v, l);
    let e = |v: Option<usize>, l: usize| v.and_then(|v| graph.e_target(v, l));
    let f = |v: Option<usize>, l: usize| v.and_then(|v| graph.f_target(v, l));

    for b in 0..graph.len() {
        for &l in &labels {
            for &j in &labels {
                if l == j {
                    continue;
                }
                let pair = [l, j];

                // raising side
                if let Some(el) = graph.e_target(b, l) {
                    if eps(el, j) < eps(b, j) || phi(el, j) > phi(b, j) {
                        report.push(
                            Clause::Stembridge1,
                            Some(b),
                            &pair,
                            "e_l lowers eps_j or raises phi_j",
                        );
                    }
                    if let Some(ej) = graph.e_target(b, j) {
                        if eps(el, j) == eps(b, j) {
                            let x = e(Some(ej), l);
                            let y = e(Some(el), j);
                            match (x, y) {
                                (Some(x), Some(y)) if x == y => {
                                    let fj = graph.f_target(x, j);
                                    if fj.map(|u| phi(u, l)) != Some(phi(x, l)) {
                                        report.push(
                                            Clause::Stembridge2,
                                            Some(b),
                                            &pair,
                                            "phi_l(b') != phi_l(f_j b')",
                                        );
                                    }
                                }
                                _ => report.push(
                                    Clause::Stembridge2,
                                    Some(b),
                                    &pair,
                                    "e_l e_j b != e_j e_l b",
                                ),
                            }
                        }
                        if eps(b, j) - eps(el, j) == -1 && eps(b, l) - eps(ej, l) == -1 {
                            let x = e(e(e(e(Some(b), l), j), j), l);
                            let y = e(e(e(e(Some(b), j), l), l), j);
                            match (x, y) {
                                (Some(x), Some(y)) if x == y => {
                                    let dl = graph.f_target(x, j).map(|u| phi(x, l) - phi(u, l));
                                    let dj = graph.f_target(x, l).map(|u| phi(x, j) - phi(u, j));
                                    if dl != Some(-1) || dj != Some(-1) {
                                        report.push(
                                            Clause::Stembridge3,
                                            Some(b),
                                            &pair,
                                            "phi differences at b' are not -1",
                                        );
                                    }
                                }
                                _ => report.push(
                                    Clause::Stembridge3,
                                    Some(b),
                                    &pair,
                                    "e_l e_j^2 e_l b != e_j e_l^2 e_j b",
                                ),
                            }
                        }
                    }
                }

                // lowering side
                if let Some(fl) = graph.f_target(b, l) {
                    if let Some(fj) = graph.f_target(b, j) {
                        if phi(fl, j) == phi(b, j) {
                            let x = f(Some(fj), l);
                            let y = f(Some(fl), j);
                            match (x, y) {
                                (Some(x), Some(y)) if x == y => {
                                    let ej = graph.e_target(x, j);
                                    if ej.map(|u| eps(u, l)) != Some(eps(x, l)) {
                                        report.push(
                                            Clause::Stembridge4,
                                            Some(b),
                                            &pair,
                                            "eps_l(b') != eps_l(e_j b')",
                                        );
                                    }
                                }
                                _ => report.push(
                                    Clause::Stembridge4,
                                    Some(b),
                                    &pair,
                                    "f_l f_j b != f_j f_l b",
                                ),
                            }
                        }
                        if phi(b, j) - phi(fl, j) == -1 && phi(b, l) - phi(fj, l) == -1 {
                            let x = f(f(f(f(Some(b), l), j), j), l);
                            let y = f(f(f(f(Some(b), j), l), l), j);
                            match (x, y) {
                                (Some(x), Some(y)) if x == y => {
                                    let dl = graph.e_target(x, j).map(|u| eps(x, l) - eps(u, l));
                                    let dj = graph.e_target(x, l).map(|u| eps(x, j) - eps(u, j));
                                    if dl != Some(-1) || dj != Some(-1) {
                                        report.push(
                                            Clause::Stembridge5,
                                            Some(b),
                                            &pair,
                                            "eps differences at b' are not -1",
                                        );
                                    }
                                }
                                _ => report.push(
                                    Clause::Stembridge5,
                                    Some(b),
                                    &pair,
                                    "f_l f_j^2 f_l b != f_j f_l^2 f_j b",
                                ),
                            }
                        }
                    }
                }
            }
        }
    }
    report
}
