mod common;

use common::{arb_member, pattern, shape, shapes};
use krcrystal::polytope::{e, f, string_data};
use krcrystal::promotion::{
    e0, f0, promote_inverse, promote_power, verify_weak_promotion, verify_weak_promotion_with,
};
use krcrystal::verify::Clause;
use krcrystal::{
    build_affine_graph, enumerate_patterns, promote, promote_traced, verify_axioms, Pattern,
    PolytopeCrystal, Weight,
};
use proptest::prelude::*;

proptest! {
    #[test]
    fn trace_invariants(p in arb_member(5, 3)) {
        let s = p.shape();
        let (img, trace) = promote_traced(&p).unwrap();
        prop_assert_eq!(trace.steps.len(), s.i() - 1);
        for step in &trace.steps {
            prop_assert!(step.breaks.windows(2).all(|w| w[0] < w[1]));
            prop_assert_eq!(*step.breaks.last().unwrap(), s.n());
            prop_assert!(*step.breaks.first().unwrap() >= s.i());
            prop_assert!(step.auxiliary.iter().all(|&v| v >= 0));
        }
        prop_assert_eq!(img.weight(), p.weight().rotate_content());
    }

    #[test]
    fn first_column_identity(p in arb_member(5, 3)) {
        let s = p.shape();
        let img = promote(&p).unwrap();
        let first: i64 = img.column(1).iter().map(|&v| i64::from(v)).sum();
        let last_row: i64 = (1..=s.i()).map(|c| i64::from(p.get(c, s.n()))).sum();
        prop_assert_eq!(i64::from(s.m()) - first, last_row);
    }

    #[test]
    fn f_i_acts_on_the_promoted_pattern(p in arb_member(5, 3)) {
        let i = p.shape().i();
        if i >= 2 && string_data(&p, i - 1).unwrap().phi > 0 {
            let img = promote(&p).unwrap();
            prop_assert!(string_data(&img, i).unwrap().phi > 0);
        }
    }

    #[test]
    fn affine_operators_are_inverse(p in arb_member(4, 3)) {
        if let Some(q) = f0(&p).unwrap() {
            prop_assert_eq!(e0(&q).unwrap(), Some(p.clone()));
            let mut diff: Vec<i64> = q.content().iter().zip(p.content()).map(|(a, b)| a - b).collect();
            let last = diff.pop().unwrap();
            prop_assert_eq!(diff[0], 1);
            prop_assert_eq!(last, -1);
            prop_assert!(diff[1..].iter().all(|&d| d == 0));
        }
        if let Some(q) = e0(&p).unwrap() {
            prop_assert_eq!(f0(&q).unwrap(), Some(p.clone()));
        }
    }
}

#[test]
fn inverse_is_n_fold_promotion() {
    for s in shapes(4, 3) {
        for p in enumerate_patterns(s) {
            let img = promote(&p).unwrap();
            assert_eq!(promote_inverse(&img).unwrap(), p);
            assert_eq!(promote(&promote_inverse(&p).unwrap()).unwrap(), p);
            assert_eq!(promote_power(&p, s.n() + 1).unwrap(), p);
        }
    }
}

#[test]
fn boundary_intertwining() {
    for s in shapes(5, 2) {
        let i = s.i();
        for p in enumerate_patterns(s) {
            let img = promote(&p).unwrap();
            for j in [i - 1, i] {
                if j == 0 || j >= s.n() {
                    continue;
                }
                let lhs = e(&p, j).unwrap().map(|q| promote(&q).unwrap());
                assert_eq!(lhs, e(&img, j + 1).unwrap(), "{p:?} j={j}");
                let lhs = f(&p, j).unwrap().map(|q| promote(&q).unwrap());
                assert_eq!(lhs, f(&img, j + 1).unwrap(), "{p:?} j={j}");
            }
        }
    }
}

#[test]
fn weak_promotion_examples() {
    assert!(verify_weak_promotion(shape(2, 3, 2)).is_empty());
    assert_eq!(enumerate_patterns(shape(3, 2, 2)).len(), 20);
    assert!(verify_weak_promotion(shape(3, 2, 2)).is_empty());
    assert!(verify_weak_promotion(shape(5, 2, 3)).is_empty());
}

#[test]
fn skipping_first_column_normalization_is_caught() {
    let s = shape(3, 2, 2);
    // keep the algorithm's columns 2..i but leave the old first column
    let broken = |p: &Pattern| {
        let img = promote(p)?;
        let rows: Vec<Vec<u32>> = img
            .rows()
            .into_iter()
            .zip(p.rows())
            .map(|(mut new, old)| {
                new[0] = old[0];
                new
            })
            .collect();
        Pattern::new(s.with_level(s.m() + 4), rows)?.at_level(s.m())
    };
    let report = verify_weak_promotion_with(s, broken);
    assert!(
        report.has(Clause::ContentShift) || report.has(Clause::Closure),
        "{report}"
    );
    assert!(!report.is_empty());
}

#[test]
fn affine_graphs() {
    for s in shapes(3, 3) {
        let g = build_affine_graph(s);
        assert_eq!(g.len(), enumerate_patterns(s).len(), "{s}");
        assert_eq!(g.component_count(), 1);
        assert_eq!(g.index_set(), (0..=s.n()).collect::<Vec<_>>());
        let report = verify_axioms(&g, &PolytopeCrystal::new(s));
        assert!(report.is_empty(), "{s}: {report}");
        // f_0 is a partial function
        let mut sources: Vec<usize> = g.edges().iter().filter(|e| e.1 == 0).map(|e| e.0).collect();
        let before = sources.len();
        sources.dedup();
        assert_eq!(before, sources.len());
    }
    let zero = Pattern::zero(shape(2, 3, 2));
    assert!(e0(&zero).unwrap().is_some());
    assert_eq!(build_affine_graph(shape(2, 3, 2)).len(), 10);
}

#[test]
fn vector_representation_affine_cycle() {
    let s = shape(2, 1, 1);
    let g = build_affine_graph(s);
    let a = pattern(2, 1, 1, vec![vec![0], vec![0]]);
    let c = pattern(2, 1, 1, vec![vec![0], vec![1]]);
    // f_0 sends the lowest weight element back to the highest
    assert_eq!(f0(&c).unwrap(), Some(a.clone()));
    assert_eq!(g.edges().iter().filter(|e| e.1 == 0).count(), 1);
    assert_eq!(g.edges().len(), 3);
}

#[test]
fn node_zero_pairing() {
    let w = Weight::from_content(vec![3, 1, 0, 2]);
    assert_eq!(w.pairing(0), 2 - 3);
}
