//! Kirillov-Reshetikhin crystals `B^{m,i}` of type `A_n^(1)` whose elements
//! are the integer points of a polytope.
//!
//! * [`shape`]: parameters, patterns, membership and enumeration.
//! * [`polytope`]: classical operators `f_l`, `e_l` on patterns.
//! * [`promotion`]: the promotion map and the affine operators `f_0`, `e_0`.
//! * [`crystal`] and [`verify`]: generic crystal graphs and axiom checkers.
//! * [`tensor`], [`monomial`], [`tableau`]: further models used as oracles.

pub mod crystal;
pub mod error;
pub mod monomial;
pub mod polytope;
pub mod promotion;
pub mod shape;
pub mod tableau;
pub mod tensor;
pub mod verify;
pub mod weight;

pub use crystal::{build_graph, character, rooted_isomorphism, Crystal, CrystalGraph};
pub use error::{Error, Result};
pub use monomial::{generate_component, COffsets, Monomial, MonomialCrystal};
pub use polytope::PolytopeCrystal;
pub use promotion::{build_affine_graph, promote, promote_traced, PromotionTrace};
pub use shape::{enumerate_patterns, is_member, weyl_dimension, CrystalShape, Pattern};
pub use tableau::{compare_models, enumerate_ssyt, jdt_promote, Tableau, TableauCrystal};
pub use tensor::{TensorCrystal, TensorElement};
pub use verify::{verify_axioms, verify_stembridge, Clause, Report};
pub use weight::Weight;
