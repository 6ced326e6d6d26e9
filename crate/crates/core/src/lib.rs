//! Exact computation and cross-verification of generalized inverses —
//! inner, {1,3}, {1,4}, group, Moore-Penrose, core and dual core — for
//! square matrices over exact fields with an involution (Q, Q(i), F_p).
//!
//! The crate has two halves. [`geninv`] holds the algorithmic side:
//! canonical solvers driven by rank normal forms, the unit-based
//! representation formula catalog, and the existence-criteria chains.
//! [`lab`] holds the validation side: structured generators, randomized
//! theorem-checking campaigns, and a brute-force oracle over small finite
//! matrix rings that the algorithms are compared against.

pub mod error;
pub mod geninv;
pub mod lab;
pub mod matrix;
pub mod scalar;

pub use error::{Error, Result};
pub use geninv::{
    apply_formula, axiom_checks, axioms_hold, solve, FormulaError, FormulaId,
    InnerClass, InnerInverseFamily, InverseCertificate, InverseKind, NonExistent,
};
pub use matrix::{RankForm, Side, StarMatrix};
pub use scalar::{FieldSpec, Scalar};
