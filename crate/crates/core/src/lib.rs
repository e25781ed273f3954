//! Exact symbolic calculus for residue currents in monomial coordinates.
//!
//! Currents are finite sums of elementary terms built from principal values
//! `[1/σ^a]` and residue factors `∂̄[1/σ^a]` with polynomial coefficient forms.
//! On top of the calculus the crate provides restriction to constructible
//! sets of the coordinate hyperplane arrangement, monomial ideal and module
//! algebra, and the splitting of a residue current along the associated
//! primes of its annihilator, with a full verification report.

pub mod algebra;
pub mod calculus;
pub mod constructible;
pub mod current;
pub mod error;
pub mod monomial;
pub mod residue;
pub mod vars;

/// Largest supported number of variables.
pub const MAX_VARS: usize = 16;

/// Largest exponent accepted from user input.
pub const MAX_EXPONENT: u32 = 1 << 15;

pub use algebra::{intersect_all, intersect_all_modules, MonIdeal, MonModule, MonPrime, SplitStrategy};
pub use calculus::{arm_product, coleff_herrera, is_monomial_complete_intersection, mul_monomial, pv_mul, res_mul};
pub use constructible::{OmegaSet, SetExpr};
pub use current::{Bidegree, Current, ElementaryTerm, Factor, Piece, PolyCoeff};
pub use error::{Error, Result};
pub use monomial::{Monomial, Polynomial};
pub use residue::{
    annihilator, annihilator_with_seed, decompose, decompose_with_seed, duality_check, kills, lemma_bell_check,
    r_p, sep_check, Component, CurrentVector, DecompositionReport, Verdict,
};
pub use vars::VarSet;
