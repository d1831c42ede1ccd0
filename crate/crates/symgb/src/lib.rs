//! Symmetric Groebner bases for permutation-stable ideals of `K[x1, x2, ...]`.
//!
//! The variables carry the order `x1 < x2 < ...` and monomials are compared
//! lexicographically *from the highest index down*, so `x2 > x1^3`.  All
//! computation is exact, over arbitrary-precision rationals or a prime field.

pub mod engine;
pub mod error;
pub mod monomial;
pub mod oracle;
pub mod orbit;
pub mod perm;
pub mod poly;
pub mod reduce;
pub mod scalar;
pub mod symorder;
pub mod text;

pub use engine::{
    interreduce_minimize, is_member, monomial_orbit_gb, symmetric_gb, truncated_gb, BasisSet,
    GbConfig, GbReport, Minimality,
};
pub use error::Error;
pub use monomial::Monomial;
pub use oracle::{classical_gb, classical_membership, TruncatedIdeal};
pub use perm::Permutation;
pub use poly::{Polynomial, Term};
pub use reduce::{certificate_check, reduce_by_orbit, reduce_full, sg_step, Certificate, Summand};
pub use scalar::{FieldKind, Scalar};
pub use symorder::{
    brute_force_sym_compare, sym_compare, upward_shift_between, validate_witness, ShiftRelation,
    Witness,
};

pub type Result<T> = std::result::Result<T, Error>;
