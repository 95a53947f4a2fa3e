//! Difference-algebra toolkit for measuring the strength of systems of
//! algebraic difference equations.
//!
//! The crate is organized around the pipeline that turns a finite-difference
//! scheme into a single numerical polynomial summarizing how many degrees of
//! freedom the scheme leaves in its general solution:
//!
//! - [`numpoly`]: exact numerical polynomials in one variable `t`, stored in
//!   the canonical binomial basis.
//! - [`lattice`]: finite point sets in `N^m` and `Z^m`, their dimension
//!   polynomials `omega` and `phi`, and brute-force counting oracles.
//! - [`diffpoly`]: sparse inversive difference polynomials, orderly rankings,
//!   leaders, initials, transforms, and reducedness predicates.
//! - [`charset`]: characteristic sets of the ideals generated by quasi-linear
//!   difference polynomials, and Ritt-style reduction.
//! - [`schemes`]: symbolic PDEs, discretization rule sets, a catalog of
//!   reaction-diffusion equations, and the strength evaluator that ties the
//!   layers together.
//!
//! The core is `no_std` (with `alloc`); all arithmetic is exact. Every value
//! is immutable after construction and every operation is a pure function, so
//! all types can be shared and sent freely across threads.

#![no_std]

extern crate alloc;

pub mod charset;
pub mod diffpoly;
pub mod lattice;
pub mod numpoly;
pub mod schemes;

pub use charset::{
    leader_exponent_sets, orbit_minimal_charset, reduce_remainder, system_charset,
    CharacteristicSet, CharsetError, ReductionResult,
};
pub use diffpoly::{
    is_autoreduced, is_transform, rank_compare, set_rank_compare, ConstPoly, DiffError, DiffPoly,
    Monomial, Ranking, Shift, Term,
};
pub use lattice::{product_leq, unlhd, LatticeError, LatticeSet, Point, Signature};
pub use numpoly::{NumPoly, NumPolyError, SigmaInvariants};
pub use schemes::{
    catalog, compare_schemes, discretize, strength, PDESpec, PdeTerm, SchemeRules, SchemesError,
    StrengthReport,
};
