//! The ring of inversive difference polynomials.
//!
//! Polynomials live in `K{y_1, ..., y_n}*`: the indeterminates are acted on
//! by `m` commuting invertible translations, so the monomial alphabet is the
//! set of *terms* `shift y_i`. Coefficients are exact polynomials in declared
//! constant symbols (see [`ConstPoly`]); rankings ([`Ranking`]) order terms
//! and induce leaders, initials, and all reducedness bookkeeping.

mod coeff;
mod poly;
mod term;

use core::fmt;

pub use coeff::{ConstPoly, SymMono};
pub use poly::{is_autoreduced, rank_compare, set_rank_compare, DiffPoly, Monomial};
pub use term::{is_proper_transform, is_transform, Ranking, Shift, Term};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiffError {
    DimMismatch { expected: usize, found: usize },
    ArityMismatch { expected: usize, found: usize },
    /// The operation needs at least one term, but the polynomial lies in the
    /// constant field.
    ConstantPolynomial,
    /// A set passed where an autoreduced one is required is not autoreduced.
    NotAutoreduced,
    /// A ranking was built from lists that are not permutations.
    InvalidRanking,
}

impl fmt::Display for DiffError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiffError::DimMismatch { expected, found } => {
                write!(f, "translation dimension mismatch: expected {expected}, found {found}")
            }
            DiffError::ArityMismatch { expected, found } => {
                write!(f, "indeterminate arity mismatch: expected {expected}, found {found}")
            }
            DiffError::ConstantPolynomial => {
                write!(f, "polynomial lies in the constant field and has no leader")
            }
            DiffError::NotAutoreduced => write!(f, "set is not autoreduced"),
            DiffError::InvalidRanking => write!(f, "ranking lists must be permutations"),
        }
    }
}
