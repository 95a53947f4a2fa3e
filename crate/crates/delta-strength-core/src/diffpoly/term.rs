//! Translated indeterminates and the orderly rankings that compare them.
//!
//! A [`Shift`] is an element of the free commutative group generated by the
//! `m` translations, written additively on exponent vectors. A [`Term`] is a
//! shift applied to one of the `n` indeterminates. Two terms are sign
//! compatible when their shifts share an orthant of `Z^m`; a term `v` is a
//! *transform* of `u` when both use the same indeterminate and `u`'s shift is
//! `unlhd` below `v`'s.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::lattice::{unlhd_raw, Point};

use super::DiffError;

/// A composite translation `s1^k1 ... sm^km`, stored as its exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Shift {
    exps: Vec<i64>,
}

impl Shift {
    pub fn new(exps: Vec<i64>) -> Self {
        Shift { exps }
    }

    /// The identity translation in dimension `m`.
    pub fn identity(m: usize) -> Self {
        Shift {
            exps: alloc::vec![0; m],
        }
    }

    pub fn dim(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[i64] {
        &self.exps
    }

    /// The order `sum_i |k_i|`.
    pub fn order(&self) -> i64 {
        self.exps.iter().map(|k| k.abs()).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.exps.iter().all(|&k| k == 0)
    }

    /// Group law: componentwise addition of exponents.
    pub fn compose(&self, other: &Shift) -> Shift {
        Shift {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn inverse(&self) -> Shift {
        Shift {
            exps: self.exps.iter().map(|k| -k).collect(),
        }
    }

    /// The shift `delta` with `self = delta.compose(base)`.
    pub fn difference(&self, base: &Shift) -> Shift {
        Shift {
            exps: self
                .exps
                .iter()
                .zip(&base.exps)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Whether the two shifts lie in a common orthant (no coordinate with
    /// strictly opposite signs).
    pub fn same_orthant(&self, other: &Shift) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(&a, &b)| a.signum() * b.signum() >= 0)
    }

    /// Orthant-wise order on exponent vectors.
    pub fn unlhd(&self, other: &Shift) -> bool {
        unlhd_raw(&self.exps, &other.exps)
    }

    pub fn to_point(&self) -> Point {
        Point::new(self.exps.clone())
    }
}

impl fmt::Display for Shift {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, &k) in self.exps.iter().enumerate() {
            if k == 0 {
                continue;
            }
            if wrote {
                write!(f, " ")?;
            }
            write!(f, "s{}", i + 1)?;
            if k != 1 {
                write!(f, "^{k}")?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// A term: a shift applied to the indeterminate with index `var` (0-based).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Term {
    pub shift: Shift,
    pub var: usize,
}

impl Term {
    pub fn new(shift: Shift, var: usize) -> Self {
        Term { shift, var }
    }

    pub fn dim(&self) -> usize {
        self.shift.dim()
    }

    pub fn order(&self) -> i64 {
        self.shift.order()
    }

    /// Applies a further shift to the term.
    pub fn shifted(&self, by: &Shift) -> Term {
        Term {
            shift: self.shift.compose(by),
            var: self.var,
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.shift.is_identity() {
            write!(f, "{} ", self.shift)?;
        }
        write!(f, "y{}", self.var + 1)
    }
}

/// `v` is a transform of `u`: same indeterminate, and a shift in the common
/// orthant carries `u` to `v`. Every term is an (improper) transform of
/// itself.
pub fn is_transform(u: &Term, v: &Term) -> bool {
    u.var == v.var && u.shift.unlhd(&v.shift)
}

/// A transform with a non-identity carrying shift.
pub fn is_proper_transform(u: &Term, v: &Term) -> bool {
    u != v && is_transform(u, v)
}

/// An orderly ranking of terms.
///
/// Terms compare by the lexicographic tuple
/// `(order, |k_{p(1)}|, ..., |k_{p(m)}|, k_{p(1)}, ..., k_{p(m)}, var rank)`
/// where `p` is the translation priority permutation. The standard ranking
/// uses the identity priority and the declared indeterminate order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ranking {
    /// Translation indices in decreasing significance.
    priority: Vec<usize>,
    /// `var_rank[i]` is the comparison rank of indeterminate `i`.
    var_rank: Vec<usize>,
}

fn is_permutation(v: &[usize]) -> bool {
    let mut seen = alloc::vec![false; v.len()];
    for &x in v {
        if x >= v.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

impl Ranking {
    /// The standard ranking on `m` translations and `n` indeterminates.
    pub fn standard(m: usize, n: usize) -> Self {
        Ranking {
            priority: (0..m).collect(),
            var_rank: (0..n).collect(),
        }
    }

    /// A ranking with an explicit translation priority (most significant
    /// first) and the standard indeterminate order.
    pub fn with_priority(priority: Vec<usize>, n: usize) -> Result<Self, DiffError> {
        if !is_permutation(&priority) {
            return Err(DiffError::InvalidRanking);
        }
        Ok(Ranking {
            priority,
            var_rank: (0..n).collect(),
        })
    }

    /// A fully explicit ranking; `var_order` lists indeterminate indices from
    /// lowest to highest.
    pub fn new(priority: Vec<usize>, var_order: Vec<usize>) -> Result<Self, DiffError> {
        if !is_permutation(&priority) || !is_permutation(&var_order) {
            return Err(DiffError::InvalidRanking);
        }
        let mut var_rank = alloc::vec![0usize; var_order.len()];
        for (rank, &var) in var_order.iter().enumerate() {
            var_rank[var] = rank;
        }
        Ok(Ranking { priority, var_rank })
    }

    pub fn dim(&self) -> usize {
        self.priority.len()
    }

    pub fn arity(&self) -> usize {
        self.var_rank.len()
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    /// Total order on terms of matching dimension and arity.
    pub fn compare(&self, u: &Term, v: &Term) -> Result<Ordering, DiffError> {
        if u.dim() != self.dim() || v.dim() != self.dim() {
            return Err(DiffError::DimMismatch {
                expected: self.dim(),
                found: if u.dim() != self.dim() { u.dim() } else { v.dim() },
            });
        }
        if u.var >= self.arity() || v.var >= self.arity() {
            return Err(DiffError::ArityMismatch {
                expected: self.arity(),
                found: u.var.max(v.var) + 1,
            });
        }
        Ok(self.cmp_terms(u, v))
    }

    pub(crate) fn cmp_terms(&self, u: &Term, v: &Term) -> Ordering {
        debug_assert_eq!(u.dim(), self.dim());
        debug_assert_eq!(v.dim(), self.dim());
        let ord = u.order().cmp(&v.order());
        if ord != Ordering::Equal {
            return ord;
        }
        let ku = u.shift.exps();
        let kv = v.shift.exps();
        for &i in &self.priority {
            let ord = ku[i].abs().cmp(&kv[i].abs());
            if ord != Ordering::Equal {
                return ord;
            }
        }
        for &i in &self.priority {
            let ord = ku[i].cmp(&kv[i]);
            if ord != Ordering::Equal {
                return ord;
            }
        }
        self.var_rank[u.var].cmp(&self.var_rank[v.var])
    }

    /// The greatest term of a nonempty iterator.
    pub(crate) fn max_term<'a>(&self, terms: impl Iterator<Item = &'a Term>) -> Option<Term> {
        let mut best: Option<&Term> = None;
        for t in terms {
            match best {
                None => best = Some(t),
                Some(b) => {
                    if self.cmp_terms(t, b) == Ordering::Greater {
                        best = Some(t);
                    }
                }
            }
        }
        best.cloned()
    }
}
