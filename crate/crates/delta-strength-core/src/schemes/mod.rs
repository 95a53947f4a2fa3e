//! Symbolic PDE specifications, discretization rule sets, and the strength
//! evaluator for difference schemes.
//!
//! A [`PDESpec`] is a sum-of-products form of one or more PDEs in unknowns
//! `u_k`; a [`SchemeRules`] table maps each derivative to a Laurent
//! difference operator. [`discretize`] substitutes the operators, expands,
//! and normalizes, producing one difference polynomial per equation.
//! [`strength`] then runs the characteristic-set pipeline and sums the
//! dimension polynomials of the per-indeterminate leader exponent sets: the
//! smaller the resulting polynomial, the fewer free parameters the scheme
//! leaves in its general solution, i.e. the stronger the scheme.

pub mod catalog;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::charset::{leader_exponent_sets, system_charset, CharsetError};
use crate::diffpoly::{ConstPoly, DiffError, DiffPoly, Monomial, Ranking, Shift, Term};
use crate::lattice::LatticeError;
use crate::numpoly::{NumPoly, NumPolyError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SchemesError {
    /// The PDE uses a derivative the rule set does not cover.
    MissingRule { dx: u32, dt: u32 },
    /// No catalog entry under that name/scheme combination.
    UnknownEntry { name: String },
    Charset(CharsetError),
    Lattice(LatticeError),
    NumPoly(NumPolyError),
    Diff(DiffError),
}

impl From<CharsetError> for SchemesError {
    fn from(e: CharsetError) -> Self {
        SchemesError::Charset(e)
    }
}

impl From<LatticeError> for SchemesError {
    fn from(e: LatticeError) -> Self {
        SchemesError::Lattice(e)
    }
}

impl From<NumPolyError> for SchemesError {
    fn from(e: NumPolyError) -> Self {
        SchemesError::NumPoly(e)
    }
}

impl From<DiffError> for SchemesError {
    fn from(e: DiffError) -> Self {
        SchemesError::Diff(e)
    }
}

impl fmt::Display for SchemesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SchemesError::MissingRule { dx, dt } => {
                write!(f, "no discretization rule for derivative d^{dx}/dx d^{dt}/dt")
            }
            SchemesError::UnknownEntry { name } => write!(f, "unknown catalog entry: {name}"),
            SchemesError::Charset(e) => write!(f, "{e}"),
            SchemesError::Lattice(e) => write!(f, "{e}"),
            SchemesError::NumPoly(e) => write!(f, "{e}"),
            SchemesError::Diff(e) => write!(f, "{e}"),
        }
    }
}

/// One product term of a PDE: a constant coefficient times a product of
/// derivative factors `(unknown index, (d/dx order, d/dt order))`; `(0, 0)`
/// is the undifferentiated unknown.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PdeTerm {
    pub coeff: ConstPoly,
    pub factors: Vec<(usize, (u32, u32))>,
}

/// A PDE system in sum-of-products form, one term list per equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PDESpec {
    pub unknowns: Vec<String>,
    pub equations: Vec<Vec<PdeTerm>>,
}

/// A discretization rule set: each derivative maps to a finite Laurent
/// operator in the translations, given as `(shift, rational coefficient)`
/// pairs. The undifferentiated unknown needs no rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemeRules {
    pub name: String,
    dim: usize,
    rules: BTreeMap<(u32, u32), Vec<(Shift, BigRational)>>,
}

impl SchemeRules {
    pub fn new(
        name: String,
        dim: usize,
        rules: BTreeMap<(u32, u32), Vec<(Shift, BigRational)>>,
    ) -> Self {
        SchemeRules { name, dim, rules }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rule(&self, d: (u32, u32)) -> Option<&[(Shift, BigRational)]> {
        self.rules.get(&d).map(Vec::as_slice)
    }
}

/// Normalizes a generated equation: clears rational denominators, divides by
/// the integer content, and flips the overall sign so the ranking-maximal
/// term carries a positively-led coefficient.
fn normalize(p: DiffPoly, rk: &Ranking) -> DiffPoly {
    let p = p.primitive_part();
    let Ok(u) = p.leader(rk) else { return p };
    let lead_mono = Monomial::from_term(u.clone());
    let reference = if !p.coeff_of(&lead_mono).is_zero() {
        p.coeff_of(&lead_mono)
    } else {
        // Largest monomial containing the leader.
        p.monomials()
            .filter(|(m, _)| m.degree_of(&u) > 0)
            .last()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(ConstPoly::one)
    };
    if reference.normalizing_rational().is_negative() {
        p.neg()
    } else {
        p
    }
}

/// Replaces every derivative factor by its rule applied to the matching
/// indeterminate, expands the products, collects like monomials, and
/// normalizes. Returns one difference polynomial per equation.
pub fn discretize(pde: &PDESpec, rules: &SchemeRules) -> Result<Vec<DiffPoly>, SchemesError> {
    let dim = rules.dim();
    let arity = pde.unknowns.len();
    let rk = Ranking::standard(dim, arity);
    let mut out = Vec::with_capacity(pde.equations.len());
    for equation in &pde.equations {
        let mut acc = DiffPoly::zero(dim, arity);
        for term in equation {
            let mut prod = DiffPoly::constant(dim, arity, term.coeff.clone());
            for &(k, d) in &term.factors {
                let factor = if d == (0, 0) {
                    DiffPoly::term(dim, arity, Term::new(Shift::identity(dim), k))
                } else {
                    let op = rules
                        .rule(d)
                        .ok_or(SchemesError::MissingRule { dx: d.0, dt: d.1 })?;
                    let mut f = DiffPoly::zero(dim, arity);
                    for (shift, c) in op {
                        f.add_monomial(
                            Monomial::from_term(Term::new(shift.clone(), k)),
                            ConstPoly::from_rational(c.clone()),
                        );
                    }
                    f
                };
                prod = prod.mul(&factor);
            }
            acc = acc.add(&prod);
        }
        out.push(normalize(acc, &rk));
    }
    Ok(out)
}

/// The strength evaluation of one difference system under one scheme label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrengthReport {
    pub scheme: String,
    pub system: Vec<DiffPoly>,
    pub leaders: Vec<Term>,
    pub psi: NumPoly,
    pub sigma_trdeg: BigInt,
    pub prime_certified: bool,
    pub dim: usize,
    pub arity: usize,
}

/// Sums the dimension polynomials of the leader exponent sets grouped per
/// indeterminate. Indeterminates with no leader contribute the nonzero
/// dimension polynomial of the empty set.
pub fn psi_from_leaders(
    dim: usize,
    arity: usize,
    leaders: &[Term],
) -> Result<NumPoly, SchemesError> {
    let mut psi = NumPoly::zero();
    for var in 0..arity {
        let set = crate::lattice::LatticeSet::new(
            dim,
            crate::lattice::Signature::Integer,
            leaders
                .iter()
                .filter(|t| t.var == var)
                .map(|t| t.shift.to_point()),
        )?;
        psi = &psi + &set.phi()?;
    }
    Ok(psi)
}

/// Full pipeline for one system: characteristic set, leader exponent sets,
/// dimension polynomial sum, and the sigma invariants.
pub fn strength(
    scheme: &str,
    system: &[DiffPoly],
    rk: &Ranking,
    radius: i64,
    window: i64,
) -> Result<StrengthReport, SchemesError> {
    let cs = system_charset(system, rk, radius, window)?;
    let sets = leader_exponent_sets(&cs);
    let mut psi = NumPoly::zero();
    for set in &sets {
        psi = &psi + &set.phi()?;
    }
    let invariants = psi.sigma_invariants(cs.dim() as u32)?;
    Ok(StrengthReport {
        scheme: String::from(scheme),
        system: system.to_vec(),
        leaders: cs.leaders().to_vec(),
        psi,
        sigma_trdeg: invariants.sigma_trdeg,
        prime_certified: cs.prime_certified(),
        dim: cs.dim(),
        arity: cs.arity(),
    })
}

/// Ranks reports by eventual comparison of their strength polynomials,
/// smallest (strongest) first; reports with equal polynomials share a group,
/// keeping their input order.
pub fn compare_schemes(reports: Vec<StrengthReport>) -> Vec<Vec<StrengthReport>> {
    let mut sorted = reports;
    sorted.sort_by(|a, b| a.psi.eventual_compare(&b.psi));
    let mut groups: Vec<Vec<StrengthReport>> = Vec::new();
    for report in sorted {
        match groups.last_mut() {
            Some(group)
                if group[0].psi.eventual_compare(&report.psi) == core::cmp::Ordering::Equal =>
            {
                group.push(report)
            }
            _ => groups.push(alloc::vec![report]),
        }
    }
    groups
}
