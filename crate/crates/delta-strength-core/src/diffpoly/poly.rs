//! Sparse inversive difference polynomials and their ranking-dependent
//! structure: leaders, initials, reducedness, and rank comparisons.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use super::coeff::ConstPoly;
use super::term::{Ranking, Shift, Term};
use super::DiffError;

/// A power product of terms; the empty product is the unit monomial.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Monomial {
    powers: BTreeMap<Term, u32>,
}

impl Monomial {
    pub fn unit() -> Self {
        Monomial::default()
    }

    pub fn from_term(term: Term) -> Self {
        let mut powers = BTreeMap::new();
        powers.insert(term, 1);
        Monomial { powers }
    }

    pub fn from_powers(powers: impl IntoIterator<Item = (Term, u32)>) -> Self {
        let mut out = BTreeMap::new();
        for (t, e) in powers {
            if e > 0 {
                *out.entry(t).or_insert(0) += e;
            }
        }
        Monomial { powers: out }
    }

    pub fn is_unit(&self) -> bool {
        self.powers.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Term, u32)> {
        self.powers.iter().map(|(t, &e)| (t, e))
    }

    pub fn degree_of(&self, term: &Term) -> u32 {
        self.powers.get(term).copied().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.powers.values().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut powers = self.powers.clone();
        for (t, &e) in &other.powers {
            *powers.entry(t.clone()).or_insert(0) += e;
        }
        Monomial { powers }
    }

    /// Divides out `term^exp`; the monomial must contain at least that power.
    pub fn div_term_power(&self, term: &Term, exp: u32) -> Monomial {
        let mut powers = self.powers.clone();
        match powers.get_mut(term) {
            Some(e) if *e >= exp => {
                *e -= exp;
                if *e == 0 {
                    powers.remove(term);
                }
            }
            _ => panic!("monomial does not contain {term}^{exp}"),
        }
        Monomial { powers }
    }

    pub fn apply_shift(&self, by: &Shift) -> Monomial {
        Monomial {
            powers: self
                .powers
                .iter()
                .map(|(t, &e)| (t.shifted(by), e))
                .collect(),
        }
    }

    /// The ranking-greatest term of the monomial, if any.
    pub fn max_term(&self, rk: &Ranking) -> Option<Term> {
        rk.max_term(self.powers.keys())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.powers.is_empty() {
            return write!(f, "1");
        }
        let mut wrote = false;
        for (t, &e) in &self.powers {
            for _ in 0..e {
                if wrote {
                    write!(f, "*")?;
                }
                write!(f, "{t}")?;
                wrote = true;
            }
        }
        Ok(())
    }
}

/// A sparse inversive difference polynomial: a finite sum of monomials in
/// terms with coefficients in the constant field. No zero coefficients are
/// stored; the constant part lives on the unit monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffPoly {
    dim: usize,
    arity: usize,
    monomials: BTreeMap<Monomial, ConstPoly>,
}

impl DiffPoly {
    pub fn zero(dim: usize, arity: usize) -> Self {
        DiffPoly {
            dim,
            arity,
            monomials: BTreeMap::new(),
        }
    }

    pub fn one(dim: usize, arity: usize) -> Self {
        Self::constant(dim, arity, ConstPoly::one())
    }

    pub fn constant(dim: usize, arity: usize, c: ConstPoly) -> Self {
        let mut p = Self::zero(dim, arity);
        p.add_monomial(Monomial::unit(), c);
        p
    }

    pub fn term(dim: usize, arity: usize, t: Term) -> Self {
        let mut p = Self::zero(dim, arity);
        p.add_monomial(Monomial::from_term(t), ConstPoly::one());
        p
    }

    /// Adds `coeff * mono` in place, dropping the entry if it cancels.
    pub fn add_monomial(&mut self, mono: Monomial, coeff: ConstPoly) {
        if coeff.is_zero() {
            return;
        }
        debug_assert!(mono
            .iter()
            .all(|(t, _)| t.dim() == self.dim && t.var < self.arity));
        if let Some(entry) = self.monomials.get_mut(&mono) {
            let sum = &*entry + &coeff;
            if sum.is_zero() {
                self.monomials.remove(&mono);
            } else {
                *entry = sum;
            }
        } else {
            self.monomials.insert(mono, coeff);
        }
    }

    /// Builds a polynomial from `(coefficient, [(term, exponent)])` rows; a
    /// convenience for fixed equations.
    pub fn from_rows(
        dim: usize,
        arity: usize,
        rows: impl IntoIterator<Item = (ConstPoly, Vec<(Term, u32)>)>,
    ) -> Self {
        let mut p = Self::zero(dim, arity);
        for (coeff, powers) in rows {
            p.add_monomial(Monomial::from_powers(powers), coeff);
        }
        p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    /// Whether the polynomial lies in the constant field (no terms at all).
    pub fn is_constant(&self) -> bool {
        self.monomials.keys().all(Monomial::is_unit)
    }

    pub fn num_monomials(&self) -> usize {
        self.monomials.len()
    }

    pub fn monomials(&self) -> impl Iterator<Item = (&Monomial, &ConstPoly)> {
        self.monomials.iter()
    }

    pub fn coeff_of(&self, mono: &Monomial) -> ConstPoly {
        self.monomials.get(mono).cloned().unwrap_or_else(ConstPoly::zero)
    }

    /// All terms occurring in any monomial.
    pub fn support_terms(&self) -> BTreeSet<Term> {
        let mut out = BTreeSet::new();
        for mono in self.monomials.keys() {
            for (t, _) in mono.iter() {
                out.insert(t.clone());
            }
        }
        out
    }

    /// The largest term order in the support; `0` for constants.
    pub fn max_support_order(&self) -> i64 {
        self.support_terms()
            .iter()
            .map(Term::order)
            .max()
            .unwrap_or(0)
    }

    pub fn add(&self, other: &DiffPoly) -> DiffPoly {
        debug_assert_eq!((self.dim, self.arity), (other.dim, other.arity));
        let mut out = self.clone();
        for (mono, coeff) in &other.monomials {
            out.add_monomial(mono.clone(), coeff.clone());
        }
        out
    }

    pub fn sub(&self, other: &DiffPoly) -> DiffPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> DiffPoly {
        DiffPoly {
            dim: self.dim,
            arity: self.arity,
            monomials: self
                .monomials
                .iter()
                .map(|(m, c)| (m.clone(), -c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &DiffPoly) -> DiffPoly {
        debug_assert_eq!((self.dim, self.arity), (other.dim, other.arity));
        let mut out = Self::zero(self.dim, self.arity);
        for (ma, ca) in &self.monomials {
            for (mb, cb) in &other.monomials {
                out.add_monomial(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale_const(&self, c: &ConstPoly) -> DiffPoly {
        if c.is_zero() {
            return Self::zero(self.dim, self.arity);
        }
        let mut out = Self::zero(self.dim, self.arity);
        for (m, coeff) in &self.monomials {
            out.add_monomial(m.clone(), coeff * c);
        }
        out
    }

    pub fn scale_rational(&self, r: &BigRational) -> DiffPoly {
        self.scale_const(&ConstPoly::from_rational(r.clone()))
    }

    /// Applies a translation to the whole polynomial: every term's shift is
    /// composed with `by`; coefficients are constants and stay fixed.
    pub fn apply_shift(&self, by: &Shift) -> Result<DiffPoly, DiffError> {
        if by.dim() != self.dim {
            return Err(DiffError::DimMismatch {
                expected: self.dim,
                found: by.dim(),
            });
        }
        Ok(DiffPoly {
            dim: self.dim,
            arity: self.arity,
            monomials: self
                .monomials
                .iter()
                .map(|(m, c)| (m.apply_shift(by), c.clone()))
                .collect(),
        })
    }

    pub fn rename_symbols(&self, map: &BTreeMap<String, String>) -> DiffPoly {
        let mut out = Self::zero(self.dim, self.arity);
        for (m, c) in &self.monomials {
            out.add_monomial(m.clone(), c.rename_symbols(map));
        }
        out
    }

    /// The ranking-greatest term occurring in the polynomial.
    pub fn leader(&self, rk: &Ranking) -> Result<Term, DiffError> {
        let support = self.support_terms();
        rk.max_term(support.iter())
            .ok_or(DiffError::ConstantPolynomial)
    }

    /// Writes the polynomial as `I_d u^d + ... + I_0` in its leader `u` and
    /// returns the initial `I_d` together with `d`.
    pub fn initial_and_degree(&self, rk: &Ranking) -> Result<(DiffPoly, u32), DiffError> {
        let u = self.leader(rk)?;
        let d = self
            .monomials
            .keys()
            .map(|m| m.degree_of(&u))
            .max()
            .unwrap_or(0);
        let mut initial = Self::zero(self.dim, self.arity);
        for (m, c) in &self.monomials {
            if m.degree_of(&u) == d {
                initial.add_monomial(m.div_term_power(&u, d), c.clone());
            }
        }
        Ok((initial, d))
    }

    /// Whether the polynomial has degree one in its leader.
    pub fn is_quasi_linear(&self, rk: &Ranking) -> Result<bool, DiffError> {
        Ok(self.initial_and_degree(rk)?.1 == 1)
    }

    /// Divides out the rational content: after this, the coefficient
    /// numerators are coprime integers. Multiplying by a nonzero rational is
    /// a unit of the coefficient field, so this changes nothing structural.
    pub fn primitive_part(&self) -> DiffPoly {
        use num_bigint::BigInt;
        use num_traits::One;
        let mut denom_lcm = BigInt::one();
        let mut numer_gcd = BigInt::zero();
        for coeff in self.monomials.values() {
            coeff.fold_content(&mut denom_lcm, &mut numer_gcd);
        }
        if numer_gcd.is_zero() {
            return self.clone();
        }
        self.scale_rational(&BigRational::new(denom_lcm, numer_gcd))
    }

    /// Structural (ranking-free) total order, used only as a deterministic
    /// tie-break when sorting rank-equal elements.
    pub fn cmp_structural(&self, other: &DiffPoly) -> Ordering {
        self.monomials
            .iter()
            .collect::<Vec<_>>()
            .cmp(&other.monomials.iter().collect::<Vec<_>>())
    }

    /// Whether `self` contains no power of a transform of `other`'s leader
    /// with exponent at least `other`'s leader degree.
    pub fn is_reduced_wrt(&self, other: &DiffPoly, rk: &Ranking) -> Result<bool, DiffError> {
        let u = other.leader(rk)?;
        let (_, d) = other.initial_and_degree(rk)?;
        for mono in self.monomials.keys() {
            for (t, e) in mono.iter() {
                if t.var == u.var && u.shift.unlhd(&t.shift) && e >= d {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Whether the set is autoreduced: empty, or free of constants and pairwise
/// reduced. Distinct members of an autoreduced set always have distinct
/// leaders.
pub fn is_autoreduced(polys: &[DiffPoly], rk: &Ranking) -> bool {
    if polys.is_empty() {
        return true;
    }
    if polys.iter().any(DiffPoly::is_constant) {
        return false;
    }
    for (i, p) in polys.iter().enumerate() {
        for (j, q) in polys.iter().enumerate() {
            if i != j && !p.is_reduced_wrt(q, rk).unwrap_or(false) {
                return false;
            }
        }
    }
    true
}

/// Rank order on difference polynomials: constants rank below everything
/// else, then leaders compare, then leader degrees.
pub fn rank_compare(a: &DiffPoly, b: &DiffPoly, rk: &Ranking) -> Ordering {
    match (a.is_constant(), b.is_constant()) {
        (true, true) => Ordering::Equal,
        (true, false) => Ordering::Less,
        (false, true) => Ordering::Greater,
        (false, false) => {
            let ua = a.leader(rk).expect("non-constant");
            let ub = b.leader(rk).expect("non-constant");
            let ord = rk.cmp_terms(&ua, &ub);
            if ord != Ordering::Equal {
                return ord;
            }
            let (_, da) = a.initial_and_degree(rk).expect("non-constant");
            let (_, db) = b.initial_and_degree(rk).expect("non-constant");
            da.cmp(&db)
        }
    }
}

/// Rank order on autoreduced sets: compare element ranks position by
/// position (lowest first); if one list is a rank-prefix of the other, the
/// longer set has the lower rank.
pub fn set_rank_compare(
    a: &[DiffPoly],
    b: &[DiffPoly],
    rk: &Ranking,
) -> Result<Ordering, DiffError> {
    if !is_autoreduced(a, rk) || !is_autoreduced(b, rk) {
        return Err(DiffError::NotAutoreduced);
    }
    let sorted = |set: &[DiffPoly]| -> Vec<DiffPoly> {
        let mut v = set.to_vec();
        v.sort_by(|x, y| rank_compare(x, y, rk));
        v
    };
    let sa = sorted(a);
    let sb = sorted(b);
    for (x, y) in sa.iter().zip(sb.iter()) {
        let ord = rank_compare(x, y, rk);
        if ord != Ordering::Equal {
            return Ok(ord);
        }
    }
    // All compared ranks equal: the longer set ranks lower.
    Ok(sb.len().cmp(&sa.len()))
}

impl fmt::Display for DiffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomials.is_empty() {
            return write!(f, "0");
        }
        for (k, (mono, coeff)) in self.monomials.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if mono.is_unit() {
                write!(f, "({coeff})")?;
            } else if coeff.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "({coeff})*{mono}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn t(exps: &[i64], var: usize) -> Term {
        Term::new(Shift::new(exps.to_vec()), var)
    }

    fn sym(name: &str) -> ConstPoly {
        ConstPoly::symbol(name)
    }

    fn int(n: i64) -> ConstPoly {
        ConstPoly::from_int(n)
    }

    /// The forward-scheme diffusion polynomial
    /// `a s1^2 y - 2a s1 y - s2 y + (a+1) y`.
    pub(crate) fn diffusion_forward() -> DiffPoly {
        DiffPoly::from_rows(
            2,
            1,
            vec![
                (sym("a"), vec![(t(&[2, 0], 0), 1)]),
                (&int(-2) * &sym("a"), vec![(t(&[1, 0], 0), 1)]),
                (int(-1), vec![(t(&[0, 1], 0), 1)]),
                (&sym("a") + &int(1), vec![(t(&[0, 0], 0), 1)]),
            ],
        )
    }

    /// The symmetric-scheme reaction-diffusion polynomial
    /// `(ay+b+1) s1 y + (1-ay-b) s1^-1 y + c s2 y - c s2^-1 y + F(y)` with
    /// `F = 0`.
    pub(crate) fn symmetric_reaction() -> DiffPoly {
        DiffPoly::from_rows(
            2,
            1,
            vec![
                (sym("a"), vec![(t(&[0, 0], 0), 1), (t(&[1, 0], 0), 1)]),
                (&sym("b") + &int(1), vec![(t(&[1, 0], 0), 1)]),
                (&int(0) - &sym("a"), vec![(t(&[0, 0], 0), 1), (t(&[-1, 0], 0), 1)]),
                (&int(1) - &sym("b"), vec![(t(&[-1, 0], 0), 1)]),
                (sym("c"), vec![(t(&[0, 1], 0), 1)]),
                (&int(0) - &sym("c"), vec![(t(&[0, -1], 0), 1)]),
            ],
        )
    }

    #[test]
    fn apply_shift_examples() {
        let a = diffusion_forward();
        let rk = Ranking::standard(2, 1);
        let a2 = a.apply_shift(&Shift::new(vec![-1, 0])).unwrap();
        assert_eq!(a2.leader(&rk).unwrap(), t(&[-1, 1], 0));
        // The shifted polynomial in full:
        // -s1^-1 s2 y + a s1 y + (a+1) s1^-1 y - 2a y.
        let expected = DiffPoly::from_rows(
            2,
            1,
            vec![
                (int(-1), vec![(t(&[-1, 1], 0), 1)]),
                (sym("a"), vec![(t(&[1, 0], 0), 1)]),
                (&sym("a") + &int(1), vec![(t(&[-1, 0], 0), 1)]),
                (&int(-2) * &sym("a"), vec![(t(&[0, 0], 0), 1)]),
            ],
        );
        assert_eq!(a2, expected);
        // Identity shift changes nothing; composing with the inverse undoes.
        assert_eq!(a.apply_shift(&Shift::identity(2)).unwrap(), a);
        let back = a2.apply_shift(&Shift::new(vec![1, 0])).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn leader_commutes_with_sign_compatible_shifts() {
        let a = diffusion_forward();
        let rk = Ranking::standard(2, 1);
        let u = a.leader(&rk).unwrap();
        // Shifts sharing the leader's orthant move the leader along; others
        // still yield a leader that occurs in the shifted support.
        for exps in [[1i64, 0], [2, 1], [0, 2], [-1, 0], [-2, -1], [1, -3]] {
            let g = Shift::new(exps.to_vec());
            let shifted = a.apply_shift(&g).unwrap();
            let lead = shifted.leader(&rk).unwrap();
            assert!(shifted.support_terms().contains(&lead));
            if g.same_orthant(&u.shift) {
                assert_eq!(lead, u.shifted(&g), "shift {g}");
            }
        }
    }

    #[test]
    fn leader_examples() {
        let rk = Ranking::standard(2, 1);
        let a = diffusion_forward();
        assert_eq!(a.leader(&rk).unwrap(), t(&[2, 0], 0));

        let rk21 = Ranking::with_priority(vec![1, 0], 1).unwrap();
        let b = symmetric_reaction();
        assert_eq!(b.leader(&rk21).unwrap(), t(&[0, 1], 0));

        let c = DiffPoly::constant(2, 1, sym("a"));
        assert!(matches!(c.leader(&rk), Err(DiffError::ConstantPolynomial)));
    }

    #[test]
    fn initial_and_degree_examples() {
        let rk = Ranking::standard(2, 1);
        let a = diffusion_forward();
        let (init, d) = a.initial_and_degree(&rk).unwrap();
        assert_eq!(init, DiffPoly::constant(2, 1, sym("a")));
        assert_eq!(d, 1);

        let rk21 = Ranking::with_priority(vec![1, 0], 1).unwrap();
        let b = symmetric_reaction();
        let (init, d) = b.initial_and_degree(&rk21).unwrap();
        assert_eq!(init, DiffPoly::constant(2, 1, sym("c")));
        assert_eq!(d, 1);

        // (s1 y)^2 + y has initial 1 and degree 2.
        let p = DiffPoly::from_rows(
            2,
            1,
            vec![
                (int(1), vec![(t(&[1, 0], 0), 2)]),
                (int(1), vec![(t(&[0, 0], 0), 1)]),
            ],
        );
        let (init, d) = p.initial_and_degree(&rk).unwrap();
        assert_eq!(init, DiffPoly::one(2, 1));
        assert_eq!(d, 2);
    }

    #[test]
    fn quasi_linear_examples() {
        let rk = Ranking::standard(2, 1);
        let rk21 = Ranking::with_priority(vec![1, 0], 1).unwrap();
        assert!(diffusion_forward().is_quasi_linear(&rk).unwrap());
        assert!(symmetric_reaction().is_quasi_linear(&rk21).unwrap());

        // (s1 y)^2 + s2 y has leader s1 y of degree 2.
        let p = DiffPoly::from_rows(
            2,
            1,
            vec![
                (int(1), vec![(t(&[1, 0], 0), 2)]),
                (int(1), vec![(t(&[0, 1], 0), 1)]),
            ],
        );
        assert_eq!(p.leader(&rk).unwrap(), t(&[1, 0], 0));
        assert!(!p.is_quasi_linear(&rk).unwrap());
    }

    #[test]
    fn reducedness_examples() {
        let rk = Ranking::standard(2, 1);
        let a = diffusion_forward();
        let y = DiffPoly::term(2, 1, t(&[0, 0], 0));
        assert!(y.is_reduced_wrt(&a, &rk).unwrap());

        let s1cubed = DiffPoly::term(2, 1, t(&[3, 0], 0));
        assert!(!s1cubed.is_reduced_wrt(&a, &rk).unwrap());

        let s1inv = DiffPoly::term(2, 1, t(&[-1, 0], 0));
        assert!(s1inv.is_reduced_wrt(&a, &rk).unwrap());

        let k = DiffPoly::constant(2, 1, int(5));
        assert!(matches!(
            y.is_reduced_wrt(&k, &rk),
            Err(DiffError::ConstantPolynomial)
        ));
    }

    #[test]
    fn autoreduced_examples() {
        let rk = Ranking::standard(2, 1);
        let a = diffusion_forward();
        let charset: Vec<DiffPoly> = [
            Shift::identity(2),
            Shift::new(vec![-1, 0]),
            Shift::new(vec![-1, -1]),
            Shift::new(vec![-2, -1]),
        ]
        .iter()
        .map(|g| a.apply_shift(g).unwrap())
        .collect();
        assert!(is_autoreduced(&charset, &rk));
        // Leaders of an autoreduced set are pairwise distinct.
        let leaders: BTreeSet<Term> = charset.iter().map(|p| p.leader(&rk).unwrap()).collect();
        assert_eq!(leaders.len(), charset.len());

        let pair = vec![a.clone(), a.apply_shift(&Shift::new(vec![1, 0])).unwrap()];
        assert!(!is_autoreduced(&pair, &rk));

        assert!(is_autoreduced(&[], &rk));
        assert!(!is_autoreduced(&[DiffPoly::one(2, 1)], &rk));
    }

    #[test]
    fn rank_compare_examples() {
        let rk = Ranking::standard(2, 1);
        // y + 1 vs s1 y.
        let p = DiffPoly::from_rows(
            2,
            1,
            vec![
                (int(1), vec![(t(&[0, 0], 0), 1)]),
                (int(1), vec![]),
            ],
        );
        let q = DiffPoly::term(2, 1, t(&[1, 0], 0));
        assert_eq!(rank_compare(&p, &q, &rk), Ordering::Less);

        // Distinct polynomials can share a rank.
        let q2 = DiffPoly::from_rows(
            2,
            1,
            vec![
                (int(2), vec![(t(&[1, 0], 0), 1)]),
                (int(1), vec![(t(&[0, 0], 0), 1)]),
            ],
        );
        assert_eq!(rank_compare(&q, &q2, &rk), Ordering::Equal);
        assert_ne!(q, q2);

        let c = DiffPoly::constant(2, 1, int(5));
        let y = DiffPoly::term(2, 1, t(&[0, 0], 0));
        assert_eq!(rank_compare(&c, &y, &rk), Ordering::Less);
    }

    #[test]
    fn set_rank_compare_examples() {
        let rk = Ranking::standard(2, 1);
        let a = diffusion_forward();
        let shifted = a.apply_shift(&Shift::new(vec![1, 0])).unwrap();
        assert_eq!(
            set_rank_compare(core::slice::from_ref(&a), &[shifted], &rk).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            set_rank_compare(core::slice::from_ref(&a), core::slice::from_ref(&a), &rk).unwrap(),
            Ordering::Equal
        );

        let a2 = a.apply_shift(&Shift::new(vec![-1, 0])).unwrap();
        assert_eq!(
            set_rank_compare(&[a.clone(), a2], core::slice::from_ref(&a), &rk).unwrap(),
            Ordering::Less
        );

        let not_auto = vec![a.clone(), a.apply_shift(&Shift::new(vec![1, 0])).unwrap()];
        assert!(matches!(
            set_rank_compare(&not_auto, &[a], &rk),
            Err(DiffError::NotAutoreduced)
        ));
    }

    #[test]
    fn multiplication_expands() {
        let y = DiffPoly::term(2, 1, t(&[0, 0], 0));
        let s1y = DiffPoly::term(2, 1, t(&[1, 0], 0));
        let sum = y.add(&s1y);
        let sq = sum.mul(&sum);
        // (y + s1 y)^2 = y^2 + 2 y s1y + (s1 y)^2
        assert_eq!(sq.num_monomials(), 3);
        let cross = Monomial::from_powers(vec![(t(&[0, 0], 0), 1), (t(&[1, 0], 0), 1)]);
        assert_eq!(sq.coeff_of(&cross), int(2));
    }
}
