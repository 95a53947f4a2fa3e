//! Characteristic sets of the ideals generated by quasi-linear inversive
//! difference polynomials, and Ritt-style reduction against them.
//!
//! For a quasi-linear generator `A`, the characteristic set of the ideal it
//! generates consists of the orbit elements `shift(A)` whose leaders are
//! minimal in the orthant-wise order. There is no a-priori bound on how far
//! out those minimal leaders sit, so [`orbit_minimal_charset`] enumerates
//! shifts up to a radius, re-scans over a stabilization window, and refuses
//! to answer (rather than silently truncating) when the minimal set is still
//! moving. Triangular systems are handled one generator at a time and the
//! union is cross-reduced so the result is genuinely autoreduced.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::diffpoly::{
    is_autoreduced, is_transform, rank_compare, DiffError, DiffPoly, Ranking, Shift, Term,
};
use crate::lattice::{LatticeSet, Signature};

/// Hard cap on reduction steps; exceeding it aborts with diagnostics instead
/// of looping.
pub const DEFAULT_STEP_CAP: u64 = 1_000_000;

/// Default number of extra radii checked when deciding that the minimal
/// leader set has stabilized.
pub const DEFAULT_WINDOW: i64 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CharsetError {
    /// The generator is not linear in its leader.
    NotQuasiLinear,
    /// The minimal leader set changed inside the stabilization window; the
    /// caller must raise the radius.
    Unstable { radius: i64 },
    /// The generators do not form a triangular system, or their combined
    /// orbit sets cannot be autoreduced.
    NotTriangular { reason: String },
    /// The reduction loop exceeded the step cap.
    StepCapExceeded { cap: u64, highest_term: String },
    Diff(DiffError),
}

impl From<DiffError> for CharsetError {
    fn from(e: DiffError) -> Self {
        CharsetError::Diff(e)
    }
}

impl fmt::Display for CharsetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharsetError::NotQuasiLinear => write!(f, "generator is not quasi-linear"),
            CharsetError::Unstable { radius } => write!(
                f,
                "minimal leader set did not stabilize at radius {radius}; raise the radius"
            ),
            CharsetError::NotTriangular { reason } => write!(f, "not a triangular system: {reason}"),
            CharsetError::StepCapExceeded { cap, highest_term } => write!(
                f,
                "reduction exceeded {cap} steps (highest offending term {highest_term})"
            ),
            CharsetError::Diff(e) => write!(f, "{e}"),
        }
    }
}

/// An autoreduced characteristic set with its bookkeeping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacteristicSet {
    dim: usize,
    arity: usize,
    ranking: Ranking,
    elements: Vec<DiffPoly>,
    leaders: Vec<Term>,
    prime_certified: bool,
    search_radius_used: i64,
}

impl CharacteristicSet {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn ranking(&self) -> &Ranking {
        &self.ranking
    }

    /// Elements in increasing rank.
    pub fn elements(&self) -> &[DiffPoly] {
        &self.elements
    }

    /// `leaders()[i]` is the leader of `elements()[i]`.
    pub fn leaders(&self) -> &[Term] {
        &self.leaders
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// True when every generator had the shape `a * leader + lower terms`
    /// with `a` a constant, which certifies that the generated ideal is
    /// prime. When false the strength results are still computed from the
    /// leaders but the primality hypothesis is unverified.
    pub fn prime_certified(&self) -> bool {
        self.prime_certified
    }

    /// The base radius the orbit scan was run at.
    pub fn search_radius_used(&self) -> i64 {
        self.search_radius_used
    }
}

/// Outcome of reducing a polynomial against a characteristic set: the
/// accumulated multiplier `J` (a product of shifted initials, or `1`), the
/// remainder, and the number of elimination steps taken. The defining
/// congruence is `J * input = remainder (mod ideal of the set)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionResult {
    pub multiplier: DiffPoly,
    pub remainder: DiffPoly,
    pub steps: u64,
}

/// Default orbit radius for a set of generators: twice the largest term
/// order in any generator, plus two.
pub fn default_radius(gens: &[DiffPoly]) -> i64 {
    2 * gens.iter().map(DiffPoly::max_support_order).max().unwrap_or(0) + 2
}

/// All shifts of order at most `r`, in lexicographic order of exponents.
fn shifts_up_to(m: usize, r: i64) -> Vec<Shift> {
    fn rec(m: usize, budget: i64, buf: &mut Vec<i64>, out: &mut Vec<Shift>) {
        if buf.len() == m {
            out.push(Shift::new(buf.clone()));
            return;
        }
        for v in -budget..=budget {
            buf.push(v);
            rec(m, budget - v.abs(), buf, out);
            buf.pop();
        }
    }
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(m);
    rec(m, r.max(0), &mut buf, &mut out);
    out
}

/// Leader of `shift(a)` computed directly on the support.
fn shifted_leader(support: &BTreeSet<Term>, shift: &Shift, rk: &Ranking) -> Term {
    let mut best: Option<Term> = None;
    for t in support {
        let cand = t.shifted(shift);
        match &best {
            None => best = Some(cand),
            Some(b) => {
                if rk.cmp_terms(&cand, b) == Ordering::Greater {
                    best = Some(cand);
                }
            }
        }
    }
    best.expect("non-constant polynomial has support")
}

/// Scans the orbit out to `radius` and returns, for every minimal observed
/// leader, the canonical representative shift: orthant-wise minimal among
/// the shifts producing that leader, ties broken by lexicographic order.
fn minimal_leader_reps(
    a: &DiffPoly,
    rk: &Ranking,
    radius: i64,
) -> BTreeMap<Term, Shift> {
    let support = a.support_terms();
    let mut observed: BTreeMap<Term, Vec<Shift>> = BTreeMap::new();
    for g in shifts_up_to(a.dim(), radius) {
        let leader = shifted_leader(&support, &g, rk);
        observed.entry(leader).or_default().push(g);
    }
    let leaders: Vec<Term> = observed.keys().cloned().collect();
    let mut out = BTreeMap::new();
    for u in &leaders {
        let dominated = leaders
            .iter()
            .any(|v| v != u && is_transform(v, u));
        if dominated {
            continue;
        }
        let gammas = &observed[u];
        let rep = gammas
            .iter()
            .filter(|g| !gammas.iter().any(|h| *h != **g && h.unlhd(g)))
            .min()
            .expect("at least one shift per observed leader")
            .clone();
        out.insert(u.clone(), rep);
    }
    out
}

/// Orbit elements with minimal leaders for one quasi-linear generator, after
/// stabilization, plus the primality certificate for this generator.
fn orbit_elements(
    a: &DiffPoly,
    rk: &Ranking,
    radius: i64,
    window: i64,
) -> Result<(Vec<DiffPoly>, bool), CharsetError> {
    if a.is_constant() {
        return Err(CharsetError::Diff(DiffError::ConstantPolynomial));
    }
    if !a.is_quasi_linear(rk)? {
        return Err(CharsetError::NotQuasiLinear);
    }
    let base = minimal_leader_reps(a, rk, radius);
    let mut reps = base.clone();
    for extra in 1..=window.max(0) {
        let wider = minimal_leader_reps(a, rk, radius + extra);
        if !base.keys().eq(wider.keys()) {
            return Err(CharsetError::Unstable { radius });
        }
        reps = wider;
    }
    let elements = reps
        .values()
        .map(|g| a.apply_shift(g))
        .collect::<Result<Vec<_>, _>>()?;
    let (initial, _) = a.initial_and_degree(rk)?;
    Ok((elements, initial.is_constant()))
}

/// Reduces `d` against an explicit list of non-constant divisors.
fn reduce_against(
    d: &DiffPoly,
    divisors: &[DiffPoly],
    rk: &Ranking,
    cap: u64,
) -> Result<ReductionResult, CharsetError> {
    let mut info = Vec::with_capacity(divisors.len());
    for p in divisors {
        let u = p.leader(rk)?;
        let (_, deg) = p.initial_and_degree(rk)?;
        info.push((u, deg));
    }
    let mut rem = d.clone();
    let mut multiplier = DiffPoly::one(d.dim(), d.arity());
    let mut steps = 0u64;
    loop {
        // Ranking-highest offending term; among equal terms the lowest
        // divisor index wins, which keeps the loop deterministic.
        let mut best: Option<(Term, usize)> = None;
        for (mono, _) in rem.monomials() {
            for (t, e) in mono.iter() {
                for (i, (u, deg)) in info.iter().enumerate() {
                    if t.var == u.var && u.shift.unlhd(&t.shift) && e >= *deg {
                        let replace = match &best {
                            None => true,
                            Some((bt, bi)) => match rk.cmp_terms(t, bt) {
                                Ordering::Greater => true,
                                Ordering::Equal => i < *bi,
                                Ordering::Less => false,
                            },
                        };
                        if replace {
                            best = Some((t.clone(), i));
                        }
                    }
                }
            }
        }
        let Some((v, i)) = best else { break };
        steps += 1;
        if steps > cap {
            return Err(CharsetError::StepCapExceeded {
                cap,
                highest_term: format!("{v}"),
            });
        }
        let (u, deg) = &info[i];
        let delta = v.shift.difference(&u.shift);
        let shifted = divisors[i].apply_shift(&delta)?;
        debug_assert_eq!(shifted.leader(rk)?, v);
        let (init_shifted, _) = shifted.initial_and_degree(rk)?;
        // Fold out every monomial carrying v^e with e >= deg in one step.
        let mut quotient = DiffPoly::zero(d.dim(), d.arity());
        for (mono, coeff) in rem.monomials() {
            if mono.degree_of(&v) >= *deg {
                quotient.add_monomial(mono.div_term_power(&v, *deg), coeff.clone());
            }
        }
        rem = init_shifted.mul(&rem).sub(&quotient.mul(&shifted));
        multiplier = multiplier.mul(&init_shifted);
    }
    Ok(ReductionResult {
        multiplier,
        remainder: rem,
        steps,
    })
}

/// Cross-reduces the listed elements until they are pairwise reduced. The
/// leaders (and so the ranks) of the elements are untouched; only lower
/// monomials are rewritten. Used to clean up unions of per-generator orbit
/// sets whose elements mention other generators' indeterminates.
fn autoreduce_elements(
    elements: &mut [DiffPoly],
    rk: &Ranking,
    cap: u64,
) -> Result<(), CharsetError> {
    let max_passes = 2 * elements.len() + 4;
    for _ in 0..max_passes {
        let mut changed = false;
        for i in 0..elements.len() {
            let offended = (0..elements.len())
                .filter(|&j| j != i)
                .try_fold(false, |acc, j| {
                    Ok::<bool, CharsetError>(acc || !elements[i].is_reduced_wrt(&elements[j], rk)?)
                })?;
            if !offended {
                continue;
            }
            let others: Vec<DiffPoly> = elements
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, p)| p.clone())
                .collect();
            let reduced = reduce_against(&elements[i], &others, rk, cap)?;
            if reduced.remainder.is_zero() {
                return Err(CharsetError::NotTriangular {
                    reason: String::from("an orbit element reduced to zero against the others"),
                });
            }
            elements[i] = reduced.remainder.primitive_part();
            changed = true;
        }
        if !changed {
            return Ok(());
        }
    }
    Err(CharsetError::NotTriangular {
        reason: String::from("cross-reduction of the orbit union did not stabilize"),
    })
}

fn finalize(
    mut elements: Vec<DiffPoly>,
    rk: &Ranking,
    radius: i64,
    prime_certified: bool,
    dim: usize,
    arity: usize,
) -> Result<CharacteristicSet, CharsetError> {
    let before: BTreeSet<Term> = elements
        .iter()
        .map(|p| p.leader(rk))
        .collect::<Result<_, _>>()?;
    autoreduce_elements(&mut elements, rk, DEFAULT_STEP_CAP)?;
    elements.sort_by(|x, y| rank_compare(x, y, rk).then_with(|| x.cmp_structural(y)));
    if !is_autoreduced(&elements, rk) {
        return Err(CharsetError::NotTriangular {
            reason: String::from("orbit union is not autoreduced"),
        });
    }
    let leaders = elements
        .iter()
        .map(|p| p.leader(rk))
        .collect::<Result<Vec<_>, _>>()?;
    let after: BTreeSet<Term> = leaders.iter().cloned().collect();
    debug_assert_eq!(before, after);
    Ok(CharacteristicSet {
        dim,
        arity,
        ranking: rk.clone(),
        elements,
        leaders,
        prime_certified,
        search_radius_used: radius,
    })
}

/// Characteristic set of the ideal generated by one quasi-linear polynomial:
/// the orbit elements with orthant-wise minimal leaders, one representative
/// per leader.
///
/// The scan runs at `radius` and is re-run at `radius+1 ..= radius+window`;
/// if the minimal leader set changes, the result is [`CharsetError::Unstable`]
/// and the caller must raise the radius.
pub fn orbit_minimal_charset(
    a: &DiffPoly,
    rk: &Ranking,
    radius: i64,
    window: i64,
) -> Result<CharacteristicSet, CharsetError> {
    let (elements, prime) = orbit_elements(a, rk, radius, window)?;
    finalize(elements, rk, radius, prime, a.dim(), a.arity())
}

/// Characteristic set for a triangular system of quasi-linear generators
/// with pairwise distinct leading indeterminates.
///
/// Each generator's terms in other indeterminates must sit at shifts already
/// present in its leading indeterminate and rank below it, so its orbit
/// leaders never escape the leading indeterminate. The per-generator orbit
/// sets are combined and cross-reduced into a single autoreduced set.
pub fn system_charset(
    gens: &[DiffPoly],
    rk: &Ranking,
    radius: i64,
    window: i64,
) -> Result<CharacteristicSet, CharsetError> {
    let Some(first) = gens.first() else {
        return Err(CharsetError::NotTriangular {
            reason: String::from("empty generator list"),
        });
    };
    let (dim, arity) = (first.dim(), first.arity());
    let mut lead_vars = BTreeSet::new();
    for gen in gens {
        if gen.is_constant() {
            return Err(CharsetError::Diff(DiffError::ConstantPolynomial));
        }
        if !gen.is_quasi_linear(rk)? {
            return Err(CharsetError::NotQuasiLinear);
        }
        let leader = gen.leader(rk)?;
        if !lead_vars.insert(leader.var) {
            return Err(CharsetError::NotTriangular {
                reason: format!("two generators lead in indeterminate y{}", leader.var + 1),
            });
        }
        let lead_shift_set: BTreeSet<Shift> = gen
            .support_terms()
            .iter()
            .filter(|t| t.var == leader.var)
            .map(|t| t.shift.clone())
            .collect();
        for t in gen.support_terms() {
            if t.var == leader.var {
                continue;
            }
            let covered = lead_shift_set.contains(&t.shift)
                && rk.cmp_terms(&Term::new(t.shift.clone(), leader.var), &t)
                    == Ordering::Greater;
            if !covered {
                return Err(CharsetError::NotTriangular {
                    reason: format!(
                        "term {t} of a generator leading in y{} is not dominated by its leading indeterminate",
                        leader.var + 1
                    ),
                });
            }
        }
    }
    let mut elements = Vec::new();
    let mut prime = true;
    for gen in gens {
        let (part, gen_prime) = orbit_elements(gen, rk, radius, window)?;
        elements.extend(part);
        prime &= gen_prime;
    }
    finalize(elements, rk, radius, prime, dim, arity)
}

/// Reduces `d` against the characteristic set with the default step cap.
pub fn reduce_remainder(
    d: &DiffPoly,
    cs: &CharacteristicSet,
) -> Result<ReductionResult, CharsetError> {
    reduce_remainder_with_cap(d, cs, DEFAULT_STEP_CAP)
}

/// Reduces `d` against the characteristic set: repeatedly locates the
/// ranking-highest power of a transform of an element's leader, multiplies
/// through by that element's shifted initial, and subtracts the matching
/// multiple. Returns the multiplier, the fully reduced remainder, and the
/// step count.
pub fn reduce_remainder_with_cap(
    d: &DiffPoly,
    cs: &CharacteristicSet,
    cap: u64,
) -> Result<ReductionResult, CharsetError> {
    if d.dim() != cs.dim || d.arity() != cs.arity {
        return Err(CharsetError::Diff(DiffError::DimMismatch {
            expected: cs.dim,
            found: d.dim(),
        }));
    }
    reduce_against(d, &cs.elements, &cs.ranking, cap)
}

/// The per-indeterminate leader exponent sets `E_i` of the characteristic
/// set, as integer lattice sets (possibly empty).
pub fn leader_exponent_sets(cs: &CharacteristicSet) -> Vec<LatticeSet> {
    (0..cs.arity)
        .map(|var| {
            LatticeSet::new(
                cs.dim,
                Signature::Integer,
                cs.leaders
                    .iter()
                    .filter(|t| t.var == var)
                    .map(|t| t.shift.to_point()),
            )
            .expect("leader shifts share the ambient dimension")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    extern crate std;

    use super::*;
    use crate::diffpoly::ConstPoly;
    use crate::schemes::catalog::{self, Scheme};
    use alloc::vec;

    fn t(exps: &[i64], var: usize) -> Term {
        Term::new(Shift::new(exps.to_vec()), var)
    }

    fn leader_shift_set(cs: &CharacteristicSet, var: usize) -> BTreeSet<Vec<i64>> {
        cs.leaders()
            .iter()
            .filter(|t| t.var == var)
            .map(|t| t.shift.exps().to_vec())
            .collect()
    }

    fn forward_diffusion() -> DiffPoly {
        catalog::difference_system("diffusion", Scheme::Forward)
            .unwrap()
            .polys[0]
            .clone()
    }

    #[test]
    fn forward_diffusion_charset() {
        let a = forward_diffusion();
        let rk = Ranking::standard(2, 1);
        let cs = orbit_minimal_charset(&a, &rk, default_radius(core::slice::from_ref(&a)), DEFAULT_WINDOW)
            .unwrap();
        assert_eq!(cs.len(), 4);
        let expected: BTreeSet<Vec<i64>> =
            [vec![2, 0], vec![-1, 1], vec![1, -1], vec![-2, -1]].into_iter().collect();
        assert_eq!(leader_shift_set(&cs, 0), expected);
        assert!(cs.prime_certified());
        assert!(is_autoreduced(cs.elements(), &rk));
        // The elements are exactly the four shifts of the generator.
        for (element, shift) in cs.elements().iter().zip([
            Shift::new(vec![-1, 0]),
            Shift::new(vec![-1, -1]),
            Shift::new(vec![0, 0]),
            Shift::new(vec![-2, -1]),
        ]) {
            assert_eq!(*element, a.apply_shift(&shift).unwrap());
        }
    }

    #[test]
    fn symmetric_diffusion_charset() {
        let b = catalog::difference_system("diffusion", Scheme::Symmetric)
            .unwrap()
            .polys[0]
            .clone();
        let rk = Ranking::standard(2, 1);
        let cs = orbit_minimal_charset(&b, &rk, default_radius(core::slice::from_ref(&b)), DEFAULT_WINDOW)
            .unwrap();
        assert_eq!(cs.len(), 2);
        let expected: BTreeSet<Vec<i64>> = [vec![1, 0], vec![-2, 0]].into_iter().collect();
        assert_eq!(leader_shift_set(&cs, 0), expected);
    }

    #[test]
    fn crank_nicolson_charset() {
        let c = catalog::difference_system("diffusion", Scheme::CrankNicolson)
            .unwrap()
            .polys[0]
            .clone();
        let rk = Ranking::standard(2, 1);
        let cs = orbit_minimal_charset(&c, &rk, default_radius(core::slice::from_ref(&c)), DEFAULT_WINDOW)
            .unwrap();
        assert_eq!(cs.len(), 4);
        let expected: BTreeSet<Vec<i64>> =
            [vec![1, 1], vec![-2, 1], vec![1, -1], vec![-2, -1]].into_iter().collect();
        assert_eq!(leader_shift_set(&cs, 0), expected);
    }

    #[test]
    fn too_small_radius_is_unstable() {
        let a = forward_diffusion();
        let rk = Ranking::standard(2, 1);
        assert!(matches!(
            orbit_minimal_charset(&a, &rk, 1, 2),
            Err(CharsetError::Unstable { radius: 1 })
        ));
    }

    #[test]
    fn non_quasi_linear_rejected() {
        let rk = Ranking::standard(2, 1);
        let p = DiffPoly::from_rows(
            2,
            1,
            vec![
                (ConstPoly::from_int(1), vec![(t(&[1, 0], 0), 2)]),
                (ConstPoly::from_int(1), vec![(t(&[0, 1], 0), 1)]),
            ],
        );
        assert!(matches!(
            orbit_minimal_charset(&p, &rk, 4, 2),
            Err(CharsetError::NotQuasiLinear)
        ));
        let k = DiffPoly::constant(2, 1, ConstPoly::symbol("a"));
        assert!(matches!(
            orbit_minimal_charset(&k, &rk, 4, 2),
            Err(CharsetError::Diff(DiffError::ConstantPolynomial))
        ));
    }

    #[test]
    fn kinetics_system_charset() {
        let sys = catalog::difference_system("kinetics-system", Scheme::Forward).unwrap();
        let cs = system_charset(&sys.polys, &sys.ranking, default_radius(&sys.polys), 2).unwrap();
        assert_eq!(cs.len(), 12);
        let expected: BTreeSet<Vec<i64>> =
            [vec![2, 0], vec![-1, 1], vec![1, -1], vec![-2, -1]].into_iter().collect();
        for var in 0..3 {
            assert_eq!(leader_shift_set(&cs, var), expected, "y{}", var + 1);
        }
        assert!(cs.prime_certified());
        assert!(is_autoreduced(cs.elements(), &sys.ranking));
    }

    #[test]
    fn single_generator_system_matches_orbit() {
        let a = forward_diffusion();
        let rk = Ranking::standard(2, 1);
        let r = default_radius(core::slice::from_ref(&a));
        let via_orbit = orbit_minimal_charset(&a, &rk, r, 2).unwrap();
        let via_system = system_charset(core::slice::from_ref(&a), &rk, r, 2).unwrap();
        assert_eq!(via_orbit, via_system);
    }

    #[test]
    fn colliding_lead_indeterminates_rejected() {
        let sys = catalog::difference_system("kinetics-system", Scheme::Forward).unwrap();
        let twice = vec![sys.polys[0].clone(), sys.polys[0].clone()];
        assert!(matches!(
            system_charset(&twice, &sys.ranking, 6, 2),
            Err(CharsetError::NotTriangular { .. })
        ));
    }

    #[test]
    fn reduction_examples() {
        let a = forward_diffusion();
        let rk = Ranking::standard(2, 1);
        let cs = orbit_minimal_charset(&a, &rk, default_radius(core::slice::from_ref(&a)), 2).unwrap();

        // Elements of the set reduce to zero against it.
        for element in cs.elements() {
            let res = reduce_remainder(element, &cs).unwrap();
            assert!(res.remainder.is_zero());
        }

        // A deeper orbit element also vanishes.
        let deep = a.apply_shift(&Shift::new(vec![-3, 0])).unwrap();
        let res = reduce_remainder(&deep, &cs).unwrap();
        assert!(res.remainder.is_zero());
        assert!(res.steps > 0);

        // Already-reduced input comes back untouched with multiplier 1.
        let y = DiffPoly::term(2, 1, t(&[0, 0], 0));
        let res = reduce_remainder(&y, &cs).unwrap();
        assert_eq!(res.remainder, y);
        assert_eq!(res.multiplier, DiffPoly::one(2, 1));
        assert_eq!(res.steps, 0);
    }

    #[test]
    fn orbit_coverage_and_soundness() {
        let a = forward_diffusion();
        let rk = Ranking::standard(2, 1);
        let radius = default_radius(core::slice::from_ref(&a));
        let cs = orbit_minimal_charset(&a, &rk, radius, 2).unwrap();
        for g in super::shifts_up_to(2, radius) {
            let shifted = a.apply_shift(&g).unwrap();
            // No orbit element is reduced with respect to the set...
            let reduced_wrt_all = cs
                .elements()
                .iter()
                .all(|e| shifted.is_reduced_wrt(e, &rk).unwrap());
            assert!(!reduced_wrt_all, "shift {g} escaped the characteristic set");
            // ...and every orbit element reduces to zero against it.
            let res = reduce_remainder(&shifted, &cs).unwrap();
            assert!(res.remainder.is_zero(), "shift {g} left a remainder");
        }
    }

    #[test]
    fn determinism() {
        let sys = catalog::difference_system("kinetics-system", Scheme::Forward).unwrap();
        let r = default_radius(&sys.polys);
        let c1 = system_charset(&sys.polys, &sys.ranking, r, 2).unwrap();
        let c2 = system_charset(&sys.polys, &sys.ranking, r, 2).unwrap();
        assert_eq!(c1, c2);
    }

    #[test]
    fn step_cap_is_enforced() {
        let a = forward_diffusion();
        let rk = Ranking::standard(2, 1);
        let cs = orbit_minimal_charset(&a, &rk, default_radius(core::slice::from_ref(&a)), 2).unwrap();
        let deep = a.apply_shift(&Shift::new(vec![-5, -3])).unwrap();
        assert!(matches!(
            reduce_remainder_with_cap(&deep, &cs, 0),
            Err(CharsetError::StepCapExceeded { cap: 0, .. })
        ));
    }

    /// Deterministic splitmix64 for the random generator corpus.
    struct Rng(u64);

    impl Rng {
        fn next(&mut self) -> u64 {
            self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
            let mut z = self.0;
            z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
            z ^ (z >> 31)
        }

        fn range(&mut self, lo: i64, hi: i64) -> i64 {
            lo + (self.next() % (hi - lo + 1) as u64) as i64
        }
    }

    /// Random quasi-linear generators with constant leader coefficients:
    /// every orbit element within the scanned radius must reduce to zero
    /// against the computed characteristic set, and none may be reduced
    /// with respect to it.
    #[test]
    fn random_quasi_linear_orbits_reduce_to_zero() {
        let rk = Ranking::standard(2, 1);
        let mut rng = Rng(0x600D_F00D);
        let mut successes = 0u32;
        let mut attempts = 0u32;
        while successes < 40 && attempts < 400 {
            attempts += 1;
            let mut shifts = BTreeSet::new();
            for _ in 0..rng.range(2, 4) {
                shifts.insert(Shift::new(vec![rng.range(-2, 2), rng.range(-2, 2)]));
            }
            let terms: Vec<Term> = shifts
                .into_iter()
                .map(|s| Term::new(s, 0))
                .collect();
            let Some(u) = rk.max_term(terms.iter()) else {
                continue;
            };
            let mut p = DiffPoly::zero(2, 1);
            for t in &terms {
                let c = ConstPoly::from_int(rng.range(1, 5) * if rng.range(0, 1) == 0 { 1 } else { -1 });
                if *t == u {
                    p.add_monomial(crate::diffpoly::Monomial::from_term(t.clone()), c);
                } else {
                    let coeff = if rng.range(0, 2) == 0 {
                        &c * &ConstPoly::symbol("a")
                    } else {
                        c
                    };
                    // Occasionally a product with the plain indeterminate,
                    // which keeps the polynomial quasi-linear but nonlinear.
                    let powers = if rng.range(0, 2) == 0 && !u.shift.is_identity() {
                        vec![(t.clone(), 1), (Term::new(Shift::identity(2), 0), 1)]
                    } else {
                        vec![(t.clone(), 1)]
                    };
                    p.add_monomial(crate::diffpoly::Monomial::from_powers(powers), coeff);
                }
            }
            if p.is_constant() || !p.is_quasi_linear(&rk).unwrap() {
                continue;
            }
            let radius = default_radius(core::slice::from_ref(&p));
            let cs = match orbit_minimal_charset(&p, &rk, radius, 2) {
                Ok(cs) => cs,
                Err(CharsetError::Unstable { .. }) => {
                    match orbit_minimal_charset(&p, &rk, radius + 3, 2) {
                        Ok(cs) => cs,
                        Err(_) => continue,
                    }
                }
                Err(other) => panic!("unexpected charset failure: {other} for {p:?}"),
            };
            assert!(is_autoreduced(cs.elements(), &rk), "{p:?}");
            for g in shifts_up_to(2, radius.min(4)) {
                let shifted = p.apply_shift(&g).unwrap();
                let fully_reduced = cs
                    .elements()
                    .iter()
                    .all(|e| shifted.is_reduced_wrt(e, &rk).unwrap());
                assert!(!fully_reduced, "{p:?}: shift {g} escaped the set");
                let res = reduce_remainder(&shifted, &cs).unwrap();
                assert!(
                    res.remainder.is_zero(),
                    "{p:?}: shift {g} left remainder {:?}",
                    res.remainder
                );
            }
            successes += 1;
        }
        assert!(successes >= 40, "only {successes} generators stabilized");
    }

    #[test]
    fn leader_exponent_sets_examples() {
        let a = forward_diffusion();
        let rk = Ranking::standard(2, 1);
        let cs = orbit_minimal_charset(&a, &rk, default_radius(core::slice::from_ref(&a)), 2).unwrap();
        let sets = leader_exponent_sets(&cs);
        assert_eq!(sets.len(), 1);
        assert_eq!(sets[0].len(), 4);
        assert_eq!(sets[0].phi().unwrap(), {
            use num_rational::BigRational;
            crate::numpoly::NumPoly::from_monomial_coeffs(&[
                BigRational::from_integer(0.into()),
                BigRational::from_integer(5.into()),
            ])
            .unwrap()
        });

        // The symmetric reaction-diffusion template under the swapped
        // ranking leads in the time translation.
        let sys = catalog::difference_system("burgers", Scheme::Symmetric).unwrap();
        let cs = system_charset(&sys.polys, &sys.ranking, default_radius(&sys.polys), 2).unwrap();
        let sets = leader_exponent_sets(&cs);
        let shifts: BTreeSet<Vec<i64>> = sets[0]
            .points()
            .map(|p| p.coords().to_vec())
            .collect();
        let expected: BTreeSet<Vec<i64>> = [vec![0, 1], vec![0, -2]].into_iter().collect();
        assert_eq!(shifts, expected);
    }
}
