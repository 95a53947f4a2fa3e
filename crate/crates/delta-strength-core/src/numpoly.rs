//! Exact arithmetic for numerical polynomials in one variable `t`.
//!
//! A polynomial `f` in `Q[t]` is *numerical* when `f(r)` is an integer for
//! every sufficiently large integer `r`. Each such polynomial has a unique
//! expansion `f(t) = sum_{i=0}^{d} a_i * C(t+i, i)` with integer `a_i`, where
//! `C(t+i, i)` denotes the binomial polynomial `(t+1)(t+2)...(t+i) / i!`.
//! [`NumPoly`] stores that coefficient sequence, which keeps addition,
//! subtraction, integer scaling, and evaluation entirely in `BigInt`
//! arithmetic. Conversion to and from the ordinary monomial basis is exact
//! and is where non-numerical input is detected.

use alloc::{vec, vec::Vec};
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Error raised when an exact conversion fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NumPolyError {
    /// The monomial-form input is not integer-valued at large integers: the
    /// binomial-basis coefficient at `index` came out as the non-integer
    /// `value`.
    NotNumerical { index: usize, value: BigRational },
    /// The polynomial cannot arise as a dimension polynomial for `m`
    /// translations: its degree exceeds `m`, or the normalized leading
    /// coefficient `value` is not an integer.
    NotSigmaShaped { m: u32, value: BigRational },
}

impl fmt::Display for NumPolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NumPolyError::NotNumerical { index, value } => write!(
                f,
                "not a numerical polynomial: binomial coefficient a_{index} = {value} is not an integer"
            ),
            NumPolyError::NotSigmaShaped { m, value } => write!(
                f,
                "not a dimension polynomial shape for m = {m}: normalized leading coefficient {value} is not an integer"
            ),
        }
    }
}

/// The invariants read off a dimension polynomial in `m` translations: the
/// difference transcendence degree `sigma_trdeg`, the degree, and the leading
/// monomial coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaInvariants {
    pub sigma_trdeg: BigInt,
    pub degree: i64,
    pub leading: BigRational,
}

/// A numerical polynomial in the canonical binomial basis.
///
/// `coeffs[i]` is the integer coefficient of `C(t+i, i)`; the vector carries
/// no trailing zeros, and the zero polynomial is the empty vector (reported
/// as degree `-1`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NumPoly {
    coeffs: Vec<BigInt>,
}

fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n as u64 {
        acc *= BigInt::from(k);
    }
    acc
}

/// Integer value of the binomial polynomial `C(n, k)` for any integer `n`,
/// via the falling-factorial product `n(n-1)...(n-k+1) / k!`. The division is
/// exact because the numerator is a product of `k` consecutive integers.
fn int_binomial(n: &BigInt, k: u32) -> BigInt {
    let mut num = BigInt::one();
    for j in 0..k as i64 {
        num *= n - BigInt::from(j);
    }
    num / factorial(k)
}

/// Monomial coefficients of the binomial polynomial `C(t+c, m)`, lowest
/// degree first.
fn binomial_monomial_coeffs(c: i64, m: u32) -> Vec<BigRational> {
    // Expand (t + c)(t + c - 1)...(t + c - m + 1) and divide by m!.
    let mut poly = vec![BigRational::one()];
    for j in 0..m as i64 {
        let shift = BigRational::from_integer(BigInt::from(c - j));
        let mut next = vec![BigRational::zero(); poly.len() + 1];
        for (i, coef) in poly.iter().enumerate() {
            next[i + 1] += coef;
            next[i] += coef * &shift;
        }
        poly = next;
    }
    let fact = BigRational::from_integer(factorial(m));
    for coef in &mut poly {
        *coef /= &fact;
    }
    poly
}

fn trim_rationals(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

impl NumPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        NumPoly { coeffs: Vec::new() }
    }

    /// The constant polynomial `c`.
    pub fn constant(c: BigInt) -> Self {
        Self::from_binomial_coeffs(vec![c])
    }

    /// Builds a polynomial directly from binomial-basis coefficients
    /// `(a_0, ..., a_d)`; trailing zeros are trimmed.
    pub fn from_binomial_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut coeffs = coeffs;
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        NumPoly { coeffs }
    }

    /// The binomial polynomial `C(t+c, m)`, extended to every integer offset
    /// `c` (including negative ones) as a polynomial in `t`.
    pub fn binomial_term(c: i64, m: u32) -> Self {
        Self::from_monomial_coeffs(&binomial_monomial_coeffs(c, m))
            .expect("binomial polynomials are integer-valued")
    }

    /// Converts monomial coefficients (lowest degree first, exact rationals)
    /// into the canonical binomial basis.
    ///
    /// Fails with [`NumPolyError::NotNumerical`] when the input polynomial is
    /// not integer-valued at all large integers.
    pub fn from_monomial_coeffs(coeffs: &[BigRational]) -> Result<Self, NumPolyError> {
        let mut work = trim_rationals(coeffs.to_vec());
        let mut out = vec![BigInt::zero(); work.len()];
        while let Some(top) = work.last().cloned() {
            let d = work.len() - 1;
            // C(t+d, d) has leading monomial coefficient 1/d!.
            let a = top * BigRational::from_integer(factorial(d as u32));
            if !a.is_integer() {
                return Err(NumPolyError::NotNumerical { index: d, value: a });
            }
            let a_int = a.to_integer();
            let expansion = binomial_monomial_coeffs(d as i64, d as u32);
            let a_rat = BigRational::from_integer(a_int.clone());
            for (w, e) in work.iter_mut().zip(expansion.iter()) {
                *w -= &a_rat * e;
            }
            out[d] = a_int;
            work = trim_rationals(work);
        }
        Ok(Self::from_binomial_coeffs(out))
    }

    /// Monomial coefficients of the polynomial, lowest degree first, with no
    /// trailing zeros.
    pub fn to_monomial_coeffs(&self) -> Vec<BigRational> {
        let mut acc = vec![BigRational::zero(); self.coeffs.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            let a_rat = BigRational::from_integer(a.clone());
            for (j, e) in binomial_monomial_coeffs(i as i64, i as u32).iter().enumerate() {
                acc[j] += &a_rat * e;
            }
        }
        trim_rationals(acc)
    }

    /// Degree of the polynomial; the zero polynomial has degree `-1`.
    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Binomial-basis coefficients `(a_0, ..., a_d)`.
    pub fn binomial_coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Exact value at the integer `r`. The result is always an integer:
    /// every `C(r+i, i)` is an integer binomial value, even for `r < 0`.
    pub fn evaluate(&self, r: i64) -> BigInt {
        let mut acc = BigInt::zero();
        for (i, a) in self.coeffs.iter().enumerate() {
            let n = BigInt::from(r) + BigInt::from(i as i64);
            acc += a * int_binomial(&n, i as u32);
        }
        acc
    }

    /// Scales by the integer `k`.
    pub fn scale(&self, k: &BigInt) -> Self {
        Self::from_binomial_coeffs(self.coeffs.iter().map(|a| a * k).collect())
    }

    /// Eventual ordering: compares monomial coefficient sequences from the
    /// highest degree down, which matches pointwise comparison at all
    /// sufficiently large integers.
    pub fn eventual_compare(&self, other: &Self) -> Ordering {
        let diff = self - other;
        match diff.coeffs.last() {
            None => Ordering::Equal,
            Some(top) => {
                if top.is_positive() {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
        }
    }

    /// Reads off the dimension-polynomial invariants for `m` translations:
    /// `sigma_trdeg = (coefficient of t^m) * m! / 2^m`, which must be an
    /// integer, together with the degree and leading coefficient.
    pub fn sigma_invariants(&self, m: u32) -> Result<SigmaInvariants, NumPolyError> {
        let mono = self.to_monomial_coeffs();
        if self.degree() > m as i64 {
            return Err(NumPolyError::NotSigmaShaped {
                m,
                value: mono.last().cloned().unwrap_or_else(BigRational::zero),
            });
        }
        let c_m = mono
            .get(m as usize)
            .cloned()
            .unwrap_or_else(BigRational::zero);
        let scaled = c_m * BigRational::new(factorial(m), BigInt::from(2u32).pow(m));
        if !scaled.is_integer() {
            return Err(NumPolyError::NotSigmaShaped { m, value: scaled });
        }
        let leading = mono.last().cloned().unwrap_or_else(BigRational::zero);
        Ok(SigmaInvariants {
            sigma_trdeg: scaled.to_integer(),
            degree: self.degree(),
            leading,
        })
    }
}

impl Add for &NumPoly {
    type Output = NumPoly;
    fn add(self, rhs: &NumPoly) -> NumPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            out[i] += a;
        }
        for (i, b) in rhs.coeffs.iter().enumerate() {
            out[i] += b;
        }
        NumPoly::from_binomial_coeffs(out)
    }
}

impl Sub for &NumPoly {
    type Output = NumPoly;
    fn sub(self, rhs: &NumPoly) -> NumPoly {
        self + &(-rhs)
    }
}

impl Neg for &NumPoly {
    type Output = NumPoly;
    fn neg(self) -> NumPoly {
        NumPoly::from_binomial_coeffs(self.coeffs.iter().map(|a| -a).collect())
    }
}

/// Prints the expanded monomial form with terms in decreasing degree, e.g.
/// `2*t^2 + 2*t + 1`, `6*t - 1`, `0`.
impl fmt::Display for NumPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mono = self.to_monomial_coeffs();
        if mono.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for deg in (0..mono.len()).rev() {
            let c = &mono[deg];
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if deg == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if deg == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{deg}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    extern crate std;

    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn canonicalize_linear() {
        // 5t = 5*C(t+1,1) - 5
        let p = NumPoly::from_monomial_coeffs(&[int(0), int(5)]).unwrap();
        assert_eq!(p.binomial_coeffs(), &[BigInt::from(-5), BigInt::from(5)]);
        assert_eq!(p.to_string(), "5*t");
    }

    #[test]
    fn canonicalize_constant() {
        let p = NumPoly::from_monomial_coeffs(&[int(1)]).unwrap();
        assert_eq!(p.binomial_coeffs(), &[BigInt::one()]);
    }

    #[test]
    fn canonicalize_half_square() {
        // t^2/2 + t/2 = C(t+2,2) - C(t+1,1)
        let p = NumPoly::from_monomial_coeffs(&[int(0), rat(1, 2), rat(1, 2)]).unwrap();
        assert_eq!(
            p.binomial_coeffs(),
            &[BigInt::zero(), BigInt::from(-1), BigInt::one()]
        );
    }

    #[test]
    fn non_numerical_rejected() {
        let err = NumPoly::from_monomial_coeffs(&[int(0), rat(1, 2)]).unwrap_err();
        match err {
            NumPolyError::NotNumerical { index, .. } => assert_eq!(index, 1),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn evaluate_examples() {
        let p = NumPoly::from_monomial_coeffs(&[int(-1), int(6)]).unwrap();
        assert_eq!(p.evaluate(10), BigInt::from(59));

        let q = NumPoly::binomial_term(2, 2);
        assert_eq!(q.evaluate(3), BigInt::from(10));

        // 2t^2 + 2t + 1, the count of |x|+|y| <= r in Z^2, at r = 3.
        let d = NumPoly::from_monomial_coeffs(&[int(1), int(2), int(2)]).unwrap();
        assert_eq!(d.evaluate(3), BigInt::from(25));
    }

    #[test]
    fn binomial_term_examples() {
        // C(t+2,2) = (t+1)(t+2)/2
        assert_eq!(
            NumPoly::binomial_term(2, 2).to_monomial_coeffs(),
            vec![int(1), rat(3, 2), rat(1, 2)]
        );
        // C(t-1,2) = (t-1)(t-2)/2
        assert_eq!(
            NumPoly::binomial_term(-1, 2).to_monomial_coeffs(),
            vec![int(1), rat(-3, 2), rat(1, 2)]
        );
        // C(t,0) = 1
        assert_eq!(NumPoly::binomial_term(0, 0).to_monomial_coeffs(), vec![int(1)]);
    }

    #[test]
    fn arithmetic() {
        let five_t = NumPoly::from_monomial_coeffs(&[int(0), int(5)]).unwrap();
        let minus_t = NumPoly::from_monomial_coeffs(&[int(0), int(-1)]).unwrap();
        let four_t = NumPoly::from_monomial_coeffs(&[int(0), int(4)]).unwrap();
        assert_eq!(&five_t + &minus_t, four_t);
        assert!((&five_t - &five_t).is_zero());
        let two_t = NumPoly::from_monomial_coeffs(&[int(0), int(2)]).unwrap();
        let six_t = NumPoly::from_monomial_coeffs(&[int(0), int(6)]).unwrap();
        assert_eq!(two_t.scale(&BigInt::from(3)), six_t);
    }

    #[test]
    fn eventual_compare_examples() {
        let four_t = NumPoly::from_monomial_coeffs(&[int(0), int(4)]).unwrap();
        let five_t = NumPoly::from_monomial_coeffs(&[int(0), int(5)]).unwrap();
        let six_t_minus_1 = NumPoly::from_monomial_coeffs(&[int(-1), int(6)]).unwrap();
        let six_t = NumPoly::from_monomial_coeffs(&[int(0), int(6)]).unwrap();
        assert_eq!(four_t.eventual_compare(&five_t), Ordering::Less);
        assert_eq!(six_t_minus_1.eventual_compare(&six_t), Ordering::Less);
        assert_eq!(five_t.eventual_compare(&five_t), Ordering::Equal);
    }

    #[test]
    fn sigma_invariants_examples() {
        let four_t = NumPoly::from_monomial_coeffs(&[int(0), int(4)]).unwrap();
        let inv = four_t.sigma_invariants(2).unwrap();
        assert_eq!(inv.sigma_trdeg, BigInt::zero());
        assert_eq!(inv.degree, 1);
        assert_eq!(inv.leading, int(4));

        // 2t + 1 has sigma_trdeg 1 for m = 1.
        let p = NumPoly::from_monomial_coeffs(&[int(1), int(2)]).unwrap();
        assert_eq!(p.sigma_invariants(1).unwrap().sigma_trdeg, BigInt::one());

        let z = NumPoly::zero();
        let inv = z.sigma_invariants(3).unwrap();
        assert_eq!(inv.sigma_trdeg, BigInt::zero());
        assert_eq!(inv.degree, -1);

        // t^2 has leading 1, and 1 * 2!/4 = 1/2 is not an integer.
        let sq = NumPoly::from_monomial_coeffs(&[int(0), int(0), int(1)]).unwrap();
        assert!(matches!(
            sq.sigma_invariants(2),
            Err(NumPolyError::NotSigmaShaped { .. })
        ));
    }

    #[test]
    fn display_forms() {
        let p = NumPoly::from_monomial_coeffs(&[int(1), int(2), int(2)]).unwrap();
        assert_eq!(p.to_string(), "2*t^2 + 2*t + 1");
        let q = NumPoly::from_monomial_coeffs(&[int(-1), int(6)]).unwrap();
        assert_eq!(q.to_string(), "6*t - 1");
        assert_eq!(NumPoly::zero().to_string(), "0");
        let half = NumPoly::binomial_term(2, 2);
        assert_eq!(half.to_string(), "1/2*t^2 + 3/2*t + 1");
    }

    /// Smallest integer beyond every real root of `q - p`, from the Cauchy
    /// bound on the monomial coefficients.
    fn cauchy_bound(diff: &NumPoly) -> i64 {
        let mono = diff.to_monomial_coeffs();
        let lead = mono.last().expect("nonzero difference").clone();
        let mut bound = BigRational::one();
        for c in &mono[..mono.len() - 1] {
            let ratio = BigRational::one() + (c / &lead).abs();
            if ratio > bound {
                bound = ratio;
            }
        }
        bound.ceil().to_integer().try_into().unwrap_or(i64::MAX)
    }

    proptest! {
        #[test]
        fn evaluation_is_integer(coeffs in proptest::collection::vec(-50i64..50, 0..6), r in 0i64..40) {
            let p = NumPoly::from_binomial_coeffs(coeffs.into_iter().map(BigInt::from).collect());
            // evaluate returns BigInt by construction; also cross-check against
            // the monomial form at the same point.
            let value = p.evaluate(r);
            let mono = p.to_monomial_coeffs();
            let mut acc = BigRational::zero();
            let point = BigRational::from_integer(BigInt::from(r));
            for c in mono.iter().rev() {
                acc = acc * &point + c;
            }
            prop_assert_eq!(BigRational::from_integer(value), acc);
        }

        #[test]
        fn monomial_roundtrip(coeffs in proptest::collection::vec(-50i64..50, 0..6)) {
            let p = NumPoly::from_binomial_coeffs(coeffs.into_iter().map(BigInt::from).collect());
            let back = NumPoly::from_monomial_coeffs(&p.to_monomial_coeffs()).unwrap();
            prop_assert_eq!(p, back);
        }

        #[test]
        fn binomial_term_product_formula(c in -8i64..8, m in 0u32..5, r in -10i64..20) {
            let p = NumPoly::binomial_term(c, m);
            let mut num = BigInt::one();
            for j in 0..m as i64 {
                num *= BigInt::from(r + c - j);
            }
            let expected = BigRational::new(num, factorial(m));
            prop_assert_eq!(BigRational::from_integer(p.evaluate(r)), expected);
        }

        #[test]
        fn eventual_compare_matches_pointwise(a in proptest::collection::vec(-9i64..9, 0..4), b in proptest::collection::vec(-9i64..9, 0..4)) {
            let p = NumPoly::from_binomial_coeffs(a.into_iter().map(BigInt::from).collect());
            let q = NumPoly::from_binomial_coeffs(b.into_iter().map(BigInt::from).collect());
            let ord = p.eventual_compare(&q);
            if ord != Ordering::Equal {
                let diff = if ord == Ordering::Less { &q - &p } else { &p - &q };
                let start = cauchy_bound(&diff);
                for r in start..start + 10 {
                    prop_assert!(diff.evaluate(r) > BigInt::zero());
                }
            } else {
                prop_assert_eq!(p, q);
            }
        }
    }
}
