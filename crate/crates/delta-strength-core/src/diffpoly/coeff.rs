//! Coefficient arithmetic: exact polynomials in declared constant symbols.
//!
//! Coefficients of difference polynomials live in the ground field, where
//! every declared symbol is a constant (fixed by all translations). They are
//! represented as sparse polynomials over `Q` in those symbols; reduction
//! multiplies through by initials instead of dividing, so no rational
//! functions are ever needed.

use alloc::collections::BTreeMap;
use alloc::string::String;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A power product of constant symbols, e.g. `{a: 2, b: 1}` for `a*a*b`.
pub type SymMono = BTreeMap<String, u32>;

/// A sparse exact polynomial in constant symbols; zero coefficients are
/// never stored. The derived order is structural and is used only for
/// deterministic tie-breaks.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct ConstPoly {
    terms: BTreeMap<SymMono, BigRational>,
}

impl ConstPoly {
    pub fn zero() -> Self {
        ConstPoly::default()
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_rational(r: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(SymMono::new(), r);
        }
        ConstPoly { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// The polynomial consisting of the single symbol `name`.
    pub fn symbol(name: &str) -> Self {
        let mut mono = SymMono::new();
        mono.insert(String::from(name), 1);
        let mut terms = BTreeMap::new();
        terms.insert(mono, BigRational::one());
        ConstPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_one())
    }

    /// Returns the value when the polynomial is a plain rational (including
    /// zero), and `None` when any symbol occurs.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.terms.is_empty() {
            return Some(BigRational::zero());
        }
        if self.terms.len() == 1 {
            if let Some((mono, coef)) = self.terms.iter().next() {
                if mono.is_empty() {
                    return Some(coef.clone());
                }
            }
        }
        None
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SymMono, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn insert_add(&mut self, mono: SymMono, coef: BigRational) {
        if coef.is_zero() {
            return;
        }
        if let Some(entry) = self.terms.get_mut(&mono) {
            *entry += coef;
            if entry.is_zero() {
                self.terms.remove(&mono);
            }
        } else {
            self.terms.insert(mono, coef);
        }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        ConstPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * r))
                .collect(),
        }
    }

    /// Renames symbols; names missing from the map are kept.
    pub fn rename_symbols(&self, map: &BTreeMap<String, String>) -> Self {
        let mut out = ConstPoly::zero();
        for (mono, coef) in &self.terms {
            let mut renamed = SymMono::new();
            for (name, &exp) in mono {
                let new = map.get(name).unwrap_or(name).clone();
                *renamed.entry(new).or_insert(0) += exp;
            }
            out.insert_add(renamed, coef.clone());
        }
        out
    }

    /// The rational coefficient of the largest symbol monomial; used to pick
    /// a canonical sign. Zero for the zero polynomial.
    pub fn normalizing_rational(&self) -> BigRational {
        self.terms
            .iter()
            .next_back()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigRational::zero)
    }

    /// Folds every coefficient into `(lcm of denominators, gcd of numerators)`
    /// accumulators, for content normalization across a whole polynomial.
    pub fn fold_content(&self, denom_lcm: &mut BigInt, numer_gcd: &mut BigInt) {
        for coef in self.terms.values() {
            *denom_lcm = denom_lcm.lcm(coef.denom());
            *numer_gcd = numer_gcd.gcd(coef.numer());
        }
    }

    pub fn symbols(&self) -> impl Iterator<Item = &str> {
        self.terms.keys().flat_map(|m| m.keys().map(String::as_str))
    }
}

impl Add for &ConstPoly {
    type Output = ConstPoly;
    fn add(self, rhs: &ConstPoly) -> ConstPoly {
        let mut out = self.clone();
        for (mono, coef) in &rhs.terms {
            out.insert_add(mono.clone(), coef.clone());
        }
        out
    }
}

impl Sub for &ConstPoly {
    type Output = ConstPoly;
    fn sub(self, rhs: &ConstPoly) -> ConstPoly {
        self + &(-rhs)
    }
}

impl Neg for &ConstPoly {
    type Output = ConstPoly;
    fn neg(self) -> ConstPoly {
        ConstPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c))
                .collect(),
        }
    }
}

impl Mul for &ConstPoly {
    type Output = ConstPoly;
    fn mul(self, rhs: &ConstPoly) -> ConstPoly {
        let mut out = ConstPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let mut mono = ma.clone();
                for (name, &exp) in mb {
                    *mono.entry(name.clone()).or_insert(0) += exp;
                }
                out.insert_add(mono, ca * cb);
            }
        }
        out
    }
}

/// Canonical text form, compatible with the file grammar: symbol powers are
/// written as repeated factors (`a*a*b`), rationals as `p/q`, terms joined
/// with ` + ` / ` - ` in decreasing monomial order.
impl fmt::Display for ConstPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (mono, coef)) in self.terms.iter().rev().enumerate() {
            if k == 0 {
                if coef.is_negative() {
                    write!(f, "-")?;
                }
            } else if coef.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = coef.abs();
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else {
                let mut wrote = false;
                if !mag.is_one() {
                    write!(f, "{mag}")?;
                    wrote = true;
                }
                for (name, &exp) in mono {
                    for _ in 0..exp {
                        if wrote {
                            write!(f, "*")?;
                        }
                        write!(f, "{name}")?;
                        wrote = true;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn a() -> ConstPoly {
        ConstPoly::symbol("a")
    }

    #[test]
    fn arithmetic_and_normalization() {
        let one = ConstPoly::one();
        let sum = &a() + &one;
        assert_eq!(sum.num_terms(), 2);
        assert!((&sum - &sum).is_zero());
        assert_eq!(sum.to_string(), "a + 1");

        let prod = &sum * &sum;
        assert_eq!(prod.to_string(), "a*a + 2*a + 1");
        assert!(prod.as_rational().is_none());
        assert_eq!(ConstPoly::from_int(-3).to_string(), "-3");
    }

    #[test]
    fn cancellation_removes_entries() {
        let d = &(&a() + &ConstPoly::one()) - &a();
        assert!(d.is_one());
        assert_eq!(d.num_terms(), 1);
    }

    #[test]
    fn rename() {
        let mut map = BTreeMap::new();
        map.insert(String::from("c"), String::from("a"));
        let p = &ConstPoly::symbol("c") + &ConstPoly::one();
        assert_eq!(p.rename_symbols(&map), &a() + &ConstPoly::one());
    }

    #[test]
    fn normalizing_rational_picks_top_monomial() {
        let p = &(-&a()) + &ConstPoly::from_int(7);
        assert_eq!(
            p.normalizing_rational(),
            BigRational::from_integer(BigInt::from(-1))
        );
    }
}
