//! Finite subsets of `N^m` and `Z^m` and their dimension polynomials.
//!
//! A set `E` in `N^m` carves out the staircase complement `V_E` of points
//! dominated by no element of `E` under the product order; a set `A` in `Z^m`
//! does the same for the orthant-wise order `unlhd`. For large `r` the number
//! of such points of order at most `r` is given by a numerical polynomial:
//! [`LatticeSet::omega`] computes it by inclusion-exclusion over the minimal
//! elements, and [`LatticeSet::phi`] reduces the `Z^m` case to `N^{2m}` by
//! splitting each coordinate into its positive and negative parts.
//! [`LatticeSet::oracle_count_v`] and [`LatticeSet::oracle_count_w`] count the
//! same sets by exhaustive enumeration and serve as independent oracles.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::numpoly::NumPoly;

/// Largest number of minimal points accepted by the inclusion-exclusion sum,
/// which walks `2^q` subsets.
pub const OMEGA_POINT_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeError {
    DimMismatch { expected: usize, found: usize },
    /// A point with a negative coordinate was supplied for an `N^m` set.
    NegativeCoordinate { point: Point },
    /// The operation requires the other signature of set.
    SignatureMismatch { expected: Signature, found: Signature },
    /// More minimal points than [`OMEGA_POINT_LIMIT`].
    SizeLimit { points: usize, limit: usize },
}

impl fmt::Display for LatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeError::DimMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            LatticeError::NegativeCoordinate { point } => {
                write!(f, "negative coordinate in non-negative set: {point}")
            }
            LatticeError::SignatureMismatch { expected, found } => {
                write!(f, "signature mismatch: expected {expected:?}, found {found:?}")
            }
            LatticeError::SizeLimit { points, limit } => write!(
                f,
                "too many minimal points for inclusion-exclusion: {points} (limit {limit})"
            ),
        }
    }
}

/// Whether a set lives in `N^m` or in `Z^m`. The signature decides which
/// partial order governs domination and minimal elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Signature {
    NonNegative,
    Integer,
}

/// A point of `Z^m` with exact integer coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    coords: Vec<i64>,
}

impl Point {
    pub fn new(coords: Vec<i64>) -> Self {
        Point { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// The order of the point: the sum of the absolute values of its
    /// coordinates.
    pub fn order(&self) -> i64 {
        self.coords.iter().map(|c| c.abs()).sum()
    }

    pub fn is_origin(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

pub(crate) fn product_leq_raw(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// `a unlhd b`: the two points lie in a common orthant and `|a|` is
/// coordinatewise at most `|b|`. A zero coordinate is compatible with either
/// sign, so the condition reduces to `a_i * b_i >= 0` and `|a_i| <= |b_i|`.
pub(crate) fn unlhd_raw(a: &[i64], b: &[i64]) -> bool {
    a.iter()
        .zip(b)
        .all(|(&x, &y)| x.signum() * y.signum() >= 0 && x.unsigned_abs() <= y.unsigned_abs())
}

/// Product order on points of equal dimension.
pub fn product_leq(a: &Point, b: &Point) -> Result<bool, LatticeError> {
    if a.dim() != b.dim() {
        return Err(LatticeError::DimMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    Ok(product_leq_raw(a.coords(), b.coords()))
}

/// Orthant-wise order on points of equal dimension.
pub fn unlhd(a: &Point, b: &Point) -> Result<bool, LatticeError> {
    if a.dim() != b.dim() {
        return Err(LatticeError::DimMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    Ok(unlhd_raw(a.coords(), b.coords()))
}

/// A finite set of distinct points of fixed dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeSet {
    dim: usize,
    signature: Signature,
    points: BTreeSet<Point>,
}

impl LatticeSet {
    pub fn new(
        dim: usize,
        signature: Signature,
        points: impl IntoIterator<Item = Point>,
    ) -> Result<Self, LatticeError> {
        let mut set = BTreeSet::new();
        for p in points {
            if p.dim() != dim {
                return Err(LatticeError::DimMismatch {
                    expected: dim,
                    found: p.dim(),
                });
            }
            if signature == Signature::NonNegative && p.coords().iter().any(|&c| c < 0) {
                return Err(LatticeError::NegativeCoordinate { point: p });
            }
            set.insert(p);
        }
        Ok(LatticeSet {
            dim,
            signature,
            points: set,
        })
    }

    pub fn empty(dim: usize, signature: Signature) -> Self {
        LatticeSet {
            dim,
            signature,
            points: BTreeSet::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> impl Iterator<Item = &Point> {
        self.points.iter()
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.points.contains(p)
    }

    pub fn contains_origin(&self) -> bool {
        self.points.iter().any(Point::is_origin)
    }

    fn leq(&self, a: &Point, b: &Point) -> bool {
        match self.signature {
            Signature::NonNegative => product_leq_raw(a.coords(), b.coords()),
            Signature::Integer => unlhd_raw(a.coords(), b.coords()),
        }
    }

    /// The minimal elements under the set's own order (product order for
    /// `N^m`, `unlhd` for `Z^m`). The result is an antichain.
    pub fn minimal_elements(&self) -> LatticeSet {
        let minimal: BTreeSet<Point> = self
            .points
            .iter()
            .filter(|p| {
                !self
                    .points
                    .iter()
                    .any(|q| q != *p && self.leq(q, p))
            })
            .cloned()
            .collect();
        LatticeSet {
            dim: self.dim,
            signature: self.signature,
            points: minimal,
        }
    }

    fn require(&self, signature: Signature) -> Result<(), LatticeError> {
        if self.signature != signature {
            return Err(LatticeError::SignatureMismatch {
                expected: signature,
                found: self.signature,
            });
        }
        Ok(())
    }

    /// Dimension polynomial of a set `E` in `N^m`: the unique numerical
    /// polynomial equal, for all large `r`, to the number of points of
    /// `N^m` of order at most `r` dominated by no element of `E`.
    ///
    /// Computed by inclusion-exclusion over the minimal elements: for each
    /// subset take the coordinatewise maximum profile `b`, and sum
    /// `(-1)^|subset| * C(t + m - b, m)`.
    pub fn omega(&self) -> Result<NumPoly, LatticeError> {
        self.require(Signature::NonNegative)?;
        let minimal = self.minimal_elements();
        let pts: Vec<&Point> = minimal.points.iter().collect();
        let q = pts.len();
        if q > OMEGA_POINT_LIMIT {
            return Err(LatticeError::SizeLimit {
                points: q,
                limit: OMEGA_POINT_LIMIT,
            });
        }
        let m = self.dim as u32;
        let mut acc = NumPoly::zero();
        for mask in 0u32..(1u32 << q) {
            let mut b: i64 = 0;
            for j in 0..self.dim {
                let mut col_max: i64 = 0;
                for (i, p) in pts.iter().enumerate() {
                    if mask & (1 << i) != 0 && p.coords()[j] > col_max {
                        col_max = p.coords()[j];
                    }
                }
                b += col_max;
            }
            let summand = NumPoly::binomial_term(self.dim as i64 - b, m);
            if mask.count_ones() % 2 == 0 {
                acc = &acc + &summand;
            } else {
                acc = &acc - &summand;
            }
        }
        Ok(acc)
    }

    /// Embeds a set `A` of `Z^m` into `N^{2m}` by splitting every coordinate
    /// into positive and negative parts, and adds the `m` guard points with
    /// `1` in positions `i` and `m+i`. The dimension polynomial of the image
    /// equals that of `A`.
    pub fn rho_embed(&self) -> Result<LatticeSet, LatticeError> {
        self.require(Signature::Integer)?;
        let m = self.dim;
        let mut points = BTreeSet::new();
        for p in &self.points {
            let mut coords = Vec::with_capacity(2 * m);
            for &c in p.coords() {
                coords.push(c.max(0));
            }
            for &c in p.coords() {
                coords.push((-c).max(0));
            }
            points.insert(Point::new(coords));
        }
        for i in 0..m {
            let mut coords = alloc::vec![0i64; 2 * m];
            coords[i] = 1;
            coords[m + i] = 1;
            points.insert(Point::new(coords));
        }
        Ok(LatticeSet {
            dim: 2 * m,
            signature: Signature::NonNegative,
            points,
        })
    }

    /// Dimension polynomial of a set `A` in `Z^m`, via the `N^{2m}`
    /// embedding: `phi_A = omega(rho(A) + guards)`.
    pub fn phi(&self) -> Result<NumPoly, LatticeError> {
        self.rho_embed()?.omega()
    }

    /// Exhaustively counts the points `v` of `N^m` with `sum(v) <= r` such
    /// that no element of the set is coordinatewise at most `v`.
    pub fn oracle_count_v(&self, r: i64) -> Result<u64, LatticeError> {
        self.require(Signature::NonNegative)?;
        if r < 0 {
            return Ok(0);
        }
        let pts: Vec<&Point> = self.points.iter().collect();
        let mut buf = Vec::with_capacity(self.dim);
        Ok(count_v_rec(self.dim, r, &pts, &mut buf))
    }

    /// Exhaustively counts the points `w` of `Z^m` with `ord w <= r` such
    /// that no element of the set is `unlhd w`.
    pub fn oracle_count_w(&self, r: i64) -> Result<u64, LatticeError> {
        self.require(Signature::Integer)?;
        if r < 0 {
            return Ok(0);
        }
        let pts: Vec<&Point> = self.points.iter().collect();
        let mut buf = Vec::with_capacity(self.dim);
        Ok(count_w_rec(self.dim, r, &pts, &mut buf))
    }

    /// A radius beyond which the closed-form polynomial provably agrees with
    /// the enumeration oracle: the sum over coordinates of the largest
    /// absolute value occurring in the set (`0` for the empty set).
    pub fn agreement_threshold(&self) -> i64 {
        (0..self.dim)
            .map(|j| {
                self.points
                    .iter()
                    .map(|p| p.coords()[j].abs())
                    .max()
                    .unwrap_or(0)
            })
            .sum()
    }
}

fn count_v_rec(dim: usize, budget: i64, pts: &[&Point], buf: &mut Vec<i64>) -> u64 {
    if buf.len() == dim {
        let dominated = pts.iter().any(|p| product_leq_raw(p.coords(), buf));
        return u64::from(!dominated);
    }
    let mut acc = 0;
    for v in 0..=budget {
        buf.push(v);
        acc += count_v_rec(dim, budget - v, pts, buf);
        buf.pop();
    }
    acc
}

fn count_w_rec(dim: usize, budget: i64, pts: &[&Point], buf: &mut Vec<i64>) -> u64 {
    if buf.len() == dim {
        let dominated = pts.iter().any(|p| unlhd_raw(p.coords(), buf));
        return u64::from(!dominated);
    }
    let mut acc = 0;
    for v in -budget..=budget {
        buf.push(v);
        acc += count_w_rec(dim, budget - v.abs(), pts, buf);
        buf.pop();
    }
    acc
}
