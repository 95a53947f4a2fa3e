//! Canonical text forms for terms, polynomials, and point sets.
//!
//! Printing is the inverse of the file grammar: whatever this module emits,
//! [`mod@crate::parse`] reads back to a structurally identical value. Monomials
//! are listed in decreasing ranking order (leaders first), translation
//! powers use `^`, and symbol or indeterminate powers are written as
//! repeated factors, since the grammar has no power operator on those.

use std::cmp::Ordering;
use std::fmt::Write;

use delta_strength_core::{ConstPoly, DiffPoly, LatticeSet, Monomial, Point, Ranking, Term};
use num_traits::{One, Signed};

/// Declared translation and indeterminate names for printing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Names {
    pub translations: Vec<String>,
    pub indeterminates: Vec<String>,
}

impl Names {
    pub fn generic(m: usize, n: usize) -> Names {
        Names {
            translations: (1..=m).map(|i| format!("s{i}")).collect(),
            indeterminates: (1..=n).map(|i| format!("y{i}")).collect(),
        }
    }
}

/// `s1^2 s2^-1 y3`-style rendering of a term.
pub fn term_string(t: &Term, names: &Names) -> String {
    let mut out = String::new();
    for (i, &k) in t.shift.exps().iter().enumerate() {
        if k == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push(' ');
        }
        out.push_str(&names.translations[i]);
        if k != 1 {
            let _ = write!(out, "^{k}");
        }
    }
    if !out.is_empty() {
        out.push(' ');
    }
    out.push_str(&names.indeterminates[t.var]);
    out
}

/// Monomial as a `*`-joined product of term factors, highest factor first.
fn monomial_string(mono: &Monomial, names: &Names, rk: &Ranking) -> String {
    let mut factors: Vec<&Term> = mono.iter().map(|(t, _)| t).collect();
    factors.sort_by(|a, b| rk.compare(b, a).expect("terms share the ambient context"));
    let mut out = String::new();
    for t in factors {
        for _ in 0..mono.degree_of(t) {
            if !out.is_empty() {
                out.push('*');
            }
            out.push_str(&term_string(t, names));
        }
    }
    out
}

/// Compares monomials by their term multisets in decreasing ranking order.
fn cmp_monomials(a: &Monomial, b: &Monomial, rk: &Ranking) -> Ordering {
    let seq = |m: &Monomial| {
        let mut terms: Vec<Term> = Vec::new();
        for (t, e) in m.iter() {
            for _ in 0..e {
                terms.push(t.clone());
            }
        }
        terms.sort_by(|x, y| rk.compare(y, x).expect("terms share the ambient context"));
        terms
    };
    let sa = seq(a);
    let sb = seq(b);
    for (x, y) in sa.iter().zip(sb.iter()) {
        let ord = rk.compare(x, y).expect("terms share the ambient context");
        if ord != Ordering::Equal {
            return ord;
        }
    }
    sa.len().cmp(&sb.len())
}

/// Magnitude of a single-term coefficient, e.g. `2`, `a`, `3/2*a*b`.
fn single_coeff_magnitude(c: &ConstPoly) -> String {
    let (mono, rat) = c.iter().next().expect("nonzero single-term coefficient");
    let mag = rat.abs();
    let mut out = String::new();
    if !mag.is_one() || mono.is_empty() {
        let _ = write!(out, "{mag}");
    }
    for (name, &exp) in mono {
        for _ in 0..exp {
            if !out.is_empty() {
                out.push('*');
            }
            out.push_str(name);
        }
    }
    out
}

/// Canonical polynomial rendering; guaranteed to re-parse to the same value.
pub fn poly_string(p: &DiffPoly, names: &Names, rk: &Ranking) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut entries: Vec<(&Monomial, &ConstPoly)> = p.monomials().collect();
    entries.sort_by(|(ma, _), (mb, _)| cmp_monomials(mb, ma, rk));
    let mut out = String::new();
    for (idx, (mono, coeff)) in entries.iter().enumerate() {
        let negative = coeff.normalizing_rational().is_negative();
        if idx == 0 {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let magnitude = if negative { -*coeff } else { (*coeff).clone() };
        if mono.is_unit() {
            if magnitude.num_terms() > 1 {
                let _ = write!(out, "({magnitude})");
            } else {
                let _ = write!(out, "{}", single_coeff_magnitude(&magnitude));
            }
            continue;
        }
        let body = monomial_string(mono, names, rk);
        if magnitude.is_one() {
            out.push_str(&body);
        } else if magnitude.num_terms() > 1 {
            let _ = write!(out, "({magnitude})*{body}");
        } else {
            let _ = write!(out, "{}*{body}", single_coeff_magnitude(&magnitude));
        }
    }
    out
}

/// `(a,b);(c,d)` rendering of a point set, points in their stored order.
pub fn point_set_string(s: &LatticeSet) -> String {
    let mut out = String::new();
    for (i, p) in s.points().enumerate() {
        if i > 0 {
            out.push(';');
        }
        out.push_str(&point_string(p));
    }
    out
}

pub fn point_string(p: &Point) -> String {
    let mut out = String::from("(");
    for (i, c) in p.coords().iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(out, "{c}");
    }
    out.push(')');
    out
}

/// Parses `"(1,0);(-2,0)"` into points of the stated dimension.
pub fn parse_points(dim: usize, text: &str) -> Result<Vec<Point>, String> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for (i, chunk) in trimmed.split(';').enumerate() {
        let chunk = chunk.trim();
        let inner = chunk
            .strip_prefix('(')
            .and_then(|c| c.strip_suffix(')'))
            .ok_or_else(|| format!("point #{}: expected parenthesized tuple, got `{chunk}`", i + 1))?;
        let coords = inner
            .split(',')
            .map(|c| c.trim().parse::<i64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| format!("point #{}: bad integer: {e}", i + 1))?;
        if coords.len() != dim {
            return Err(format!(
                "point #{}: expected {dim} coordinates, found {}",
                i + 1,
                coords.len()
            ));
        }
        out.push(Point::new(coords));
    }
    Ok(out)
}
