//! Deterministic text and JSON emitters.
//!
//! JSON objects are built with sorted keys (serde_json's default map), so
//! byte-identical inputs produce byte-identical output. The strength report
//! layout is described by `schema/strength-report.schema.json`.

use delta_strength_core::charset::CharacteristicSet;
use delta_strength_core::{NumPoly, Ranking, StrengthReport};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::syntax::{poly_string, term_string, Names};

/// `[[i, a_i], ...]` for the nonzero binomial-basis coefficients.
fn binomial_pairs(psi: &NumPoly) -> Value {
    let pairs: Vec<Value> = psi
        .binomial_coeffs()
        .iter()
        .enumerate()
        .filter(|(_, a)| !num_traits::Zero::is_zero(*a))
        .map(|(i, a)| {
            json!([
                i,
                a.to_i64()
                    .expect("binomial coefficients of catalog-scale polynomials fit i64")
            ])
        })
        .collect();
    Value::Array(pairs)
}

/// Polynomial-only JSON: binomial coefficients, expanded form, and degree.
pub fn poly_json(psi: &NumPoly) -> Value {
    json!({
        "binomial_coeffs": binomial_pairs(psi),
        "expanded": psi.to_string(),
        "degree": psi.degree(),
    })
}

/// Full strength-report JSON.
pub fn report_json(report: &StrengthReport, names: &Names) -> Value {
    let leaders: Vec<String> = report
        .leaders
        .iter()
        .map(|t| term_string(t, names))
        .collect();
    json!({
        "binomial_coeffs": binomial_pairs(&report.psi),
        "expanded": report.psi.to_string(),
        "degree": report.psi.degree(),
        "sigma_trdeg": report
            .sigma_trdeg
            .to_i64()
            .expect("sigma transcendence degrees of catalog-scale systems fit i64"),
        "leaders": leaders,
        "prime_certified": report.prime_certified,
        "scheme": report.scheme,
    })
}

pub fn charset_json(cs: &CharacteristicSet, names: &Names) -> Value {
    let leaders: Vec<String> = cs.leaders().iter().map(|t| term_string(t, names)).collect();
    let elements: Vec<String> = cs
        .elements()
        .iter()
        .map(|p| poly_string(p, names, cs.ranking()))
        .collect();
    json!({
        "elements": elements,
        "leaders": leaders,
        "prime_certified": cs.prime_certified(),
        "radius": cs.search_radius_used(),
    })
}

/// Text rendering of a characteristic set, one element per line.
pub fn charset_text(cs: &CharacteristicSet, names: &Names) -> String {
    let mut out = String::new();
    out.push_str(&format!("elements: {}\n", cs.len()));
    out.push_str(&format!("prime_certified: {}\n", cs.prime_certified()));
    out.push_str(&format!("radius: {}\n", cs.search_radius_used()));
    for (i, (element, leader)) in cs.elements().iter().zip(cs.leaders()).enumerate() {
        out.push_str(&format!(
            "{}: leader {}; poly {}\n",
            i + 1,
            term_string(leader, names),
            poly_string(element, names, cs.ranking())
        ));
    }
    out
}

/// Ranked comparison lines; tied reports share a rank number.
pub fn compare_text(groups: &[Vec<StrengthReport>]) -> String {
    let mut out = String::new();
    let mut rank = 1usize;
    for group in groups {
        for report in group {
            out.push_str(&format!("{rank}. {}: {}\n", report.scheme, report.psi));
        }
        rank += group.len();
    }
    out
}

pub fn compare_json(groups: &[Vec<StrengthReport>], names: &Names) -> Value {
    let mut entries = Vec::new();
    let mut rank = 1usize;
    for group in groups {
        for report in group {
            let mut obj = report_json(report, names);
            obj.as_object_mut()
                .expect("report json is an object")
                .insert("rank".to_string(), json!(rank));
            entries.push(obj);
        }
        rank += group.len();
    }
    Value::Array(entries)
}

/// Pretty, trailing-newline JSON rendering.
pub fn json_to_output(value: &Value) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("json serialization");
    out.push('\n');
    out
}

/// Resolves printing names for a catalog system.
pub fn catalog_names(translations: &[String], indeterminates: &[String]) -> Names {
    Names {
        translations: translations.to_vec(),
        indeterminates: indeterminates.to_vec(),
    }
}

/// Convenience wrapper used by commands that print a bare polynomial.
pub fn poly_output(psi: &NumPoly, json: bool) -> String {
    if json {
        json_to_output(&poly_json(psi))
    } else {
        format!("{psi}\n")
    }
}

/// Shared helper for commands that print difference polynomials.
pub fn diff_polys_text(
    polys: &[delta_strength_core::DiffPoly],
    names: &Names,
    rk: &Ranking,
) -> String {
    let mut out = String::new();
    for p in polys {
        out.push_str(&poly_string(p, names, rk));
        out.push('\n');
    }
    out
}
