//! Subcommand dispatch and flag handling.
//!
//! Exit codes: 0 success, 1 usage, 2 parse error, 3 violated precondition
//! (non-triangular or non-quasi-linear input and similar), 4 unstable
//! minimal-leader search, 5 size or step limit exceeded.

use std::collections::BTreeMap;

use delta_strength_core::charset::{
    default_radius, orbit_minimal_charset, reduce_remainder_with_cap, system_charset,
    CharsetError, DEFAULT_STEP_CAP, DEFAULT_WINDOW,
};
use delta_strength_core::schemes::catalog::{self, Scheme};
use delta_strength_core::schemes::{compare_schemes, discretize, strength, SchemesError};
use delta_strength_core::{
    DiffPoly, LatticeError, LatticeSet, Ranking, Signature, StrengthReport,
};
use serde_json::json;

use crate::emit;
use crate::parse::{self, SystemFile};
use crate::syntax::{parse_points, poly_string, term_string, Names};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Parse(String),
    Precondition(String),
    Unstable(String),
    SizeLimit(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Unstable(_) => 4,
            CliError::SizeLimit(_) => 5,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m)
            | CliError::Parse(m)
            | CliError::Precondition(m)
            | CliError::Unstable(m)
            | CliError::SizeLimit(m) => m,
        }
    }
}

fn charset_err(e: CharsetError) -> CliError {
    match e {
        CharsetError::Unstable { .. } => CliError::Unstable(e.to_string()),
        CharsetError::StepCapExceeded { .. } => CliError::SizeLimit(e.to_string()),
        other => CliError::Precondition(other.to_string()),
    }
}

fn lattice_err(e: LatticeError) -> CliError {
    match e {
        LatticeError::SizeLimit { .. } => CliError::SizeLimit(e.to_string()),
        other => CliError::Precondition(other.to_string()),
    }
}

fn schemes_err(e: SchemesError) -> CliError {
    match e {
        SchemesError::UnknownEntry { .. } => CliError::Usage(e.to_string()),
        SchemesError::Charset(c) => charset_err(c),
        SchemesError::Lattice(l) => lattice_err(l),
        other => CliError::Precondition(other.to_string()),
    }
}

const USAGE: &str = "usage: delta-strength <command> [flags]

commands:
  omega --dim M --points \"(..);(..)\"          dimension polynomial of a subset of N^M
  phi --dim M --points \"(..);(..)\"            dimension polynomial of a subset of Z^M
  oracle-v --dim M --points \"..\" -r R         exhaustive staircase count in N^M
  oracle-w --dim M --points \"..\" -r R         exhaustive staircase count in Z^M
  leader --file F --poly NAME                   leader of a polynomial from a system file
  charset --file F [--poly NAME]                characteristic set (of one poly, or the file's system)
  reduce --file F --poly NAME                   reduce NAME against the charset of the other polys
  strength (--file F | --catalog E --scheme S)  strength polynomial of a system
  compare --catalog E                           rank all three schemes of a catalog entry
  discretize --catalog E --scheme S             difference equations produced by a scheme
  catalog-list                                  list built-in catalog entries

flags: --dim N, --points STR, -r N, --file PATH, --poly NAME, --ranking \"s2,s1\",
       --radius N, --window N, --format text|json, --catalog NAME, --scheme NAME
";

struct Flags {
    values: BTreeMap<String, String>,
}

impl Flags {
    fn parse(args: &[String]) -> Result<Flags, CliError> {
        let known = [
            "--dim", "--points", "--file", "--poly", "--ranking", "--radius", "--window",
            "--format", "--catalog", "--scheme", "-r",
        ];
        let mut values = BTreeMap::new();
        let mut it = args.iter();
        while let Some(flag) = it.next() {
            if !known.contains(&flag.as_str()) {
                return Err(CliError::Usage(format!("unknown flag `{flag}`\n{USAGE}")));
            }
            let value = it
                .next()
                .ok_or_else(|| CliError::Usage(format!("flag `{flag}` needs a value")))?;
            values.insert(flag.clone(), value.clone());
        }
        Ok(Flags { values })
    }

    fn get(&self, flag: &str) -> Option<&str> {
        self.values.get(flag).map(String::as_str)
    }

    fn require(&self, flag: &str) -> Result<&str, CliError> {
        self.get(flag)
            .ok_or_else(|| CliError::Usage(format!("missing required flag `{flag}`")))
    }

    fn int(&self, flag: &str) -> Result<Option<i64>, CliError> {
        self.get(flag)
            .map(|v| {
                v.parse::<i64>()
                    .map_err(|e| CliError::Usage(format!("flag `{flag}`: {e}")))
            })
            .transpose()
    }

    fn json(&self) -> Result<bool, CliError> {
        match self.get("--format") {
            None | Some("text") => Ok(false),
            Some("json") => Ok(true),
            Some(other) => Err(CliError::Usage(format!(
                "flag `--format`: expected `text` or `json`, got `{other}`"
            ))),
        }
    }
}

fn read_set(flags: &Flags, signature: Signature) -> Result<LatticeSet, CliError> {
    let dim = flags
        .require("--dim")?
        .parse::<usize>()
        .map_err(|e| CliError::Usage(format!("flag `--dim`: {e}")))?;
    if dim == 0 {
        return Err(CliError::Usage("flag `--dim` must be at least 1".into()));
    }
    let points = parse_points(dim, flags.require("--points")?).map_err(CliError::Parse)?;
    LatticeSet::new(dim, signature, points).map_err(lattice_err)
}

fn read_file(flags: &Flags) -> Result<SystemFile, CliError> {
    let path = flags.require("--file")?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read `{path}`: {e}")))?;
    parse::parse(&text).map_err(|e| CliError::Parse(e.to_string()))
}

/// Resolves a `--ranking "s2,s1"` flag against declared translation names.
fn ranking_from_flag(
    spec: &str,
    translations: &[String],
    arity: usize,
) -> Result<Ranking, CliError> {
    let names: Vec<&str> = spec.split(',').map(str::trim).collect();
    if names.len() != translations.len() {
        return Err(CliError::Parse(format!(
            "ranking lists {} translations, but {} are declared",
            names.len(),
            translations.len()
        )));
    }
    let mut priority = Vec::with_capacity(names.len());
    for name in names {
        let axis = translations
            .iter()
            .position(|t| t == name)
            .ok_or_else(|| CliError::Parse(format!("undeclared translation `{name}`")))?;
        priority.push(axis);
    }
    Ranking::with_priority(priority, arity)
        .map_err(|e| CliError::Parse(e.to_string()))
}

fn file_ranking(file: &SystemFile, flags: &Flags) -> Result<Ranking, CliError> {
    match flags.get("--ranking") {
        Some(spec) => ranking_from_flag(spec, &file.translations, file.arity()),
        None => Ok(file.ranking()),
    }
}

struct SystemInput {
    polys: Vec<DiffPoly>,
    names: Names,
    ranking: Ranking,
    label: String,
}

/// A system comes either from a catalog entry or from a file (whose catalog
/// directive, if any, defers back to the catalog).
fn read_system(flags: &Flags) -> Result<SystemInput, CliError> {
    if let Some(entry) = flags.get("--catalog") {
        let scheme_name = flags.require("--scheme")?;
        let scheme = Scheme::parse(scheme_name).ok_or_else(|| {
            CliError::Usage(format!("unknown catalog entry: scheme `{scheme_name}`"))
        })?;
        let sys = catalog::difference_system(entry, scheme).map_err(schemes_err)?;
        let names = emit::catalog_names(&sys.translations, &sys.indeterminates);
        let ranking = match flags.get("--ranking") {
            Some(spec) => ranking_from_flag(spec, &sys.translations, sys.indeterminates.len())?,
            None => sys.ranking.clone(),
        };
        return Ok(SystemInput {
            polys: sys.polys,
            names,
            ranking,
            label: scheme.name().to_string(),
        });
    }
    let file = read_file(flags)?;
    if let Some((entry, scheme_name)) = &file.catalog {
        let scheme = Scheme::parse(scheme_name).ok_or_else(|| {
            CliError::Parse(format!("unknown scheme `{scheme_name}` in catalog directive"))
        })?;
        let sys = catalog::difference_system(entry, scheme).map_err(schemes_err)?;
        let names = emit::catalog_names(&sys.translations, &sys.indeterminates);
        return Ok(SystemInput {
            polys: sys.polys,
            names,
            ranking: sys.ranking.clone(),
            label: scheme.name().to_string(),
        });
    }
    if file.polys.is_empty() {
        return Err(CliError::Precondition(
            "the system file defines no polynomials".into(),
        ));
    }
    let ranking = file_ranking(&file, flags)?;
    Ok(SystemInput {
        polys: file.polys.iter().map(|(_, p)| p.clone()).collect(),
        names: file.names(),
        ranking,
        label: "file".to_string(),
    })
}

fn radius_for(flags: &Flags, polys: &[DiffPoly]) -> Result<(i64, i64), CliError> {
    let radius = flags.int("--radius")?.unwrap_or_else(|| default_radius(polys));
    let window = flags.int("--window")?.unwrap_or(DEFAULT_WINDOW);
    if radius < 0 || window < 0 {
        return Err(CliError::Usage("radius and window must be non-negative".into()));
    }
    Ok((radius, window))
}

/// Runs one command line; returns the full stdout text.
pub fn run(args: &[String], step_cap: Option<u64>) -> Result<String, CliError> {
    let Some(command) = args.first() else {
        return Err(CliError::Usage(USAGE.to_string()));
    };
    let flags = Flags::parse(&args[1..])?;
    let json = flags.json()?;
    match command.as_str() {
        "omega" => {
            let set = read_set(&flags, Signature::NonNegative)?;
            let poly = set.omega().map_err(lattice_err)?;
            Ok(emit::poly_output(&poly, json))
        }
        "phi" => {
            let set = read_set(&flags, Signature::Integer)?;
            let poly = set.phi().map_err(lattice_err)?;
            Ok(emit::poly_output(&poly, json))
        }
        "oracle-v" | "oracle-w" => {
            let r = flags
                .int("-r")?
                .ok_or_else(|| CliError::Usage("missing required flag `-r`".into()))?;
            let count = if command == "oracle-v" {
                read_set(&flags, Signature::NonNegative)?
                    .oracle_count_v(r)
                    .map_err(lattice_err)?
            } else {
                read_set(&flags, Signature::Integer)?
                    .oracle_count_w(r)
                    .map_err(lattice_err)?
            };
            if json {
                Ok(emit::json_to_output(&json!({ "count": count })))
            } else {
                Ok(format!("{count}\n"))
            }
        }
        "leader" => {
            let file = read_file(&flags)?;
            let name = flags.require("--poly")?;
            let poly = file
                .poly(name)
                .ok_or_else(|| CliError::Usage(format!("no polynomial named `{name}`")))?;
            let rk = file_ranking(&file, &flags)?;
            let leader = poly
                .leader(&rk)
                .map_err(|e| CliError::Precondition(e.to_string()))?;
            let rendered = term_string(&leader, &file.names());
            if json {
                Ok(emit::json_to_output(&json!({ "leader": rendered })))
            } else {
                Ok(format!("{rendered}\n"))
            }
        }
        "charset" => {
            let file = read_file(&flags)?;
            let rk = file_ranking(&file, &flags)?;
            let names = file.names();
            let cs = if let Some(name) = flags.get("--poly") {
                let poly = file
                    .poly(name)
                    .ok_or_else(|| CliError::Usage(format!("no polynomial named `{name}`")))?;
                let (radius, window) = radius_for(&flags, std::slice::from_ref(poly))?;
                orbit_minimal_charset(poly, &rk, radius, window).map_err(charset_err)?
            } else {
                if file.polys.is_empty() {
                    return Err(CliError::Precondition(
                        "the system file defines no polynomials".into(),
                    ));
                }
                let polys: Vec<DiffPoly> = file.polys.iter().map(|(_, p)| p.clone()).collect();
                let (radius, window) = radius_for(&flags, &polys)?;
                system_charset(&polys, &rk, radius, window).map_err(charset_err)?
            };
            if json {
                Ok(emit::json_to_output(&emit::charset_json(&cs, &names)))
            } else {
                Ok(emit::charset_text(&cs, &names))
            }
        }
        "reduce" => {
            let file = read_file(&flags)?;
            let name = flags.require("--poly")?;
            let dividend = file
                .poly(name)
                .ok_or_else(|| CliError::Usage(format!("no polynomial named `{name}`")))?
                .clone();
            let generators: Vec<DiffPoly> = file
                .polys
                .iter()
                .filter(|(n, _)| n != name)
                .map(|(_, p)| p.clone())
                .collect();
            if generators.is_empty() {
                return Err(CliError::Precondition(
                    "reduce needs at least one other polynomial to build a characteristic set"
                        .into(),
                ));
            }
            let rk = file_ranking(&file, &flags)?;
            let (radius, window) = radius_for(&flags, &generators)?;
            let cs = system_charset(&generators, &rk, radius, window).map_err(charset_err)?;
            let cap = step_cap.unwrap_or(DEFAULT_STEP_CAP);
            let res = reduce_remainder_with_cap(&dividend, &cs, cap).map_err(charset_err)?;
            let names = file.names();
            if json {
                Ok(emit::json_to_output(&json!({
                    "multiplier": poly_string(&res.multiplier, &names, &rk),
                    "remainder": poly_string(&res.remainder, &names, &rk),
                    "steps": res.steps,
                })))
            } else {
                Ok(format!(
                    "multiplier: {}\nremainder: {}\nsteps: {}\n",
                    poly_string(&res.multiplier, &names, &rk),
                    poly_string(&res.remainder, &names, &rk),
                    res.steps
                ))
            }
        }
        "strength" => {
            let input = read_system(&flags)?;
            let (radius, window) = radius_for(&flags, &input.polys)?;
            let report = strength(&input.label, &input.polys, &input.ranking, radius, window)
                .map_err(schemes_err)?;
            if json {
                Ok(emit::json_to_output(&emit::report_json(&report, &input.names)))
            } else {
                Ok(format!("{}\n", report.psi))
            }
        }
        "compare" => {
            let entry = flags.require("--catalog")?;
            let mut reports: Vec<StrengthReport> = Vec::new();
            let mut names = Names::generic(2, 1);
            for scheme in [Scheme::Forward, Scheme::Symmetric, Scheme::CrankNicolson] {
                let sys = catalog::difference_system(entry, scheme).map_err(schemes_err)?;
                names = emit::catalog_names(&sys.translations, &sys.indeterminates);
                let (radius, window) = radius_for(&flags, &sys.polys)?;
                let report = strength(scheme.name(), &sys.polys, &sys.ranking, radius, window)
                    .map_err(schemes_err)?;
                reports.push(report);
            }
            let groups = compare_schemes(reports);
            if json {
                Ok(emit::json_to_output(&emit::compare_json(&groups, &names)))
            } else {
                Ok(emit::compare_text(&groups))
            }
        }
        "discretize" => {
            let entry_name = flags.require("--catalog")?;
            let scheme_name = flags.require("--scheme")?;
            let scheme = Scheme::parse(scheme_name).ok_or_else(|| {
                CliError::Usage(format!("unknown catalog entry: scheme `{scheme_name}`"))
            })?;
            let sys = catalog::difference_system(entry_name, scheme).map_err(schemes_err)?;
            let names = emit::catalog_names(&sys.translations, &sys.indeterminates);
            let polys = match catalog::scheme_rules(scheme) {
                Some(rules) => {
                    let entry = catalog::pde(entry_name).map_err(schemes_err)?;
                    let raw = discretize(&entry.pde, &rules).map_err(schemes_err)?;
                    raw.iter()
                        .map(|p| p.rename_symbols(&entry.discretize_renames))
                        .collect()
                }
                // Crank-Nicolson exists only as its stored template.
                None => sys.polys.clone(),
            };
            if json {
                let rendered: Vec<String> = polys
                    .iter()
                    .map(|p| poly_string(p, &names, &sys.ranking))
                    .collect();
                Ok(emit::json_to_output(&json!({ "polys": rendered })))
            } else {
                Ok(emit::diff_polys_text(&polys, &names, &sys.ranking))
            }
        }
        "catalog-list" => {
            let mut out = String::new();
            for name in catalog::entry_names() {
                out.push_str(&format!(
                    "{name}: {}\n",
                    catalog::SCHEME_NAMES.join(", ")
                ));
            }
            Ok(out)
        }
        other => Err(CliError::Usage(format!(
            "unknown command `{other}`\n{USAGE}"
        ))),
    }
}
