//! Built-in PDEs, discretization rule sets, and ready difference systems.
//!
//! Scalar entries cover the diffusion equation and six reaction-diffusion
//! equations (Murray, Burgers, Fisher, Huxley, Burgers-Huxley,
//! FitzHugh-Nagumo); `kinetics-system` is a three-unknown reaction-kinetics
//! model. Forward and symmetric schemes are available both as substitution
//! rule sets (for [`discretize`](super::discretize)) and as stored template
//! equations; Crank-Nicolson is available only as a stored template, since
//! it is defined by its resulting equation rather than by per-derivative
//! substitutions.
//!
//! Several entries are *folded* into the common quasi-linear form
//! `u_xx + (a u + b) u_x + c u_t + F(u) = 0` with constant `c` even though
//! the textbook equation multiplies the time derivative by `u` (Murray,
//! Fisher, Huxley) or omits it (FitzHugh-Nagumo). Those entries carry
//! `form_mismatch = true` and a note describing the fold.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::{format, vec};

use num_rational::BigRational;

use super::{PDESpec, PdeTerm, SchemesError, StrengthReport};
use crate::charset::default_radius;
use crate::diffpoly::{ConstPoly, DiffPoly, Ranking, Shift, Term};

/// The three supported discretization schemes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    Forward,
    Symmetric,
    CrankNicolson,
}

impl Scheme {
    pub fn parse(name: &str) -> Option<Scheme> {
        match name {
            "forward" => Some(Scheme::Forward),
            "symmetric" => Some(Scheme::Symmetric),
            "crank-nicolson" => Some(Scheme::CrankNicolson),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Scheme::Forward => "forward",
            Scheme::Symmetric => "symmetric",
            Scheme::CrankNicolson => "crank-nicolson",
        }
    }
}

pub const SCHEME_NAMES: [&str; 3] = ["forward", "symmetric", "crank-nicolson"];

const ENTRY_NAMES: [&str; 8] = [
    "diffusion",
    "murray",
    "burgers",
    "fisher",
    "huxley",
    "burgers-huxley",
    "fitzhugh-nagumo",
    "kinetics-system",
];

/// Names of all catalog entries.
pub fn entry_names() -> &'static [&'static str] {
    &ENTRY_NAMES
}

/// A catalog PDE with its declared constants and fold metadata.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogPde {
    pub name: String,
    pub pde: PDESpec,
    pub constants: Vec<String>,
    /// True when the stored form folds a non-constant factor on the time
    /// derivative (or a missing time derivative) into a constant `c`.
    pub form_mismatch: bool,
    /// Human-readable description of any fold applied.
    pub note: Option<String>,
    /// Symbol renames that turn discretization output into the normalized
    /// template constants (e.g. the diffusion coefficient becomes `a`).
    pub discretize_renames: BTreeMap<String, String>,
}

/// A stored difference system ready for the strength pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogSystem {
    pub name: String,
    pub scheme: Scheme,
    pub polys: Vec<DiffPoly>,
    pub translations: Vec<String>,
    pub indeterminates: Vec<String>,
    pub constants: Vec<String>,
    pub ranking: Ranking,
}

fn sh(exps: [i64; 2]) -> Shift {
    Shift::new(exps.to_vec())
}

fn t2(k1: i64, k2: i64, var: usize) -> Term {
    Term::new(sh([k1, k2]), var)
}

fn ci(n: i64) -> ConstPoly {
    ConstPoly::from_int(n)
}

fn cs(name: &str) -> ConstPoly {
    ConstPoly::symbol(name)
}

/// The quasi-linear reaction-diffusion form
/// `u_xx + (a u + b) u_x + c u_t + F(u) = 0`.
#[derive(Debug, Clone)]
struct RdForm {
    a: ConstPoly,
    b: ConstPoly,
    c: ConstPoly,
    /// `F` as `(power of u, coefficient)` rows.
    f: Vec<(u32, ConstPoly)>,
}

fn rd_entry(name: &str) -> Option<(RdForm, Vec<String>, bool, Option<String>)> {
    let k = cs("k");
    let one = ci(1);
    match name {
        "murray" => Some((
            RdForm {
                a: ci(0),
                b: ci(0),
                c: cs("mu1"),
                f: vec![(1, cs("mu2")), (2, &ci(0) - &cs("mu3"))],
            },
            vec!["mu1".into(), "mu2".into(), "mu3".into()],
            true,
            Some("the u * du/dt product is folded into c * du/dt with c = mu1".into()),
        )),
        "burgers" => Some((
            RdForm {
                a: ci(-1),
                b: ci(0),
                c: ci(-1),
                f: vec![],
            },
            vec![],
            false,
            None,
        )),
        "fisher" => Some((
            RdForm {
                a: ci(0),
                b: ci(0),
                c: ci(-1),
                f: vec![(1, ci(1)), (2, ci(-1))],
            },
            vec![],
            true,
            Some("the u * du/dt product is folded into c * du/dt with c = -1".into()),
        )),
        "huxley" => Some((
            // F = -u(k-u)(u-1) = u^3 - (k+1)u^2 + k u
            RdForm {
                a: ci(0),
                b: ci(0),
                c: ci(-1),
                f: vec![(3, ci(1)), (2, &ci(0) - &(&k + &one)), (1, k.clone())],
            },
            vec!["k".into()],
            true,
            Some("the u * du/dt product is folded into c * du/dt with c = -1".into()),
        )),
        "burgers-huxley" => Some((
            // F = u(k-u)(u-1) = -u^3 + (k+1)u^2 - k u
            RdForm {
                a: ci(1),
                b: ci(0),
                c: ci(-1),
                f: vec![(3, ci(-1)), (2, &k + &one), (1, &ci(0) - &k)],
            },
            vec!["k".into()],
            false,
            None,
        )),
        "fitzhugh-nagumo" => Some((
            // F = u(1-u)(a-u) = u^3 - (a+1)u^2 + a u
            RdForm {
                a: ci(1),
                b: ci(0),
                c: ci(-1),
                f: vec![
                    (3, ci(1)),
                    (2, &ci(0) - &(&cs("a") + &one)),
                    (1, cs("a")),
                ],
            },
            vec!["a".into()],
            true,
            Some("the stated equation has no time derivative; one is folded in with c = -1".into()),
        )),
        _ => None,
    }
}

fn rd_pde(form: &RdForm) -> PDESpec {
    let mut terms = vec![
        PdeTerm {
            coeff: ci(1),
            factors: vec![(0, (2, 0))],
        },
        PdeTerm {
            coeff: form.a.clone(),
            factors: vec![(0, (0, 0)), (0, (1, 0))],
        },
        PdeTerm {
            coeff: form.b.clone(),
            factors: vec![(0, (1, 0))],
        },
        PdeTerm {
            coeff: form.c.clone(),
            factors: vec![(0, (0, 1))],
        },
    ];
    for (pow, coeff) in &form.f {
        terms.push(PdeTerm {
            coeff: coeff.clone(),
            factors: vec![(0, (0, 0)); *pow as usize],
        });
    }
    PDESpec {
        unknowns: vec!["u".into()],
        equations: vec![terms],
    }
}

/// Forward template: `s1^2 y + (a y + b - 2) s1 y + c s2 y + G(y)` with
/// `G = F - a y^2 - (b + c - 1) y`.
fn rd_forward(form: &RdForm) -> DiffPoly {
    let mut p = DiffPoly::zero(2, 1);
    p.add_monomial(crate::diffpoly::Monomial::from_term(t2(2, 0, 0)), ci(1));
    p.add_monomial(
        crate::diffpoly::Monomial::from_powers(vec![(t2(0, 0, 0), 1), (t2(1, 0, 0), 1)]),
        form.a.clone(),
    );
    p.add_monomial(
        crate::diffpoly::Monomial::from_term(t2(1, 0, 0)),
        &form.b - &ci(2),
    );
    p.add_monomial(crate::diffpoly::Monomial::from_term(t2(0, 1, 0)), form.c.clone());
    for (pow, coeff) in &form.f {
        p.add_monomial(
            crate::diffpoly::Monomial::from_powers(vec![(t2(0, 0, 0), *pow)]),
            coeff.clone(),
        );
    }
    p.add_monomial(
        crate::diffpoly::Monomial::from_powers(vec![(t2(0, 0, 0), 2)]),
        &ci(0) - &form.a,
    );
    let b_c_1 = &(&form.b + &form.c) - &ci(1);
    p.add_monomial(
        crate::diffpoly::Monomial::from_term(t2(0, 0, 0)),
        &ci(0) - &b_c_1,
    );
    p
}

/// Symmetric template:
/// `(a y + b + 1) s1 y + (1 - a y - b) s1^-1 y + c s2 y - c s2^-1 y + F(y)`.
fn rd_symmetric(form: &RdForm) -> DiffPoly {
    let mut p = DiffPoly::zero(2, 1);
    p.add_monomial(
        crate::diffpoly::Monomial::from_powers(vec![(t2(0, 0, 0), 1), (t2(1, 0, 0), 1)]),
        form.a.clone(),
    );
    p.add_monomial(
        crate::diffpoly::Monomial::from_term(t2(1, 0, 0)),
        &form.b + &ci(1),
    );
    p.add_monomial(
        crate::diffpoly::Monomial::from_powers(vec![(t2(0, 0, 0), 1), (t2(-1, 0, 0), 1)]),
        &ci(0) - &form.a,
    );
    p.add_monomial(
        crate::diffpoly::Monomial::from_term(t2(-1, 0, 0)),
        &ci(1) - &form.b,
    );
    p.add_monomial(crate::diffpoly::Monomial::from_term(t2(0, 1, 0)), form.c.clone());
    p.add_monomial(
        crate::diffpoly::Monomial::from_term(t2(0, -1, 0)),
        &ci(0) - &form.c,
    );
    for (pow, coeff) in &form.f {
        p.add_monomial(
            crate::diffpoly::Monomial::from_powers(vec![(t2(0, 0, 0), *pow)]),
            coeff.clone(),
        );
    }
    p
}

/// Crank-Nicolson template for one indeterminate:
/// `s1 s2 y + a1 s1^-1 s2 y + a2 s1 y + a3 s2 y + a4 s1^-1 y + a5`.
fn cn_equation(var: usize, arity: usize) -> DiffPoly {
    DiffPoly::from_rows(
        2,
        arity,
        vec![
            (ci(1), vec![(t2(1, 1, var), 1)]),
            (cs("a1"), vec![(t2(-1, 1, var), 1)]),
            (cs("a2"), vec![(t2(1, 0, var), 1)]),
            (cs("a3"), vec![(t2(0, 1, var), 1)]),
            (cs("a4"), vec![(t2(-1, 0, var), 1)]),
            (cs("a5"), vec![]),
        ],
    )
}

/// Reaction rows shared by the third kinetics equation:
/// `k1 y1 y3 - k1 y3^2 + k2 y2 - k2 y3`.
fn kinetics_reaction_rows() -> Vec<(ConstPoly, Vec<(Term, u32)>)> {
    vec![
        (cs("k1"), vec![(t2(0, 0, 0), 1), (t2(0, 0, 2), 1)]),
        (&ci(0) - &cs("k1"), vec![(t2(0, 0, 2), 2)]),
        (cs("k2"), vec![(t2(0, 0, 1), 1)]),
        (&ci(0) - &cs("k2"), vec![(t2(0, 0, 2), 1)]),
    ]
}

fn kinetics_forward() -> Vec<DiffPoly> {
    let linear = |var: usize| {
        DiffPoly::from_rows(
            2,
            3,
            vec![
                (ci(1), vec![(t2(2, 0, var), 1)]),
                (ci(-2), vec![(t2(1, 0, var), 1)]),
                (ci(-1), vec![(t2(0, 1, var), 1)]),
                (ci(2), vec![(t2(0, 0, var), 1)]),
            ],
        )
    };
    let mut third_rows = vec![
        (ci(1), vec![(t2(2, 0, 2), 1)]),
        (ci(-2), vec![(t2(1, 0, 2), 1)]),
        (ci(-1), vec![(t2(0, 1, 2), 1)]),
    ];
    third_rows.extend(kinetics_reaction_rows());
    vec![
        linear(0),
        linear(1),
        DiffPoly::from_rows(2, 3, third_rows),
    ]
}

fn kinetics_symmetric() -> Vec<DiffPoly> {
    let linear = |var: usize| {
        DiffPoly::from_rows(
            2,
            3,
            vec![
                (ci(1), vec![(t2(1, 0, var), 1)]),
                (ci(1), vec![(t2(-1, 0, var), 1)]),
                (ci(-1), vec![(t2(0, 1, var), 1)]),
                (ci(1), vec![(t2(0, -1, var), 1)]),
                (ci(-2), vec![(t2(0, 0, var), 1)]),
            ],
        )
    };
    let mut third_rows = vec![
        (ci(1), vec![(t2(1, 0, 2), 1)]),
        (ci(1), vec![(t2(-1, 0, 2), 1)]),
        (ci(-1), vec![(t2(0, 1, 2), 1)]),
        (ci(1), vec![(t2(0, -1, 2), 1)]),
        (ci(-2), vec![(t2(0, 0, 2), 1)]),
    ];
    third_rows.extend(kinetics_reaction_rows());
    vec![
        linear(0),
        linear(1),
        DiffPoly::from_rows(2, 3, third_rows),
    ]
}

fn kinetics_crank_nicolson() -> Vec<DiffPoly> {
    let mut third = cn_equation(2, 3);
    for (coeff, powers) in kinetics_reaction_rows() {
        third.add_monomial(crate::diffpoly::Monomial::from_powers(powers), coeff);
    }
    vec![cn_equation(0, 3), cn_equation(1, 3), third]
}

fn kinetics_pde() -> PDESpec {
    // Each equation is written as du_i/dt - d^2 u_i/dx^2 + reaction = 0. The
    // third equation's time derivative applies to u3.
    let diffusion_part = |var: usize| {
        vec![
            PdeTerm {
                coeff: ci(1),
                factors: vec![(var, (0, 1))],
            },
            PdeTerm {
                coeff: ci(-1),
                factors: vec![(var, (2, 0))],
            },
        ]
    };
    let mut third = diffusion_part(2);
    third.extend(vec![
        PdeTerm {
            coeff: cs("k1"),
            factors: vec![(2, (0, 0)), (2, (0, 0))],
        },
        PdeTerm {
            coeff: &ci(0) - &cs("k1"),
            factors: vec![(0, (0, 0)), (2, (0, 0))],
        },
        PdeTerm {
            coeff: &ci(0) - &cs("k2"),
            factors: vec![(1, (0, 0))],
        },
        PdeTerm {
            coeff: cs("k2"),
            factors: vec![(2, (0, 0))],
        },
    ]);
    PDESpec {
        unknowns: vec!["u1".into(), "u2".into(), "u3".into()],
        equations: vec![diffusion_part(0), diffusion_part(1), third],
    }
}

/// The built-in PDE under the given name.
pub fn pde(name: &str) -> Result<CatalogPde, SchemesError> {
    if let Some((form, constants, mismatch, note)) = rd_entry(name) {
        return Ok(CatalogPde {
            name: name.to_string(),
            pde: rd_pde(&form),
            constants,
            form_mismatch: mismatch,
            note,
            discretize_renames: BTreeMap::new(),
        });
    }
    match name {
        "diffusion" => {
            // u_t - c u_xx = 0.
            let pde = PDESpec {
                unknowns: vec!["u".into()],
                equations: vec![vec![
                    PdeTerm {
                        coeff: ci(1),
                        factors: vec![(0, (0, 1))],
                    },
                    PdeTerm {
                        coeff: &ci(0) - &cs("c"),
                        factors: vec![(0, (2, 0))],
                    },
                ]],
            };
            let mut renames = BTreeMap::new();
            renames.insert("c".to_string(), "a".to_string());
            Ok(CatalogPde {
                name: name.to_string(),
                pde,
                constants: vec!["c".into()],
                form_mismatch: false,
                note: None,
                discretize_renames: renames,
            })
        }
        "kinetics-system" => Ok(CatalogPde {
            name: name.to_string(),
            pde: kinetics_pde(),
            constants: vec!["k1".into(), "k2".into()],
            form_mismatch: false,
            note: Some(
                "the third equation's time derivative is taken on u3, matching the stored difference system"
                    .into(),
            ),
            discretize_renames: BTreeMap::new(),
        }),
        _ => Err(SchemesError::UnknownEntry {
            name: name.to_string(),
        }),
    }
}

/// Substitution rule set for the scheme, or `None` for Crank-Nicolson,
/// which exists only as stored template equations.
pub fn scheme_rules(scheme: Scheme) -> Option<SchemeRules> {
    let one = BigRational::from_integer(1.into());
    let neg = |r: &BigRational| -r;
    let mut rules: BTreeMap<(u32, u32), Vec<(Shift, BigRational)>> = BTreeMap::new();
    match scheme {
        Scheme::Forward => {
            rules.insert((1, 0), vec![(sh([1, 0]), one.clone()), (sh([0, 0]), neg(&one))]);
            rules.insert(
                (2, 0),
                vec![
                    (sh([2, 0]), one.clone()),
                    (sh([1, 0]), BigRational::from_integer((-2).into())),
                    (sh([0, 0]), one.clone()),
                ],
            );
            rules.insert((0, 1), vec![(sh([0, 1]), one.clone()), (sh([0, 0]), neg(&one))]);
        }
        Scheme::Symmetric => {
            rules.insert((1, 0), vec![(sh([1, 0]), one.clone()), (sh([-1, 0]), neg(&one))]);
            rules.insert(
                (2, 0),
                vec![
                    (sh([1, 0]), one.clone()),
                    (sh([0, 0]), BigRational::from_integer((-2).into())),
                    (sh([-1, 0]), one.clone()),
                ],
            );
            rules.insert((0, 1), vec![(sh([0, 1]), one.clone()), (sh([0, -1]), neg(&one))]);
        }
        Scheme::CrankNicolson => return None,
    }
    Some(SchemeRules::new(scheme.name().to_string(), 2, rules))
}

use super::SchemeRules;

/// The default ranking for a catalog system: the symmetric templates of the
/// reaction-diffusion family are quasi-linear only once the time translation
/// outranks the space translation, so those entries switch priority; all
/// other combinations use the standard ranking.
pub fn default_ranking(name: &str, scheme: Scheme, m: usize, n: usize) -> Ranking {
    let rd_family = matches!(
        name,
        "murray" | "burgers" | "fisher" | "huxley" | "burgers-huxley" | "fitzhugh-nagumo"
    );
    if scheme == Scheme::Symmetric && rd_family {
        Ranking::with_priority(vec![1, 0], n).expect("valid priority")
    } else {
        Ranking::standard(m, n)
    }
}

/// The stored difference system for a `(name, scheme)` pair.
pub fn difference_system(name: &str, scheme: Scheme) -> Result<CatalogSystem, SchemesError> {
    let translations = vec!["s1".to_string(), "s2".to_string()];
    let build = |polys: Vec<DiffPoly>, indets: Vec<String>, constants: Vec<String>| {
        let n = indets.len();
        CatalogSystem {
            name: name.to_string(),
            scheme,
            polys,
            translations: translations.clone(),
            indeterminates: indets,
            constants,
            ranking: default_ranking(name, scheme, 2, n),
        }
    };
    let scalar = vec!["y".to_string()];
    if let Some((form, constants, _, _)) = rd_entry(name) {
        let sys = match scheme {
            Scheme::Forward => build(vec![rd_forward(&form)], scalar, constants),
            Scheme::Symmetric => build(vec![rd_symmetric(&form)], scalar, constants),
            Scheme::CrankNicolson => build(
                vec![cn_equation(0, 1)],
                scalar,
                vec!["a1".into(), "a2".into(), "a3".into(), "a4".into(), "a5".into()],
            ),
        };
        return Ok(sys);
    }
    match name {
        "diffusion" => {
            let a = cs("a");
            let sys = match scheme {
                Scheme::Forward => {
                    // a s1^2 y - 2a s1 y - s2 y + (a+1) y
                    let p = DiffPoly::from_rows(
                        2,
                        1,
                        vec![
                            (a.clone(), vec![(t2(2, 0, 0), 1)]),
                            (&ci(-2) * &a, vec![(t2(1, 0, 0), 1)]),
                            (ci(-1), vec![(t2(0, 1, 0), 1)]),
                            (&a + &ci(1), vec![(t2(0, 0, 0), 1)]),
                        ],
                    );
                    build(vec![p], scalar, vec!["a".into()])
                }
                Scheme::Symmetric => {
                    // a s1 y + a s1^-1 y - s2 y + s2^-1 y - 2a y
                    let p = DiffPoly::from_rows(
                        2,
                        1,
                        vec![
                            (a.clone(), vec![(t2(1, 0, 0), 1)]),
                            (a.clone(), vec![(t2(-1, 0, 0), 1)]),
                            (ci(-1), vec![(t2(0, 1, 0), 1)]),
                            (ci(1), vec![(t2(0, -1, 0), 1)]),
                            (&ci(-2) * &a, vec![(t2(0, 0, 0), 1)]),
                        ],
                    );
                    build(vec![p], scalar, vec!["a".into()])
                }
                Scheme::CrankNicolson => build(
                    vec![cn_equation(0, 1)],
                    scalar,
                    vec!["a1".into(), "a2".into(), "a3".into(), "a4".into(), "a5".into()],
                ),
            };
            Ok(sys)
        }
        "kinetics-system" => {
            let indets = vec!["y1".to_string(), "y2".to_string(), "y3".to_string()];
            let kin_consts = vec!["k1".to_string(), "k2".to_string()];
            let sys = match scheme {
                Scheme::Forward => build(kinetics_forward(), indets, kin_consts),
                Scheme::Symmetric => build(kinetics_symmetric(), indets, kin_consts),
                Scheme::CrankNicolson => build(
                    kinetics_crank_nicolson(),
                    indets,
                    vec![
                        "a1".into(),
                        "a2".into(),
                        "a3".into(),
                        "a4".into(),
                        "a5".into(),
                        "k1".into(),
                        "k2".into(),
                    ],
                ),
            };
            Ok(sys)
        }
        _ => Err(SchemesError::UnknownEntry {
            name: format!("{name}/{}", scheme.name()),
        }),
    }
}

/// Convenience: strength of a catalog system with its default ranking and
/// (unless overridden) the default orbit radius.
pub fn catalog_strength(
    name: &str,
    scheme: Scheme,
    radius: Option<i64>,
    window: i64,
) -> Result<StrengthReport, SchemesError> {
    let sys = difference_system(name, scheme)?;
    let r = radius.unwrap_or_else(|| default_radius(&sys.polys));
    super::strength(scheme.name(), &sys.polys, &sys.ranking, r, window)
}
