//! Parser for system files: declarations, named polynomial definitions, and
//! an optional catalog directive.
//!
//! Grammar (whitespace-insensitive; `*` is optional between adjacent
//! factors):
//!
//! ```text
//! file     := item*
//! item     := decl | stmt
//! decl     := ("constants:" | "translations:" | "indeterminates:" | "ranking:") namelist
//! stmt     := "poly" NAME "=" expr
//!           | "catalog" DASHED-NAME DASHED-NAME
//! namelist := NAME ("," NAME)*
//! expr     := ["-"] term (("+" | "-") term)*
//! term     := factor ("*"? factor)*
//! factor   := RATIONAL | CONSTNAME | "(" expr ")" | diffterm
//! diffterm := (TRANSNAME ("^" SIGNEDINT)?)* INDETNAME
//! RATIONAL := INT ("/" INT)?
//! ```
//!
//! Every identifier in an expression must be declared as a constant,
//! translation, or indeterminate first.

use std::collections::BTreeMap;

use delta_strength_core::{ConstPoly, DiffPoly, Ranking, Shift, Term};
use num_bigint::BigInt;
use num_rational::BigRational;

use crate::syntax::Names;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    UndeclaredSymbol(String),
    Arity(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub kind: ParseErrorKind,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let what = match &self.kind {
            ParseErrorKind::Syntax(msg) => format!("syntax error: {msg}"),
            ParseErrorKind::UndeclaredSymbol(name) => format!("undeclared symbol `{name}`"),
            ParseErrorKind::Arity(msg) => format!("arity error: {msg}"),
        };
        write!(f, "line {}, column {}: {what}", self.line, self.col)
    }
}

/// A fully resolved system file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemFile {
    pub constants: Vec<String>,
    pub translations: Vec<String>,
    pub indeterminates: Vec<String>,
    /// Translation priority indices (most significant first), when a
    /// `ranking:` declaration is present.
    pub ranking_priority: Option<Vec<usize>>,
    pub polys: Vec<(String, DiffPoly)>,
    /// `catalog NAME SCHEME` directive, if present.
    pub catalog: Option<(String, String)>,
}

impl SystemFile {
    pub fn names(&self) -> Names {
        Names {
            translations: self.translations.clone(),
            indeterminates: self.indeterminates.clone(),
        }
    }

    pub fn dim(&self) -> usize {
        self.translations.len()
    }

    pub fn arity(&self) -> usize {
        self.indeterminates.len()
    }

    /// The ranking declared in the file, or the standard one.
    pub fn ranking(&self) -> Ranking {
        match &self.ranking_priority {
            Some(priority) => Ranking::with_priority(priority.clone(), self.arity())
                .expect("validated at parse time"),
            None => Ranking::standard(self.dim(), self.arity()),
        }
    }

    pub fn poly(&self, name: &str) -> Option<&DiffPoly> {
        self.polys.iter().find(|(n, _)| n == name).map(|(_, p)| p)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(String),
    Punct(char),
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            col += 1;
            continue;
        }
        let start_col = col;
        if c.is_ascii_alphabetic() {
            let mut name = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    name.push(c);
                    chars.next();
                    col += 1;
                } else {
                    break;
                }
            }
            out.push(Spanned {
                tok: Tok::Ident(name),
                line,
                col: start_col,
            });
            continue;
        }
        if c.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_digit() {
                    digits.push(c);
                    chars.next();
                    col += 1;
                } else {
                    break;
                }
            }
            out.push(Spanned {
                tok: Tok::Int(digits),
                line,
                col: start_col,
            });
            continue;
        }
        if "+-*/^()=,:".contains(c) {
            chars.next();
            col += 1;
            out.push(Spanned {
                tok: Tok::Punct(c),
                line,
                col: start_col,
            });
            continue;
        }
        return Err(ParseError {
            line,
            col,
            kind: ParseErrorKind::Syntax(format!("unexpected character `{c}`")),
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum SymbolKind {
    Constant,
    Translation(usize),
    Indeterminate(usize),
}

/// Keywords; with `*` optional between factors these must never double as
/// symbol names, or `... + y` followed by `poly B = ...` would parse as a
/// product.
const RESERVED: [&str; 6] = [
    "constants",
    "translations",
    "indeterminates",
    "ranking",
    "poly",
    "catalog",
];

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    symbols: BTreeMap<String, SymbolKind>,
    constants: Vec<String>,
    translations: Vec<String>,
    indeterminates: Vec<String>,
    ranking_names: Option<(Vec<String>, usize, usize)>,
    polys: Vec<(String, DiffPoly)>,
    catalog: Option<(String, String)>,
}

impl Parser {
    fn eof_error(&self, what: &str) -> ParseError {
        let (line, col) = self
            .toks
            .last()
            .map(|s| (s.line, s.col + 1))
            .unwrap_or((1, 1));
        ParseError {
            line,
            col,
            kind: ParseErrorKind::Syntax(format!("unexpected end of input, expected {what}")),
        }
    }

    fn error_at(&self, idx: usize, kind: ParseErrorKind) -> ParseError {
        let (line, col) = self
            .toks
            .get(idx)
            .map(|s| (s.line, s.col))
            .unwrap_or((1, 1));
        ParseError { line, col, kind }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn next(&mut self, what: &str) -> Result<Tok, ParseError> {
        let tok = self
            .toks
            .get(self.pos)
            .map(|s| s.tok.clone())
            .ok_or_else(|| self.eof_error(what))?;
        self.pos += 1;
        Ok(tok)
    }

    fn expect_punct(&mut self, c: char) -> Result<(), ParseError> {
        match self.next(&format!("`{c}`"))? {
            Tok::Punct(p) if p == c => Ok(()),
            other => Err(self.error_at(
                self.pos - 1,
                ParseErrorKind::Syntax(format!("expected `{c}`, found {other:?}")),
            )),
        }
    }

    fn expect_ident(&mut self, what: &str) -> Result<String, ParseError> {
        match self.next(what)? {
            Tok::Ident(name) => Ok(name),
            other => Err(self.error_at(
                self.pos - 1,
                ParseErrorKind::Syntax(format!("expected {what}, found {other:?}")),
            )),
        }
    }

    /// Reads `name(-name)*`, for catalog entries like `kinetics-system`.
    fn dashed_name(&mut self) -> Result<String, ParseError> {
        let mut name = self.expect_ident("a name")?;
        while self.peek() == Some(&Tok::Punct('-')) {
            self.pos += 1;
            name.push('-');
            name.push_str(&self.expect_ident("a name")?);
        }
        Ok(name)
    }

    fn namelist(&mut self) -> Result<Vec<String>, ParseError> {
        let mut names = vec![self.expect_ident("a name")?];
        while self.peek() == Some(&Tok::Punct(',')) {
            self.pos += 1;
            names.push(self.expect_ident("a name")?);
        }
        Ok(names)
    }

    fn declare(&mut self, names: Vec<String>, class: &str) -> Result<(), ParseError> {
        for name in names {
            if RESERVED.contains(&name.as_str()) {
                return Err(self.error_at(
                    self.pos.saturating_sub(1),
                    ParseErrorKind::Syntax(format!("`{name}` is a reserved word")),
                ));
            }
            if self.symbols.contains_key(&name) {
                return Err(self.error_at(
                    self.pos.saturating_sub(1),
                    ParseErrorKind::Syntax(format!("symbol `{name}` declared twice")),
                ));
            }
            let kind = match class {
                "constants" => SymbolKind::Constant,
                "translations" => SymbolKind::Translation(self.translations.len()),
                _ => SymbolKind::Indeterminate(self.indeterminates.len()),
            };
            self.symbols.insert(name.clone(), kind);
            match class {
                "constants" => self.constants.push(name),
                "translations" => self.translations.push(name),
                _ => self.indeterminates.push(name),
            }
        }
        Ok(())
    }

    fn dim(&self) -> usize {
        self.translations.len()
    }

    fn arity(&self) -> usize {
        self.indeterminates.len()
    }

    fn parse_expr(&mut self) -> Result<DiffPoly, ParseError> {
        let mut negate_first = false;
        if self.peek() == Some(&Tok::Punct('-')) {
            self.pos += 1;
            negate_first = true;
        }
        let mut acc = self.parse_term()?;
        if negate_first {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Tok::Punct('+')) => {
                    self.pos += 1;
                    let term = self.parse_term()?;
                    acc = acc.add(&term);
                }
                Some(Tok::Punct('-')) => {
                    self.pos += 1;
                    let term = self.parse_term()?;
                    acc = acc.sub(&term);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn starts_factor(&self) -> bool {
        match self.peek() {
            Some(Tok::Ident(name)) => !RESERVED.contains(&name.as_str()),
            Some(Tok::Int(_)) | Some(Tok::Punct('(')) => true,
            _ => false,
        }
    }

    fn parse_term(&mut self) -> Result<DiffPoly, ParseError> {
        let mut acc = self.parse_factor()?;
        loop {
            if self.peek() == Some(&Tok::Punct('*')) {
                self.pos += 1;
                let f = self.parse_factor()?;
                acc = acc.mul(&f);
            } else if self.starts_factor() {
                let f = self.parse_factor()?;
                acc = acc.mul(&f);
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn parse_rational(&mut self) -> Result<BigRational, ParseError> {
        let digits = match self.next("a number")? {
            Tok::Int(d) => d,
            other => {
                return Err(self.error_at(
                    self.pos - 1,
                    ParseErrorKind::Syntax(format!("expected a number, found {other:?}")),
                ))
            }
        };
        let numer: BigInt = digits.parse().expect("lexer produced digits");
        if self.peek() == Some(&Tok::Punct('/')) {
            self.pos += 1;
            let denom_digits = match self.next("a denominator")? {
                Tok::Int(d) => d,
                other => {
                    return Err(self.error_at(
                        self.pos - 1,
                        ParseErrorKind::Syntax(format!(
                            "expected a denominator, found {other:?}"
                        )),
                    ))
                }
            };
            let denom: BigInt = denom_digits.parse().expect("lexer produced digits");
            if denom == BigInt::from(0) {
                return Err(self.error_at(
                    self.pos - 1,
                    ParseErrorKind::Syntax("zero denominator".to_string()),
                ));
            }
            Ok(BigRational::new(numer, denom))
        } else {
            Ok(BigRational::from_integer(numer))
        }
    }

    fn parse_factor(&mut self) -> Result<DiffPoly, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Int(_)) => {
                let r = self.parse_rational()?;
                Ok(DiffPoly::constant(
                    self.dim(),
                    self.arity(),
                    ConstPoly::from_rational(r),
                ))
            }
            Some(Tok::Punct('(')) => {
                self.pos += 1;
                let inner = self.parse_expr()?;
                self.expect_punct(')')?;
                Ok(inner)
            }
            Some(Tok::Ident(name)) => {
                let idx = self.pos;
                match self.symbols.get(&name).copied() {
                    Some(SymbolKind::Constant) => {
                        self.pos += 1;
                        Ok(DiffPoly::constant(
                            self.dim(),
                            self.arity(),
                            ConstPoly::symbol(&name),
                        ))
                    }
                    Some(SymbolKind::Indeterminate(var)) => {
                        self.pos += 1;
                        Ok(DiffPoly::term(
                            self.dim(),
                            self.arity(),
                            Term::new(Shift::identity(self.dim()), var),
                        ))
                    }
                    Some(SymbolKind::Translation(_)) => self.parse_diffterm(),
                    None => Err(self.error_at(idx, ParseErrorKind::UndeclaredSymbol(name))),
                }
            }
            _ => Err(self.eof_error("a factor")),
        }
    }

    /// Parses `(TRANS (^ INT)?)* INDET` starting at a translation symbol.
    fn parse_diffterm(&mut self) -> Result<DiffPoly, ParseError> {
        let mut exps = vec![0i64; self.dim()];
        loop {
            let idx = self.pos;
            let name = self.expect_ident("a translation or indeterminate")?;
            match self.symbols.get(&name).copied() {
                Some(SymbolKind::Translation(axis)) => {
                    let mut power = 1i64;
                    if self.peek() == Some(&Tok::Punct('^')) {
                        self.pos += 1;
                        let mut negative = false;
                        if self.peek() == Some(&Tok::Punct('-')) {
                            self.pos += 1;
                            negative = true;
                        }
                        let digits = match self.next("an exponent")? {
                            Tok::Int(d) => d,
                            other => {
                                return Err(self.error_at(
                                    self.pos - 1,
                                    ParseErrorKind::Syntax(format!(
                                        "expected an exponent, found {other:?}"
                                    )),
                                ))
                            }
                        };
                        power = digits.parse::<i64>().map_err(|e| {
                            self.error_at(
                                self.pos - 1,
                                ParseErrorKind::Syntax(format!("exponent out of range: {e}")),
                            )
                        })?;
                        if negative {
                            power = -power;
                        }
                    }
                    exps[axis] += power;
                    // A `*` may separate the factors of one term.
                    if self.peek() == Some(&Tok::Punct('*')) {
                        self.pos += 1;
                    }
                }
                Some(SymbolKind::Indeterminate(var)) => {
                    return Ok(DiffPoly::term(
                        self.dim(),
                        self.arity(),
                        Term::new(Shift::new(exps), var),
                    ));
                }
                Some(SymbolKind::Constant) => {
                    return Err(self.error_at(
                        idx,
                        ParseErrorKind::Syntax(format!(
                            "constant `{name}` cannot appear under a translation"
                        )),
                    ))
                }
                None => return Err(self.error_at(idx, ParseErrorKind::UndeclaredSymbol(name))),
            }
        }
    }

    fn parse_file(&mut self) -> Result<(), ParseError> {
        while let Some(tok) = self.peek().cloned() {
            match tok {
                Tok::Ident(word) => match word.as_str() {
                    "constants" | "translations" | "indeterminates" => {
                        self.pos += 1;
                        self.expect_punct(':')?;
                        let names = self.namelist()?;
                        self.declare(names, &word)?;
                    }
                    "ranking" => {
                        self.pos += 1;
                        let at = self.pos;
                        self.expect_punct(':')?;
                        let names = self.namelist()?;
                        self.ranking_names = Some((names, self.toks[at].line, self.toks[at].col));
                    }
                    "poly" => {
                        self.pos += 1;
                        let name = self.expect_ident("a polynomial name")?;
                        self.expect_punct('=')?;
                        let poly = self.parse_expr()?;
                        if self.polys.iter().any(|(n, _)| *n == name) {
                            return Err(self.error_at(
                                self.pos.saturating_sub(1),
                                ParseErrorKind::Syntax(format!(
                                    "polynomial `{name}` defined twice"
                                )),
                            ));
                        }
                        self.polys.push((name, poly));
                    }
                    "catalog" => {
                        self.pos += 1;
                        let entry = self.dashed_name()?;
                        let scheme = self.dashed_name()?;
                        self.catalog = Some((entry, scheme));
                    }
                    _ => {
                        return Err(self.error_at(
                            self.pos,
                            ParseErrorKind::Syntax(format!(
                                "expected a declaration or statement, found `{word}`"
                            )),
                        ))
                    }
                },
                other => {
                    return Err(self.error_at(
                        self.pos,
                        ParseErrorKind::Syntax(format!("unexpected token {other:?}")),
                    ))
                }
            }
        }
        Ok(())
    }

    fn resolve_ranking(&self) -> Result<Option<Vec<usize>>, ParseError> {
        let Some((names, line, col)) = &self.ranking_names else {
            return Ok(None);
        };
        if names.len() != self.translations.len() {
            return Err(ParseError {
                line: *line,
                col: *col,
                kind: ParseErrorKind::Arity(format!(
                    "ranking lists {} translations, but {} are declared",
                    names.len(),
                    self.translations.len()
                )),
            });
        }
        let mut priority = Vec::with_capacity(names.len());
        for name in names {
            match self.symbols.get(name) {
                Some(SymbolKind::Translation(axis)) => priority.push(*axis),
                _ => {
                    return Err(ParseError {
                        line: *line,
                        col: *col,
                        kind: ParseErrorKind::UndeclaredSymbol(name.clone()),
                    })
                }
            }
        }
        let mut seen = vec![false; priority.len()];
        for &axis in &priority {
            if seen[axis] {
                return Err(ParseError {
                    line: *line,
                    col: *col,
                    kind: ParseErrorKind::Arity(format!(
                        "ranking repeats translation `{}`",
                        self.translations[axis]
                    )),
                });
            }
            seen[axis] = true;
        }
        Ok(Some(priority))
    }
}

/// Parses a system file into fully resolved difference polynomials.
pub fn parse(text: &str) -> Result<SystemFile, ParseError> {
    let toks = lex(text)?;
    let mut parser = Parser {
        toks,
        pos: 0,
        symbols: BTreeMap::new(),
        constants: Vec::new(),
        translations: Vec::new(),
        indeterminates: Vec::new(),
        ranking_names: None,
        polys: Vec::new(),
        catalog: None,
    };
    parser.parse_file()?;
    if !parser.polys.is_empty() && (parser.dim() == 0 || parser.arity() == 0) {
        return Err(ParseError {
            line: 1,
            col: 1,
            kind: ParseErrorKind::Arity(
                "polynomial definitions need at least one translation and one indeterminate"
                    .to_string(),
            ),
        });
    }
    if parser.catalog.is_some() && !parser.polys.is_empty() {
        return Err(ParseError {
            line: 1,
            col: 1,
            kind: ParseErrorKind::Syntax(
                "a catalog directive cannot be combined with poly definitions".to_string(),
            ),
        });
    }
    let ranking_priority = parser.resolve_ranking()?;
    Ok(SystemFile {
        constants: parser.constants,
        translations: parser.translations,
        indeterminates: parser.indeterminates,
        ranking_priority,
        polys: parser.polys,
        catalog: parser.catalog,
    })
}
