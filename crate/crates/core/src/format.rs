//! Text formats: algebra presentations, points, vectors, directions,
//! resolution steps, scan families and ideal listings.
//!
//! Algebra files:
//!
//! ```text
//! # comments run to end of line
//! algebra comm2            (optional header)
//! generators x y
//! relations                (optional section, one polynomial per line)
//!   x*y - y*x
//! end
//! ```
//!
//! Polynomials use `*` for products, `+`/`-`, rational coefficients `p/q`,
//! `^` for positive powers and parentheses.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cohomology::ResolutionStep;
use crate::error::{Error, Result};
use crate::exactla::{Rational, RationalMatrix};
use crate::ncalg::{BimoduleElement, NcPolynomial, Presentation, Word};
use crate::repscheme::{IdealGenerator, RepPoint};

const KEYWORDS: [&str; 4] = ["algebra", "generators", "relations", "end"];

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Pipe,
    Comma,
    Newline,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier '{s}'"),
            Tok::Int(v) => format!("number {v}"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Pipe => "'|'".into(),
            Tok::Comma => "','".into(),
            Tok::Newline => "end of line".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn parse_error(line: usize, column: usize, message: impl Into<String>, expected: &[&str]) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
        expected: expected.iter().map(|s| s.to_string()).collect(),
    }
}

fn lex(text: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    for (li, raw) in text.lines().enumerate() {
        let line = li + 1;
        let content = raw.split('#').next().unwrap_or("");
        let chars: Vec<char> = content.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let column = i + 1;
            let simple = match c {
                '+' => Some(Tok::Plus),
                '-' => Some(Tok::Minus),
                '*' => Some(Tok::Star),
                '/' => Some(Tok::Slash),
                '^' => Some(Tok::Caret),
                '(' => Some(Tok::LParen),
                ')' => Some(Tok::RParen),
                '|' => Some(Tok::Pipe),
                ',' => Some(Tok::Comma),
                _ => None,
            };
            if let Some(tok) = simple {
                out.push(Spanned { tok, line, column });
                i += 1;
            } else if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                let value = BigInt::from_str(&digits).expect("ascii digits");
                out.push(Spanned {
                    tok: Tok::Int(value),
                    line,
                    column,
                });
            } else if c.is_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Spanned {
                    tok: Tok::Ident(chars[start..i].iter().collect()),
                    line,
                    column,
                });
            } else {
                return Err(parse_error(line, column, format!("unexpected character '{c}'"), &[]));
            }
        }
        out.push(Spanned {
            tok: Tok::Newline,
            line,
            column: chars.len() + 1,
        });
    }
    let line = out.last().map_or(1, |s| s.line + 1);
    out.push(Spanned {
        tok: Tok::Eof,
        line,
        column: 1,
    });
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Spanned>,
    pos: usize,
    names: &'a [String],
}

impl<'a> Parser<'a> {
    fn new(toks: Vec<Spanned>, names: &'a [String]) -> Self {
        Self { toks, pos: 0, names }
    }

    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, expected: &[&str]) -> Error {
        let t = self.peek();
        parse_error(t.line, t.column, format!("unexpected {}", t.tok.describe()), expected)
    }

    fn skip_newlines(&mut self) {
        while self.peek().tok == Tok::Newline {
            self.bump();
        }
    }

    fn expect_newline(&mut self) -> Result<()> {
        match self.peek().tok {
            Tok::Newline => {
                self.bump();
                Ok(())
            }
            Tok::Eof => Ok(()),
            _ => Err(self.unexpected(&["end of line"])),
        }
    }

    fn exponent(&mut self) -> Result<u32> {
        let t = self.bump();
        match t.tok {
            Tok::Int(v) if v > BigInt::zero() => u32::try_from(v)
                .map_err(|_| parse_error(t.line, t.column, "exponent too large", &[])),
            _ => Err(parse_error(
                t.line,
                t.column,
                format!("unexpected {}", t.tok.describe()),
                &["positive integer exponent"],
            )),
        }
    }

    fn rational(&mut self) -> Result<Rational> {
        let t = self.bump();
        let Tok::Int(numer) = t.tok else {
            return Err(parse_error(t.line, t.column, "expected a number", &["number"]));
        };
        if self.peek().tok == Tok::Slash {
            self.bump();
            let d = self.bump();
            match d.tok {
                Tok::Int(denom) if !denom.is_zero() => Ok(Rational::new(numer, denom)),
                Tok::Int(_) => Err(parse_error(d.line, d.column, "zero denominator", &[])),
                other => Err(parse_error(
                    d.line,
                    d.column,
                    format!("unexpected {}", other.describe()),
                    &["denominator"],
                )),
            }
        } else {
            Ok(Rational::from_integer(numer))
        }
    }

    fn generator(&mut self) -> Result<usize> {
        let t = self.bump();
        match &t.tok {
            Tok::Ident(name) => self.names.iter().position(|g| g == name).ok_or_else(|| {
                parse_error(t.line, t.column, format!("unknown identifier '{name}'"), &["generator name"])
            }),
            other => Err(parse_error(
                t.line,
                t.column,
                format!("unexpected {}", other.describe()),
                &["generator name"],
            )),
        }
    }

    fn factor(&mut self) -> Result<NcPolynomial> {
        match self.peek().tok.clone() {
            Tok::Int(_) => Ok(NcPolynomial::constant(self.rational()?)),
            Tok::Ident(_) => {
                let l = self.generator()?;
                let base = NcPolynomial::generator(l);
                self.maybe_power(base)
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if self.peek().tok != Tok::RParen {
                    return Err(self.unexpected(&["')'", "'+'", "'-'", "'*'"]));
                }
                self.bump();
                self.maybe_power(inner)
            }
            _ => Err(self.unexpected(&["number", "generator name", "'('"])),
        }
    }

    fn maybe_power(&mut self, base: NcPolynomial) -> Result<NcPolynomial> {
        if self.peek().tok == Tok::Caret {
            self.bump();
            let e = self.exponent()?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn term(&mut self) -> Result<NcPolynomial> {
        let mut acc = self.factor()?;
        while self.peek().tok == Tok::Star {
            self.bump();
            acc = acc.multiply(&self.factor()?);
        }
        Ok(acc)
    }

    fn expr(&mut self) -> Result<NcPolynomial> {
        let mut negate = false;
        match self.peek().tok {
            Tok::Minus => {
                self.bump();
                negate = true;
            }
            Tok::Plus => {
                self.bump();
            }
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { first.neg() } else { first };
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn keyword(&self) -> Option<&str> {
        match &self.peek().tok {
            Tok::Ident(s) if KEYWORDS.contains(&s.as_str()) => Some(s.as_str()),
            _ => None,
        }
    }
}

/// A parsed algebra file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraFile {
    pub name: Option<String>,
    pub presentation: Presentation,
    /// `(line, column)` of each relation in the source.
    pub relation_positions: Vec<(usize, usize)>,
}

pub fn parse_algebra_file(text: &str) -> Result<AlgebraFile> {
    let toks = lex(text)?;
    let mut header = Parser::new(toks, &[]);
    header.skip_newlines();

    let mut name = None;
    if header.keyword() == Some("algebra") {
        header.bump();
        let t = header.bump();
        match t.tok {
            Tok::Ident(s) => name = Some(s),
            other => {
                return Err(parse_error(
                    t.line,
                    t.column,
                    format!("unexpected {}", other.describe()),
                    &["algebra name"],
                ))
            }
        }
        header.expect_newline()?;
        header.skip_newlines();
    }

    if header.keyword() != Some("generators") {
        let t = header.peek();
        return Err(parse_error(
            t.line,
            t.column,
            "generators section missing",
            &["'generators'"],
        ));
    }
    header.bump();
    let mut names: Vec<String> = Vec::new();
    loop {
        let t = header.peek().clone();
        match &t.tok {
            Tok::Ident(s) if KEYWORDS.contains(&s.as_str()) => {
                return Err(parse_error(
                    t.line,
                    t.column,
                    format!("'{s}' is reserved and cannot name a generator"),
                    &["generator name"],
                ));
            }
            Tok::Ident(s) => {
                if names.contains(s) {
                    return Err(parse_error(
                        t.line,
                        t.column,
                        format!("duplicate generator name '{s}'"),
                        &[],
                    ));
                }
                names.push(s.clone());
                header.bump();
            }
            Tok::Comma => {
                header.bump();
            }
            Tok::Newline | Tok::Eof => break,
            _ => return Err(header.unexpected(&["generator name", "end of line"])),
        }
    }
    header.skip_newlines();

    let Parser { toks, pos, .. } = header;
    let mut p = Parser::new(toks, &names);
    p.pos = pos;

    let mut relations = Vec::new();
    let mut relation_positions = Vec::new();
    if p.keyword() == Some("relations") {
        p.bump();
        p.expect_newline()?;
        loop {
            p.skip_newlines();
            match p.keyword() {
                Some("end") => break,
                Some(_) => return Err(p.unexpected(&["relation", "'end'"])),
                None => {}
            }
            if p.peek().tok == Tok::Eof {
                break;
            }
            let start = p.peek().clone();
            let rel = p.expr()?;
            if !matches!(p.peek().tok, Tok::Newline | Tok::Eof) {
                return Err(p.unexpected(&["'+'", "'-'", "'*'", "end of line"]));
            }
            relations.push(rel);
            relation_positions.push((start.line, start.column));
        }
    }
    p.skip_newlines();
    if p.keyword() == Some("end") {
        p.bump();
        p.skip_newlines();
    }
    if p.peek().tok != Tok::Eof {
        return Err(p.unexpected(&["end of input"]));
    }
    let presentation = Presentation::new(names, relations)?;
    Ok(AlgebraFile {
        name,
        presentation,
        relation_positions,
    })
}

pub fn parse_algebra(text: &str) -> Result<Presentation> {
    parse_algebra_file(text).map(|f| f.presentation)
}

/// Inverse of [`parse_algebra_file`] up to whitespace and comments.
pub fn print_algebra(presentation: &Presentation, name: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(name) = name {
        let _ = writeln!(out, "algebra {name}");
    }
    let _ = writeln!(out, "generators {}", presentation.generator_names().join(" "));
    let _ = writeln!(out, "relations");
    for rel in presentation.relations() {
        let _ = writeln!(out, "  {}", rel.display_with(presentation.generator_names()));
    }
    out.push_str("end\n");
    out
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn parse_rational_token(tok: &str, line: usize) -> Result<Rational> {
    Rational::from_str(tok).map_err(|_| {
        parse_error(line, 1, format!("'{tok}' is not a rational number"), &["p/q"])
    })
}

fn parse_row(line_no: usize, line: &str) -> Result<Vec<Rational>> {
    line.split_whitespace()
        .map(|t| parse_rational_token(t, line_no))
        .collect()
}

/// Matrix-tuple file: the size `n`, then blocks of `n` rows with `n`
/// rationals each.
pub fn parse_matrix_tuple(text: &str) -> Result<(usize, Vec<RationalMatrix>)> {
    let mut lines = data_lines(text);
    let (first_line, first) = lines
        .next()
        .ok_or_else(|| parse_error(1, 1, "empty point file", &["n"]))?;
    let n: usize = first
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| parse_error(first_line, 1, format!("'{first}' is not a positive size"), &["n"]))?;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (line_no, line) in lines {
        let row = parse_row(line_no, line)?;
        if row.len() != n {
            return Err(parse_error(
                line_no,
                1,
                format!("row has {} entries, expected {n}", row.len()),
                &[],
            ));
        }
        rows.push(row);
    }
    if !rows.len().is_multiple_of(n) {
        return Err(parse_error(
            first_line,
            1,
            format!("{} rows do not form blocks of {n}", rows.len()),
            &[],
        ));
    }
    let matrices = rows
        .chunks(n)
        .map(|block| RationalMatrix::from_rows(block.to_vec()))
        .collect::<Result<Vec<_>>>()?;
    Ok((n, matrices))
}

pub fn parse_point(text: &str) -> Result<RepPoint> {
    let (n, matrices) = parse_matrix_tuple(text)?;
    RepPoint::new(n, matrices)
}

pub fn print_point(point: &RepPoint) -> String {
    point.to_string()
}

/// A single row of rationals.
pub fn parse_vector(text: &str) -> Result<Vec<Rational>> {
    let mut lines = data_lines(text);
    let (line_no, line) = lines
        .next()
        .ok_or_else(|| parse_error(1, 1, "empty vector file", &["row of rationals"]))?;
    if let Some((extra, _)) = lines.next() {
        return Err(parse_error(extra, 1, "a vector file holds a single row", &[]));
    }
    parse_row(line_no, line)
}

/// `label: path` lines.
pub fn parse_family(text: &str) -> Result<Vec<(String, PathBuf)>> {
    data_lines(text)
        .map(|(line_no, line)| {
            let (label, path) = line
                .split_once(':')
                .ok_or_else(|| parse_error(line_no, 1, "expected 'label: path'", &["':'"]))?;
            let (label, path) = (label.trim(), path.trim());
            if label.is_empty() || path.is_empty() {
                return Err(parse_error(line_no, 1, "empty label or path", &[]));
            }
            Ok((label.to_string(), PathBuf::from(path)))
        })
        .collect()
}

impl<'a> Parser<'a> {
    /// `1` or `g1*g2*...` (powers allowed).
    fn bimodule_word(&mut self) -> Result<Word> {
        if let Tok::Int(v) = &self.peek().tok {
            if v.is_one() {
                self.bump();
                return Ok(Word::unit());
            }
            return Err(self.unexpected(&["'1'", "generator name"]));
        }
        let mut letters = Vec::new();
        loop {
            let l = self.generator()?;
            let times = if self.peek().tok == Tok::Caret {
                self.bump();
                self.exponent()?
            } else {
                1
            };
            letters.extend(std::iter::repeat_n(l, times as usize));
            if self.peek().tok != Tok::Star {
                break;
            }
            self.bump();
        }
        Ok(Word::new(letters))
    }

    /// `0` or a signed sum of `[coeff] (left | right)`.
    fn bimodule_entry(&mut self) -> Result<BimoduleElement> {
        let mut out = BimoduleElement::zero();
        if let Tok::Int(v) = &self.peek().tok {
            if v.is_zero() && matches!(self.toks[self.pos + 1].tok, Tok::Comma | Tok::Newline | Tok::Eof) {
                self.bump();
                return Ok(out);
            }
        }
        let mut first = true;
        loop {
            let mut sign = Rational::one();
            match self.peek().tok {
                Tok::Minus => {
                    self.bump();
                    sign = -sign;
                }
                Tok::Plus if !first => {
                    self.bump();
                }
                _ if !first => return Ok(out),
                _ => {}
            }
            first = false;
            let coeff = if matches!(self.peek().tok, Tok::Int(_)) {
                self.rational()?
            } else {
                Rational::one()
            };
            if self.peek().tok != Tok::LParen {
                return Err(self.unexpected(&["'('"]));
            }
            self.bump();
            let left = self.bimodule_word()?;
            if self.peek().tok != Tok::Pipe {
                return Err(self.unexpected(&["'|'", "'*'"]));
            }
            self.bump();
            let right = self.bimodule_word()?;
            if self.peek().tok != Tok::RParen {
                return Err(self.unexpected(&["')'", "'*'"]));
            }
            self.bump();
            out.add_term(left, right, sign * coeff);
        }
    }
}

/// One row per line, entries separated by commas, each entry `0` or a sum of
/// `coeff (leftword | rightword)` terms; `1` is the empty word.
pub fn parse_resolution(text: &str, presentation: &Presentation) -> Result<ResolutionStep> {
    let toks = lex(text)?;
    let mut p = Parser::new(toks, presentation.generator_names());
    let mut rows = Vec::new();
    loop {
        p.skip_newlines();
        if p.peek().tok == Tok::Eof {
            break;
        }
        let mut row = vec![p.bimodule_entry()?];
        while p.peek().tok == Tok::Comma {
            p.bump();
            row.push(p.bimodule_entry()?);
        }
        if !matches!(p.peek().tok, Tok::Newline | Tok::Eof) {
            return Err(p.unexpected(&["','", "'+'", "'-'", "end of line"]));
        }
        rows.push(row);
    }
    Ok(ResolutionStep::new(rows))
}

pub fn print_resolution(step: &ResolutionStep, presentation: &Presentation) -> String {
    let names = presentation.generator_names();
    let mut out = String::new();
    for row in step.entries() {
        let cells: Vec<String> = row.iter().map(|e| e.display_with(names)).collect();
        let _ = writeln!(out, "{}", cells.join(", "));
    }
    out
}

/// One polynomial per line, each preceded by its provenance comment.
pub fn format_ideal(generators: &[IdealGenerator], names: &[String]) -> String {
    let mut out = String::new();
    for g in generators {
        let _ = writeln!(
            out,
            "# relation {}, entry ({},{})",
            g.relation,
            g.row + 1,
            g.col + 1
        );
        let _ = writeln!(out, "{}", g.polynomial.display_with(names));
    }
    out
}
