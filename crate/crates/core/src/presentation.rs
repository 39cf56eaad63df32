//! The plain-text presentation format.
//!
//! ```text
//! # comments start with '#'
//! algebra bicommutative        # or: commutative
//! vars x1 x2 x3
//! order nf-A                   # deglex | lex | nf-A | nf-B
//! rel (x1 (x2 x3)) - [x2; x3]
//! rel 3/2 (x1 x1)
//! ```
//!
//! Commutative relations are sums of `[coef] x_i^e ...` terms, where a bare
//! coefficient is a constant. Bicommutative relations are sums of
//! `[coef] atom`, where an atom is a letter, a fully parenthesized product
//! `(a b)` of two atoms, or a normal-form literal `[u; v]` with `u`, `v`
//! nonempty commutative monomials. Relations are made monic; zero relations
//! are dropped. `algebra` and `vars` are required, `order` defaults to
//! `deglex` or `nf-A`.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::bicomm::{BcPolynomial, BcTerm, NfMonomial, NfOrder};
use crate::commutative::{ComOrder, ComPolynomial, Monomial};
use crate::vars::is_identifier;
use crate::{Error, Rational, Result, VarSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraKind {
    Commutative,
    Bicommutative,
}

impl AlgebraKind {
    pub fn name(self) -> &'static str {
        match self {
            AlgebraKind::Commutative => "commutative",
            AlgebraKind::Bicommutative => "bicommutative",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComPresentation {
    pub vars: VarSet,
    pub order: ComOrder,
    pub relations: Vec<ComPolynomial>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BcPresentation {
    pub vars: VarSet,
    pub order: NfOrder,
    pub relations: Vec<BcPolynomial>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Presentation {
    Commutative(ComPresentation),
    Bicommutative(BcPresentation),
}

impl Presentation {
    pub fn kind(&self) -> AlgebraKind {
        match self {
            Presentation::Commutative(_) => AlgebraKind::Commutative,
            Presentation::Bicommutative(_) => AlgebraKind::Bicommutative,
        }
    }

    pub fn vars(&self) -> &VarSet {
        match self {
            Presentation::Commutative(p) => &p.vars,
            Presentation::Bicommutative(p) => &p.vars,
        }
    }

    pub fn order_name(&self) -> &'static str {
        match self {
            Presentation::Commutative(p) => p.order.name(),
            Presentation::Bicommutative(p) => p.order.name(),
        }
    }

    /// Renders the presentation in the format accepted by [`parse_presentation`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let vars = self.vars();
        writeln!(out, "algebra {}", self.kind().name()).unwrap();
        writeln!(out, "vars {}", vars.names().join(" ")).unwrap();
        writeln!(out, "order {}", self.order_name()).unwrap();
        match self {
            Presentation::Commutative(p) => {
                for r in &p.relations {
                    writeln!(out, "rel {}", r.display(vars)).unwrap();
                }
            }
            Presentation::Bicommutative(p) => {
                for r in &p.relations {
                    writeln!(out, "rel {}", r.display(vars)).unwrap();
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Slash,
    Caret,
    Plus,
    Minus,
    LParen,
    RParen,
    LBrack,
    RBrack,
    Semi,
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Int(n) => format!("`{n}`"),
        Tok::Slash => "`/`".into(),
        Tok::Caret => "`^`".into(),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::LBrack => "`[`".into(),
        Tok::RBrack => "`]`".into(),
        Tok::Semi => "`;`".into(),
        Tok::End => "end of input".into(),
    }
}

struct Lexer {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
}

impl Lexer {
    fn new(text: &str, line: usize, col0: usize) -> Result<Self> {
        let chars: Vec<char> = text.chars().collect();
        let mut toks = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let col = col0 + i;
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            let simple = match c {
                '/' => Some(Tok::Slash),
                '^' => Some(Tok::Caret),
                '+' => Some(Tok::Plus),
                '-' => Some(Tok::Minus),
                '(' => Some(Tok::LParen),
                ')' => Some(Tok::RParen),
                '[' => Some(Tok::LBrack),
                ']' => Some(Tok::RBrack),
                ';' => Some(Tok::Semi),
                _ => None,
            };
            if let Some(t) = simple {
                toks.push((t, line, col));
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                toks.push((Tok::Int(s.parse().expect("digits")), line, col));
            } else if c.is_ascii_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                toks.push((Tok::Ident(chars[start..i].iter().collect()), line, col));
            } else {
                return Err(Error::parse(line, col, format!("unexpected character `{c}`")));
            }
        }
        toks.push((Tok::End, line, col0 + chars.len()));
        Ok(Lexer { toks, pos: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn at(&self) -> (usize, usize) {
        let (_, l, c) = &self.toks[self.pos];
        (*l, *c)
    }

    fn next(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        let (l, c) = self.at();
        Error::parse(l, c, msg)
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        if *self.peek() == t {
            self.next();
            Ok(())
        } else {
            Err(self.error(format!("expected {}, found {}", describe(&t), describe(self.peek()))))
        }
    }

    fn small_int(&mut self, what: &str) -> Result<u32> {
        match self.next() {
            Tok::Int(n) => u32::try_from(&n).map_err(|_| self.error(format!("{what} too large"))),
            t => {
                self.pos -= usize::from(t != Tok::End);
                Err(self.error(format!("expected {what}, found {}", describe(&t))))
            }
        }
    }

    fn variable(&mut self, vars: &VarSet) -> Result<usize> {
        let (l, c) = self.at();
        match self.next() {
            Tok::Ident(name) => vars
                .index_of(&name)
                .ok_or_else(|| Error::parse(l, c, format!("unknown variable `{name}`"))),
            t => Err(Error::parse(l, c, format!("expected a variable, found {}", describe(&t)))),
        }
    }

    /// `int ['/' int]`, if present.
    fn coefficient(&mut self) -> Result<Option<Rational>> {
        let Tok::Int(n) = self.peek().clone() else {
            return Ok(None);
        };
        self.next();
        if *self.peek() == Tok::Slash {
            self.next();
            let (l, c) = self.at();
            match self.next() {
                Tok::Int(d) if d.is_zero() => Err(Error::parse(l, c, "zero denominator")),
                Tok::Int(d) => Ok(Some(Rational::new(n, d))),
                t => Err(Error::parse(l, c, format!("expected a denominator, found {}", describe(&t)))),
            }
        } else {
            Ok(Some(Rational::from_integer(n)))
        }
    }

    /// `factor*` with `factor := var ['^' int]`.
    fn factors(&mut self, vars: &VarSet) -> Result<Monomial> {
        let mut e = vec![0u32; vars.len()];
        while let Tok::Ident(_) = self.peek() {
            let i = self.variable(vars)?;
            let k = if *self.peek() == Tok::Caret {
                self.next();
                self.small_int("an exponent")?
            } else {
                1
            };
            e[i] = e[i]
                .checked_add(k)
                .ok_or_else(|| self.error("exponent too large"))?;
        }
        Ok(Monomial::from_exponents(e))
    }

    /// Optional leading sign, then `term (('+' | '-') term)*`.
    fn sum<T>(&mut self, mut term: impl FnMut(&mut Self) -> Result<T>) -> Result<Vec<(Rational, T)>> {
        let mut out = Vec::new();
        let mut sign = Rational::one();
        match self.peek() {
            Tok::Minus => {
                self.next();
                sign = -sign;
            }
            Tok::Plus => {
                self.next();
            }
            _ => {}
        }
        loop {
            out.push((sign.clone(), term(self)?));
            match self.peek() {
                Tok::Plus => sign = Rational::one(),
                Tok::Minus => sign = -Rational::one(),
                Tok::End => return Ok(out),
                t => return Err(self.error(format!("expected `+`, `-` or end of expression, found {}", describe(t)))),
            }
            self.next();
        }
    }
}

fn com_expr(lx: &mut Lexer, vars: &VarSet, order: ComOrder) -> Result<ComPolynomial> {
    let terms = lx.sum(|lx| {
        let start = lx.at();
        let c = lx.coefficient()?;
        let m = lx.factors(vars)?;
        if c.is_none() && m.is_one() {
            return Err(Error::parse(start.0, start.1, format!("expected a term, found {}", describe(lx.peek()))));
        }
        Ok((c.unwrap_or_else(Rational::one), m))
    })?;
    Ok(ComPolynomial::from_terms(
        order,
        terms.into_iter().map(|(s, (c, m))| (m, s * c)),
    ))
}

/// A parsed atom; `term` is absent when a normal-form literal was used.
struct Atom {
    nf: NfMonomial,
    term: Option<BcTerm>,
}

fn starts_atom(t: &Tok) -> bool {
    matches!(t, Tok::Ident(_) | Tok::LParen | Tok::LBrack)
}

fn atom(lx: &mut Lexer, vars: &VarSet) -> Result<Atom> {
    let arity = vars.len();
    match lx.peek() {
        Tok::Ident(_) => {
            let i = lx.variable(vars)?;
            Ok(Atom {
                nf: NfMonomial::letter(arity, i),
                term: Some(BcTerm::Letter(i)),
            })
        }
        Tok::LParen => {
            lx.next();
            if *lx.peek() == Tok::RParen {
                return Err(lx.error("empty parentheses"));
            }
            let a = atom(lx, vars)?;
            if *lx.peek() == Tok::RParen {
                return Err(lx.error("a product needs two factors"));
            }
            let b = atom(lx, vars)?;
            if starts_atom(lx.peek()) {
                return Err(lx.error(
                    "three factors without parentheses; the product is nonassociative, write ((a b) c) or (a (b c))",
                ));
            }
            lx.expect(Tok::RParen)?;
            Ok(Atom {
                nf: a.nf.mul(&b.nf),
                term: a.term.zip(b.term).map(|(x, y)| BcTerm::app(x, y)),
            })
        }
        Tok::LBrack => {
            lx.next();
            let (l, c) = lx.at();
            let u = lx.factors(vars)?;
            if u.is_one() {
                return Err(Error::parse(l, c, "left side of [u; v] must be a nonempty monomial"));
            }
            lx.expect(Tok::Semi)?;
            let (l, c) = lx.at();
            let v = lx.factors(vars)?;
            if v.is_one() {
                return Err(Error::parse(l, c, "right side of [u; v] must be a nonempty monomial"));
            }
            lx.expect(Tok::RBrack)?;
            Ok(Atom {
                nf: NfMonomial::pair(u, v)?,
                term: None,
            })
        }
        t => Err(lx.error(format!("expected a letter, `(` or `[`, found {}", describe(t)))),
    }
}

fn top_atom(lx: &mut Lexer, vars: &VarSet) -> Result<Atom> {
    let a = atom(lx, vars)?;
    if starts_atom(lx.peek()) {
        return Err(lx.error("juxtaposed factors must be parenthesized, as in (a b)"));
    }
    Ok(a)
}

fn bc_expr(lx: &mut Lexer, vars: &VarSet, order: NfOrder) -> Result<BcPolynomial> {
    let terms = lx.sum(|lx| {
        let c = lx.coefficient()?.unwrap_or_else(Rational::one);
        Ok((c, top_atom(lx, vars)?.nf))
    })?;
    Ok(BcPolynomial::from_terms(
        order,
        terms.into_iter().map(|(s, (c, m))| (m, s * c)),
    ))
}

/// Parses a commutative expression such as `3/2 x1^2 x2 - x3 + 1`.
pub fn parse_com_expr(text: &str, vars: &VarSet, order: ComOrder) -> Result<ComPolynomial> {
    com_expr(&mut Lexer::new(text, 1, 1)?, vars, order)
}

/// Parses a bicommutative expression such as `(x1 (x2 x3)) - 2 [x1; x2^2]`.
pub fn parse_bc_expr(text: &str, vars: &VarSet, order: NfOrder) -> Result<BcPolynomial> {
    bc_expr(&mut Lexer::new(text, 1, 1)?, vars, order)
}

pub(crate) fn parse_term_text(text: &str, vars: &VarSet) -> Result<BcTerm> {
    let mut lx = Lexer::new(text, 1, 1)?;
    let (l, c) = lx.at();
    let a = top_atom(&mut lx, vars)?;
    lx.expect(Tok::End)?;
    a.term
        .ok_or_else(|| Error::parse(l, c, "normal-form literals are not terms"))
}

struct Line<'a> {
    no: usize,
    col: usize,
    text: &'a str,
}

/// Parses a presentation file.
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut kind: Option<AlgebraKind> = None;
    let mut vars: Option<VarSet> = None;
    let mut order: Option<(String, usize, usize)> = None;
    let mut rels: Vec<Line> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let no = idx + 1;
        let body = raw.split('#').next().unwrap_or("");
        let trimmed = body.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let indent = body.chars().count() - trimmed.chars().count();
        let word: String = trimmed.chars().take_while(|c| !c.is_whitespace()).collect();
        let rest = &trimmed[word.len()..];
        let rest_col = indent + word.chars().count() + 1;
        let dup = |what: &str| Error::parse(no, indent + 1, format!("duplicate `{what}` line"));
        match word.as_str() {
            "algebra" => {
                if kind.is_some() {
                    return Err(dup("algebra"));
                }
                let arg = rest.trim();
                kind = Some(match arg {
                    "commutative" => AlgebraKind::Commutative,
                    "bicommutative" => AlgebraKind::Bicommutative,
                    _ => {
                        let col = rest_col + rest.len() - rest.trim_start().len();
                        return Err(Error::parse(
                            no,
                            col,
                            format!("unknown algebra kind `{arg}`; expected commutative or bicommutative"),
                        ));
                    }
                });
            }
            "vars" => {
                if vars.is_some() {
                    return Err(dup("vars"));
                }
                if let Some(bad) = rest.split_whitespace().find(|n| !is_identifier(n)) {
                    let col = rest_col + rest.find(bad).unwrap_or(0);
                    return Err(Error::parse(no, col, format!("`{bad}` is not a valid variable name")));
                }
                vars = Some(VarSet::new(rest.split_whitespace())?);
            }
            "order" => {
                if order.is_some() {
                    return Err(dup("order"));
                }
                let col = rest_col + rest.len() - rest.trim_start().len();
                order = Some((rest.trim().to_string(), no, col));
            }
            "rel" => rels.push(Line {
                no,
                col: rest_col,
                text: rest,
            }),
            _ => {
                return Err(Error::parse(
                    no,
                    indent + 1,
                    format!("unknown directive `{word}`; expected algebra, vars, order or rel"),
                ))
            }
        }
    }

    let kind = kind.ok_or_else(|| Error::Validation("missing `algebra` line".into()))?;
    let vars = vars.ok_or_else(|| Error::Validation("missing `vars` line".into()))?;
    let order_name = order.as_ref().map(|(s, _, _)| s.as_str());
    match kind {
        AlgebraKind::Commutative => {
            let order = match order_name {
                None | Some("deglex") => ComOrder::DegLex,
                Some("lex") => ComOrder::Lex,
                Some(o @ ("nf-A" | "nf-B")) => {
                    return Err(Error::Validation(format!(
                        "order {o} applies to bicommutative algebras only"
                    )))
                }
                Some(o) => return Err(unknown_order(o, order.as_ref().unwrap())),
            };
            let mut relations = Vec::new();
            for r in rels {
                let p = com_expr(&mut Lexer::new(r.text, r.no, r.col)?, &vars, order)?;
                if !p.is_zero() {
                    relations.push(p.monic());
                }
            }
            Ok(Presentation::Commutative(ComPresentation {
                vars,
                order,
                relations,
            }))
        }
        AlgebraKind::Bicommutative => {
            let order = match order_name {
                None | Some("nf-A") => NfOrder::a(),
                Some("nf-B") => NfOrder::b(),
                Some(o @ ("deglex" | "lex")) => {
                    return Err(Error::Validation(format!(
                        "order {o} applies to commutative algebras only; use nf-A or nf-B"
                    )))
                }
                Some(o) => return Err(unknown_order(o, order.as_ref().unwrap())),
            };
            let mut relations = Vec::new();
            for r in rels {
                let p = bc_expr(&mut Lexer::new(r.text, r.no, r.col)?, &vars, order)?;
                if !p.is_zero() {
                    relations.push(p.monic());
                }
            }
            Ok(Presentation::Bicommutative(BcPresentation {
                vars,
                order,
                relations,
            }))
        }
    }
}

fn unknown_order(o: &str, at: &(String, usize, usize)) -> Error {
    Error::parse(
        at.1,
        at.2,
        format!("unknown order `{o}`; expected deglex, lex, nf-A or nf-B"),
    )
}
