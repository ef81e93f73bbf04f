//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer ('/' integer)? | variable | '(' expr ')'
//! ```
//!
//! Juxtaposition is rejected: `xy` is an unknown identifier and `2x` is a
//! parse error.

use std::collections::BTreeMap;

use num::{BigInt, One, ToPrimitive, Zero};

use super::{HPoly, Monomial, Rational};
use crate::error::{Error, Result};

const MAX_EXPONENT: u32 = 512;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            d if d.is_ascii_digit() => {
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..=i].iter().collect();
                Tok::Int(s.parse().expect("digits"))
            }
            a if a.is_alphabetic() || a == '_' => {
                while i + 1 < chars.len() && (chars[i + 1].is_alphanumeric() || chars[i + 1] == '_')
                {
                    i += 1;
                }
                Tok::Ident(chars[start..=i].iter().collect())
            }
            other => {
                return Err(Error::parse(
                    start,
                    format!("unexpected character '{other}'"),
                ))
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

/// Sparse, possibly inhomogeneous polynomial used while parsing.
type Sparse = BTreeMap<[u32; 3], Rational>;

fn sp_const(c: Rational) -> Sparse {
    let mut m = Sparse::new();
    if !c.is_zero() {
        m.insert([0, 0, 0], c);
    }
    m
}

fn sp_add(a: &Sparse, b: &Sparse, sign: i64) -> Sparse {
    let mut out = a.clone();
    for (m, c) in b {
        let e = out.entry(*m).or_insert_with(Rational::zero);
        if sign < 0 {
            *e -= c;
        } else {
            *e += c;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn sp_mul(a: &Sparse, b: &Sparse) -> Sparse {
    let mut out = Sparse::new();
    for (m1, c1) in a {
        for (m2, c2) in b {
            let m = [m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2]];
            *out.entry(m).or_insert_with(Rational::zero) += c1 * c2;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    vars: &'a [&'a str],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Sparse> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = sp_add(&acc, &self.term()?, 1);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = sp_add(&acc, &self.term()?, -1);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Sparse> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = sp_mul(&acc, &self.unary()?);
                }
                Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    return Err(Error::parse(
                        self.offset(),
                        "implicit multiplication is not allowed; write '*'",
                    ))
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Sparse> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                let inner = self.unary()?;
                Ok(sp_add(&Sparse::new(), &inner, -1))
            }
            Some(Tok::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Sparse> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let at = self.offset();
        let e = match self.bump() {
            Some(Tok::Int(n)) => n
                .to_u32()
                .filter(|e| *e <= MAX_EXPONENT)
                .ok_or_else(|| Error::parse(at, format!("exponent {n} too large")))?,
            _ => {
                return Err(Error::parse(
                    at,
                    "exponent must be a nonnegative integer literal",
                ))
            }
        };
        let mut acc = sp_const(Rational::one());
        for _ in 0..e {
            acc = sp_mul(&acc, &base);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Sparse> {
        let at = self.offset();
        match self.bump() {
            Some(Tok::Int(n)) => {
                if self.peek() == Some(&Tok::Slash) {
                    self.bump();
                    let dat = self.offset();
                    match self.bump() {
                        Some(Tok::Int(d)) if !d.is_zero() => Ok(sp_const(Rational::new(n, d))),
                        Some(Tok::Int(_)) => Err(Error::parse(dat, "zero denominator")),
                        _ => Err(Error::parse(dat, "expected integer denominator")),
                    }
                } else {
                    Ok(sp_const(Rational::from_integer(n)))
                }
            }
            Some(Tok::Ident(name)) => {
                let idx = self
                    .vars
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| Error::parse(at, format!("unknown identifier '{name}'")))?;
                let mut e = [0u32; 3];
                e[idx] = 1;
                let mut m = Sparse::new();
                m.insert(e, Rational::one());
                Ok(m)
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                let cat = self.offset();
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(Error::parse(cat, "expected ')'")),
                }
            }
            Some(_) => Err(Error::parse(at, "unexpected token")),
            None => Err(Error::parse(at, "unexpected end of input")),
        }
    }
}

/// Parses a homogeneous form in the three named variables.
pub fn parse_poly(expr: &str, vars: &[&str]) -> Result<HPoly> {
    if vars.len() != 3 {
        return Err(Error::parse(0, "exactly three variable names are required"));
    }
    let toks = lex(expr)?;
    if toks.is_empty() {
        return Err(Error::parse(0, "empty expression"));
    }
    let mut parser = Parser {
        toks,
        pos: 0,
        end: expr.chars().count(),
        vars,
    };
    let sparse = parser.expr()?;
    if parser.pos < parser.toks.len() {
        return Err(Error::parse(parser.offset(), "unexpected trailing input"));
    }
    HPoly::from_terms(sparse.into_iter().map(|(m, c)| (Monomial(m), c)))
}

/// Parses a rational literal such as `3`, `-2/5`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let p = parse_poly(s, &["__r0", "__r1", "__r2"])?;
    if !p.is_constant() {
        return Err(Error::parse(0, format!("'{s}' is not a rational constant")));
    }
    Ok(p.coeff(&Monomial([0, 0, 0])))
}
