//! Text grammar for polynomials and rational functions.
//!
//! ```text
//! expr   := [+|-] term ((+|-) term)*
//! term   := factor ([*] factor)*          juxtaposition multiplies: `2X^2Y`
//! factor := atom [^ integer]
//! atom   := integer | X | Y | [ t-expr ] | ( expr )
//! ```
//!
//! Integers are reduced into the prime subfield; bracketed `t`-expressions
//! denote elements of an extension field, e.g. `[t^2+1]*X*Y^3`.
//! Whitespace is insignificant.

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::field::{Elem, FiniteField};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(u64),
    Var(char),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if c.is_ascii_digit() {
            let mut n: u64 = 0;
            while let Some(&d) = chars.peek() {
                if let Some(v) = d.to_digit(10) {
                    n = n
                        .checked_mul(10)
                        .and_then(|n| n.checked_add(v as u64))
                        .ok_or_else(|| Error::Parse("integer literal too large".into()))?;
                    chars.next();
                } else {
                    break;
                }
            }
            out.push(Tok::Num(n));
            continue;
        }
        chars.next();
        out.push(match c {
            'X' | 'x' => Tok::Var('X'),
            'Y' | 'y' => Tok::Var('Y'),
            't' => Tok::Var('t'),
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            other => return Err(Error::Parse(format!("unexpected character `{other}`"))),
        });
    }
    Ok(out)
}

/// Values the parser can build: polynomials in X, Y or field elements in t.
trait Value: Sized + Clone {
    fn int(field: &FiniteField, n: u64) -> Self;
    fn var(field: &FiniteField, v: char) -> Result<Self>;
    fn elem(field: &FiniteField, c: Elem) -> Result<Self>;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn pow(&self, e: u64) -> Self;
}

impl Value for BiPoly {
    fn int(field: &FiniteField, n: u64) -> Self {
        BiPoly::constant(field, (n % field.characteristic() as u64) as Elem)
    }
    fn var(field: &FiniteField, v: char) -> Result<Self> {
        match v {
            'X' => Ok(BiPoly::x(field)),
            'Y' => Ok(BiPoly::y(field)),
            _ => Err(Error::Parse("`t` may only appear inside brackets".into())),
        }
    }
    fn elem(field: &FiniteField, c: Elem) -> Result<Self> {
        Ok(BiPoly::constant(field, c))
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn pow(&self, e: u64) -> Self {
        BiPoly::pow(self, e)
    }
}

#[derive(Clone)]
struct FieldValue(FiniteField, Elem);

impl Value for FieldValue {
    fn int(field: &FiniteField, n: u64) -> Self {
        FieldValue(field.clone(), (n % field.characteristic() as u64) as Elem)
    }
    fn var(field: &FiniteField, v: char) -> Result<Self> {
        match v {
            't' if !field.is_prime_field() => Ok(FieldValue(field.clone(), field.t())),
            't' => Err(Error::Parse(format!("`t` is not defined in the prime field {field}"))),
            _ => Err(Error::Parse("X and Y may not appear inside brackets".into())),
        }
    }
    fn elem(_: &FiniteField, _: Elem) -> Result<Self> {
        Err(Error::Parse("nested brackets".into()))
    }
    fn add(&self, o: &Self) -> Self {
        FieldValue(self.0.clone(), self.0.add(self.1, o.1))
    }
    fn sub(&self, o: &Self) -> Self {
        FieldValue(self.0.clone(), self.0.sub(self.1, o.1))
    }
    fn mul(&self, o: &Self) -> Self {
        FieldValue(self.0.clone(), self.0.mul(self.1, o.1))
    }
    fn neg(&self) -> Self {
        FieldValue(self.0.clone(), self.0.neg(self.1))
    }
    fn pow(&self, e: u64) -> Self {
        FieldValue(self.0.clone(), self.0.pow(self.1, e))
    }
}

struct Parser<'a> {
    toks: &'a [Tok],
    pos: usize,
    field: &'a FiniteField,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        match self.next() {
            Some(ref got) if *got == t => Ok(()),
            got => Err(Error::Parse(format!("expected {t:?}, found {got:?}"))),
        }
    }

    fn expr<V: Value>(&mut self) -> Result<V> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.next();
                self.term::<V>()?.neg()
            }
            Some(Tok::Plus) => {
                self.next();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next();
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.next();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term<V: Value>(&mut self) -> Result<V> {
        let mut acc = self.factor::<V>()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.next();
                    acc = acc.mul(&self.factor()?);
                }
                Some(Tok::Num(_) | Tok::Var(_) | Tok::LParen | Tok::LBracket) => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor<V: Value>(&mut self) -> Result<V> {
        let base = self.atom::<V>()?;
        if let Some(Tok::Caret) = self.peek() {
            self.next();
            match self.next() {
                Some(Tok::Num(e)) => Ok(base.pow(e)),
                other => Err(Error::Parse(format!("expected exponent, found {other:?}"))),
            }
        } else {
            Ok(base)
        }
    }

    fn atom<V: Value>(&mut self) -> Result<V> {
        match self.next() {
            Some(Tok::Num(n)) => Ok(V::int(self.field, n)),
            Some(Tok::Var(v)) => V::var(self.field, v),
            Some(Tok::LParen) => {
                let v = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(v)
            }
            Some(Tok::LBracket) => {
                let c: FieldValue = self.expr()?;
                self.expect(Tok::RBracket)?;
                V::elem(self.field, c.1)
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

fn parse_with<V: Value>(field: &FiniteField, s: &str) -> Result<V> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { toks: &toks, pos: 0, field };
    let v = p.expr()?;
    if p.pos != toks.len() {
        return Err(Error::Parse(format!("trailing input at token {}", p.pos)));
    }
    Ok(v)
}

/// Parses a polynomial in X and Y over `field`.
pub fn parse_poly(field: &FiniteField, s: &str) -> Result<BiPoly> {
    parse_with(field, s)
}

/// Parses a field element written as an integer or a `t`-polynomial (brackets optional).
pub fn parse_element(field: &FiniteField, s: &str) -> Result<Elem> {
    let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
    Ok(parse_with::<FieldValue>(field, inner)?.1)
}

/// Parses `numerator / denominator`; a missing denominator means 1.
pub fn parse_rational(field: &FiniteField, s: &str) -> Result<(BiPoly, BiPoly)> {
    let mut depth = 0i32;
    let mut split = None;
    for (idx, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            '/' if depth == 0 => {
                if split.is_some() {
                    return Err(Error::Parse("more than one `/` in rational function".into()));
                }
                split = Some(idx);
            }
            _ => {}
        }
    }
    match split {
        None => Ok((parse_poly(field, s)?, BiPoly::one(field))),
        Some(i) => Ok((parse_poly(field, &s[..i])?, parse_poly(field, &s[i + 1..])?)),
    }
}
