//! Text grammar for polynomials: `x*y - 3*z^2`, `2 x0^2 x1`, `(x + y)^3`.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := power (['*'|'/'] power)*      -- '*' may be omitted
//! power  := atom ('^' integer)?
//! atom   := integer | variable | '(' expr ')'
//! ```
//! Division is only allowed by a nonzero constant.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};

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

fn err(column: usize, message: impl Into<String>) -> AlgebraError {
    AlgebraError::Parse {
        line: 1,
        column,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push((Tok::Int(s.parse().expect("digits")), col));
                continue;
            }
            a if a.is_ascii_alphabetic() || a == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((Tok::Ident(chars[start..i].iter().collect()), col));
                continue;
            }
            other => return Err(err(col, format!("unexpected character '{other}'"))),
        };
        out.push((tok, col));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a, F: Field> {
    ring: &'a Arc<PolyRing<F>>,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end_col: usize,
}

impl<'a, F: Field> Parser<'a, F> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |t| t.1)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|t| t.0.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Polynomial<F>> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                -&self.term()?
            }
            Some(Tok::Plus) => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial<F>> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = &acc * &self.power()?;
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let col = self.col();
                    let d = self.power()?;
                    let inv = (d.is_constant() && !d.is_zero())
                        .then(|| self.ring.field().inv(d.leading_coefficient().unwrap()))
                        .flatten()
                        .ok_or_else(|| err(col, "division by a non-constant or zero"))?;
                    acc = acc.scale(&inv);
                }
                Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Polynomial<F>> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let col = self.col();
            match self.bump() {
                Some(Tok::Int(n)) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| err(col, "exponent too large"))?;
                    if e > u16::MAX as u32 {
                        return Err(err(col, "exponent too large"));
                    }
                    // Plain variable powers skip repeated multiplication.
                    if base.len() == 1 && self.ring.field().is_one(&base.terms()[0].0) {
                        let m = base.terms()[0].1.pow(e);
                        return Ok(self.ring.monomial(self.ring.field().one(), m));
                    }
                    Ok(base.pow(e))
                }
                _ => Err(err(col, "expected a nonnegative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial<F>> {
        let col = self.col();
        match self.bump() {
            Some(Tok::Int(n)) => Ok(self.ring.constant(self.ring.field().from_bigint(&n))),
            Some(Tok::Ident(name)) => {
                let i = self
                    .ring
                    .names()
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| err(col, format!("unknown variable '{name}'")))?;
                Ok(self.ring.monomial(self.ring.field().one(), Monomial::var(i, 1)))
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                let c = self.col();
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(err(c, "expected ')'")),
                }
            }
            Some(t) => Err(err(col, format!("unexpected token {t:?}"))),
            None => Err(err(col, "unexpected end of input")),
        }
    }
}

/// Parses one polynomial. Errors report line 1; callers reading files
/// rewrite the line number.
pub fn parse_polynomial<F: Field>(ring: &Arc<PolyRing<F>>, text: &str) -> Result<Polynomial<F>> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(err(1, "empty polynomial"));
    }
    let mut p = Parser {
        ring,
        toks,
        pos: 0,
        end_col: text.chars().count() + 1,
    };
    let f = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(err(p.col(), "trailing input"));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, RationalField};

    fn ring() -> Arc<PolyRing<PrimeField>> {
        PolyRing::new(
            PrimeField::default(),
            vec!["x".into(), "y".into(), "z".into()],
        )
        .unwrap()
    }

    #[test]
    fn basic_grammar() {
        let r = ring();
        let f = r.parse("x*y - 3*z^2").unwrap();
        assert_eq!(f.to_string(), "x*y - 3*z^2");
        assert_eq!(r.parse("x y - 3 z^2").unwrap(), f);
        assert_eq!(r.parse("(x + y)^2").unwrap(), r.parse("x^2 + 2*x*y + y^2").unwrap());
        assert_eq!(r.parse("-x + x").unwrap(), r.zero());
    }

    #[test]
    fn rational_coefficients() {
        let r = PolyRing::new(RationalField, vec!["x".into()]).unwrap();
        let f = r.parse("1/2*x - 3/4").unwrap();
        assert_eq!(f.to_string(), "1/2*x - 3/4");
    }

    #[test]
    fn error_columns() {
        let r = ring();
        match r.parse("x + w") {
            Err(AlgebraError::Parse { column, .. }) => assert_eq!(column, 5),
            other => panic!("{other:?}"),
        }
        match r.parse("x + ") {
            Err(AlgebraError::Parse { column, .. }) => assert_eq!(column, 5),
            other => panic!("{other:?}"),
        }
        assert!(r.parse("x / y").is_err());
        assert!(r.parse("x ^ y").is_err());
        assert!(r.parse("x $").is_err());
    }
}
