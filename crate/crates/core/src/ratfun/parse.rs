//! Parser for rendered rational functions: sums, products, quotients and
//! integer powers of integers, `t` and parenthesised subexpressions.
//! Juxtaposition multiplies (`6t`, `(1/2)(1-t)`).

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use thiserror::Error;

use super::{Polynomial, RationalFunction};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected `{found}` at byte {pos}")]
    Unexpected { found: String, pos: usize },
    #[error("unexpected end of input")]
    Eof,
    #[error("not a valid rational function: {0}")]
    Invalid(super::RatFunError),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    T,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut out = Vec::new();
    let mut it = s.char_indices().peekable();
    while let Some((pos, c)) = it.next() {
        let tok = match c {
            c if c.is_whitespace() => continue,
            '0'..='9' => {
                let mut digits = String::from(c);
                while let Some(&(_, d)) = it.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        it.next();
                    } else {
                        break;
                    }
                }
                Tok::Int(digits.parse().expect("ascii digits"))
            }
            't' => Tok::T,
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' | '·' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' | '[' => Tok::LParen,
            ')' | ']' => Tok::RParen,
            other => {
                return Err(ParseError::Unexpected {
                    found: other.into(),
                    pos,
                })
            }
        };
        out.push((tok, pos));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn unexpected(&self) -> ParseError {
        match self.toks.get(self.at) {
            Some((t, pos)) => ParseError::Unexpected {
                found: alloc::format!("{t:?}"),
                pos: *pos,
            },
            None => ParseError::Eof,
        }
    }

    fn expr(&mut self) -> Result<RationalFunction, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.at += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.at += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RationalFunction, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.at += 1;
                    acc = acc.mul(&self.unary()?);
                }
                Some(Tok::Slash) => {
                    self.at += 1;
                    let d = self.unary()?;
                    acc = acc.div(&d).map_err(ParseError::Invalid)?;
                }
                Some(Tok::Int(_)) | Some(Tok::T) | Some(Tok::LParen) => {
                    acc = acc.mul(&self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RationalFunction, ParseError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.at += 1;
                Ok(self.unary()?.neg())
            }
            Some(Tok::Plus) => {
                self.at += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RationalFunction, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.at += 1;
        let e = match self.toks.get(self.at) {
            Some((Tok::Int(n), _)) => n.clone(),
            _ => return Err(self.unexpected()),
        };
        self.at += 1;
        let e: u32 = u32::try_from(e).map_err(|_| self.unexpected())?;
        let mut acc = RationalFunction::one();
        for _ in 0..e {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<RationalFunction, ParseError> {
        let r = match self.peek().cloned() {
            Some(Tok::Int(n)) => RationalFunction::constant(Rational::from_integer(n)),
            Some(Tok::T) => RationalFunction::from_polynomial(Polynomial::from_ints(&[0, 1])),
            Some(Tok::LParen) => {
                self.at += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.unexpected());
                }
                inner
            }
            _ => return Err(self.unexpected()),
        };
        self.at += 1;
        Ok(r)
    }
}

pub(super) fn parse(s: &str) -> Result<RationalFunction, ParseError> {
    let mut p = Parser { toks: lex(s)?, at: 0 };
    let r = p.expr()?;
    if p.at != p.toks.len() {
        return Err(p.unexpected());
    }
    Ok(r)
}
