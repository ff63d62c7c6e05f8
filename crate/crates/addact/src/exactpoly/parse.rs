//! Recursive-descent parser for the polynomial expression grammar.
//!
//! Tokens: integers, identifiers, `+ - * / ^ ( )`. The slash is only legal
//! immediately after an integer literal (rational constants); general
//! division is not part of the grammar.

use num_bigint::BigInt;
use num_traits::One;

use super::{Poly, Scalar, Vars};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Debug)]
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

fn lex(text: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\r' | '\n' => {
                chars.next();
            }
            '+' => {
                chars.next();
                out.push(Tok::Plus);
            }
            '-' => {
                chars.next();
                out.push(Tok::Minus);
            }
            '*' => {
                chars.next();
                out.push(Tok::Star);
            }
            '/' => {
                chars.next();
                out.push(Tok::Slash);
            }
            '^' => {
                chars.next();
                out.push(Tok::Caret);
            }
            '(' => {
                chars.next();
                out.push(Tok::LParen);
            }
            ')' => {
                chars.next();
                out.push(Tok::RParen);
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                let n = digits
                    .parse::<BigInt>()
                    .map_err(|_| Error::Syntax(format!("bad integer `{digits}`")))?;
                out.push(Tok::Int(n));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut ident = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        ident.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Ident(ident));
            }
            other => return Err(Error::Syntax(format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    vars: &'a Vars,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        while let Some(tok) = self.peek() {
            match tok {
                Tok::Plus => {
                    self.bump();
                    acc = acc.try_add(&self.term()?)?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.try_sub(&self.term()?)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly> {
        let negate = matches!(self.peek(), Some(Tok::Minus));
        if negate {
            self.bump();
        }
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some(Tok::Star)) {
            self.bump();
            acc = acc.try_mul(&self.factor()?)?;
        }
        Ok(if negate { acc.neg() } else { acc })
    }

    fn factor(&mut self) -> Result<Poly> {
        match self.bump() {
            Some(Tok::Int(n)) => {
                let den = if matches!(self.peek(), Some(Tok::Slash)) {
                    self.bump();
                    match self.bump() {
                        Some(Tok::Int(d)) => d,
                        _ => return Err(Error::Syntax("expected denominator after `/`".into())),
                    }
                } else {
                    BigInt::one()
                };
                if den == BigInt::from(0) {
                    return Err(Error::Syntax("zero denominator".into()));
                }
                Ok(Poly::constant(self.vars, Scalar::new(n, den)))
            }
            Some(Tok::Ident(name)) => {
                let idx = self
                    .vars
                    .index_of(&name)
                    .ok_or(Error::UnknownVariable(name))?;
                let base = Poly::var(self.vars, idx)?;
                if matches!(self.peek(), Some(Tok::Caret)) {
                    self.bump();
                    match self.bump() {
                        Some(Tok::Int(e)) => {
                            let e: u32 = e
                                .try_into()
                                .map_err(|_| Error::Syntax("exponent too large".into()))?;
                            Ok(base.pow(e))
                        }
                        Some(Tok::Minus) => Err(Error::NegativeExponent),
                        _ => Err(Error::Syntax("expected exponent after `^`".into())),
                    }
                } else {
                    Ok(base)
                }
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(Error::Syntax("unbalanced parenthesis".into())),
                }
            }
            Some(tok) => Err(Error::Syntax(format!("unexpected token {tok:?}"))),
            None => Err(Error::Syntax("unexpected end of input".into())),
        }
    }
}

pub(crate) fn parse(vars: &Vars, text: &str) -> Result<Poly> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(Error::Syntax("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0, vars };
    let poly = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Syntax(format!(
            "trailing input at token {}",
            p.pos
        )));
    }
    Ok(poly)
}
