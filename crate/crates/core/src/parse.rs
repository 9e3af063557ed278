//! Recursive-descent parser for the polynomial text grammar.
//!
//! Grammar: integer and rational literals (`p/q`), declared identifiers,
//! `+ - * ^ ( )`. `^` takes a nonnegative integer exponent. There is no
//! implicit multiplication: `2x` is a syntax error.

use std::str::FromStr;
use std::sync::Arc;

use num::bigint::BigInt;
use num::rational::BigRational;

use crate::context::VariableContext;
use crate::error::{Error, Result};
use crate::poly::Polynomial;

pub fn parse_poly(source: &str, ctx: &Arc<VariableContext>) -> Result<Polynomial> {
    let mut p = Parser {
        src: source.as_bytes(),
        pos: 0,
        ctx,
    };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(poly)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ctx: &'a Arc<VariableContext>,
}

impl<'a> Parser<'a> {
    fn err(&self, message: &str) -> Error {
        Error::SyntaxError {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.term()?.neg()
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?)?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while let Some(b'*') = self.peek() {
            self.pos += 1;
            acc = acc.mul(&self.factor()?)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if let Some(b'^') = self.peek() {
            self.pos += 1;
            self.skip_ws();
            if let Some(b'-') = self.src.get(self.pos) {
                return Err(Error::NegativeExponent(self.pos));
            }
            let e = self.nat()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(b')') => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => Err(self.err("expected `)`")),
                }
            }
            Some(c) if c.is_ascii_digit() => self.number(),
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let name = self.ident();
                Polynomial::generator(self.ctx, &name)
            }
            _ => Err(self.err("expected a literal, identifier or `(`")),
        }
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn nat(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a nonnegative integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        s.parse().map_err(|_| self.err("integer too large"))
    }

    fn number(&mut self) -> Result<Polynomial> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let numer = BigInt::from_str(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
            .map_err(|_| self.err("bad integer literal"))?;
        // A `/` immediately following an integer literal denotes a rational
        // literal; `/` is not an operator in this grammar.
        if self.src.get(self.pos) == Some(&b'/') {
            self.pos += 1;
            let dstart = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if dstart == self.pos {
                return Err(self.err("expected denominator after `/`"));
            }
            let denom =
                BigInt::from_str(std::str::from_utf8(&self.src[dstart..self.pos]).unwrap())
                    .map_err(|_| self.err("bad integer literal"))?;
            if denom == BigInt::from(0) {
                return Err(self.err("zero denominator"));
            }
            return Ok(Polynomial::constant(
                self.ctx,
                BigRational::new(numer, denom),
            ));
        }
        Ok(Polynomial::constant(self.ctx, BigRational::from(numer)))
    }
}
