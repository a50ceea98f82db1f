//! Recursive-descent parser for Laurent polynomial expressions.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := number ['/' number] | ident ['^' exp] | '(' expr ')' ['^' exp]
//! exp    := ['-'] number ['/' number] | '(' ['-'] number ['/' number] ')'
//! ```

use num_bigint::BigInt;
use num_traits::Zero;

use super::{HalfInt, LaurentPoly, Rational, VarSet};
use crate::error::{Error, Result};

struct Parser<'a> {
    vars: &'a VarSet,
    src: &'a [u8],
    pos: usize,
}

pub(crate) fn parse_expr(vars: &VarSet, text: &str) -> Result<LaurentPoly> {
    let mut p = Parser {
        vars,
        src: text.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err(format!("unexpected `{}`", p.src[p.pos] as char)));
    }
    Ok(e)
}

impl<'a> Parser<'a> {
    fn err(&self, msg: String) -> Error {
        Error::Parse {
            line: 0,
            msg: format!("{msg} at column {}", self.pos + 1),
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<LaurentPoly> {
        let mut acc = LaurentPoly::zero(self.vars);
        let mut first = true;
        loop {
            let neg = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                _ => break,
            };
            let t = self.term()?;
            acc = if neg { &acc - &t } else { &acc + &t };
            first = false;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<LaurentPoly> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = self.number()?;
                let d = if self.eat(b'/') {
                    self.number()?
                } else {
                    BigInt::from(1)
                };
                if d.is_zero() {
                    return Err(self.err("zero denominator".into()));
                }
                Ok(LaurentPoly::constant(self.vars, Rational::new(n, d)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let name = self.ident();
                let id = self
                    .vars
                    .index_of(&name)
                    .ok_or(Error::UnknownVariable(name.clone()))?;
                let base = LaurentPoly::var(self.vars, self.vars.name(id))?;
                self.maybe_power(base)
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected `)`".into()));
                }
                self.maybe_power(inner)
            }
            Some(c) => Err(self.err(format!("unexpected `{}`", c as char))),
            None => Err(self.err("unexpected end of expression".into())),
        }
    }

    fn maybe_power(&mut self, base: LaurentPoly) -> Result<LaurentPoly> {
        if !self.eat(b'^') {
            return Ok(base);
        }
        let paren = self.eat(b'(');
        let neg = self.eat(b'-');
        let n = self.number()?;
        let d = if self.eat(b'/') {
            self.number()?
        } else {
            BigInt::from(1)
        };
        if paren && !self.eat(b')') {
            return Err(self.err("expected `)`".into()));
        }
        let twice = if d == BigInt::from(1) {
            n * 2
        } else if d == BigInt::from(2) {
            n
        } else {
            return Err(self.err("exponents must be integers or halves".into()));
        };
        let twice: i64 = i64::try_from(twice).map_err(|_| self.err("exponent too large".into()))?;
        let e = HalfInt::from_twice(if neg { -twice } else { twice });
        base.pow(e)
    }

    fn number(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number".into()));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse"))
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
}
