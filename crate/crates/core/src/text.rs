//! Plain-text polynomials and ideals.
//!
//! ```text
//! ideal   := "ideal" "(" expr ("," expr)* ")"
//! expr    := term (("+" | "-") term)*
//! term    := unary (("*" | "/") unary)*      division only by nonzero constants
//! unary   := "-" unary | "+" unary | power
//! power   := atom ("^" integer)?
//! atom    := integer | variable | "(" expr ")"
//! ```
//!
//! Errors carry the byte offset where parsing stopped.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::IdealHandle;
use crate::poly::Poly;
use crate::ring::RingRef;

struct Parser<'a, F: Field> {
    ring: &'a RingRef<F>,
    src: &'a [u8],
    pos: usize,
}

impl<'a, F: Field> Parser<'a, F> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos, msg: msg.into() })
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

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected `{}`", c as char))
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        if self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
            while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
                self.pos += 1;
            }
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn expr(&mut self) -> Result<Poly<F>> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly<F>> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.unary()?;
            } else if self.eat(b'/') {
                let at = self.pos;
                let d = self.unary()?;
                if d.is_zero() || !d.is_constant() {
                    self.pos = at;
                    return self.err("division only by nonzero constants");
                }
                let inv = self.ring.field().inv(d.leading_coeff().unwrap());
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Poly<F>> {
        if self.eat(b'-') {
            Ok(-&self.unary()?)
        } else if self.eat(b'+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Poly<F>> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let Some(d) = self.digits() else { return self.err("expected exponent") };
            let k: u32 = match d.parse() {
                Ok(k) if k <= u16::MAX as u32 => k,
                _ => return Err(Error::ExponentOverflow),
            };
            if base.terms().iter().any(|(e, _)| (0..self.ring.nvars()).any(|i| e.get(i) as u64 * k as u64 > u16::MAX as u64)) {
                return Err(Error::ExponentOverflow);
            }
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly<F>> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits().unwrap();
                let n: BigInt = d.parse().expect("digits");
                Ok(Poly::constant(self.ring, self.ring.field().from_bigint(&n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                let name = self.ident().unwrap();
                match self.ring.index_of(name) {
                    Some(i) => Ok(Poly::var(self.ring, i)),
                    None => {
                        self.pos = start;
                        Err(Error::UnknownVariable(name.to_string()))
                    }
                }
            }
            Some(c) => self.err(format!("unexpected `{}`", c as char)),
            None => self.err("unexpected end of input"),
        }
    }

    fn finish(&mut self) -> Result<()> {
        if self.peek().is_some() {
            return self.err("trailing input");
        }
        Ok(())
    }
}

pub fn parse_poly<F: Field>(ring: &RingRef<F>, src: &str) -> Result<Poly<F>> {
    let mut p = Parser { ring, src: src.as_bytes(), pos: 0 };
    let out = p.expr()?;
    p.finish()?;
    Ok(out)
}

/// Parses `ideal(p1, ..., pk)` with at least one generator. Generators are
/// kept as written.
pub fn parse_ideal<F: Field>(ring: &RingRef<F>, src: &str) -> Result<IdealHandle<F>> {
    let mut p = Parser { ring, src: src.as_bytes(), pos: 0 };
    let kw = p.ident();
    if kw != Some("ideal") {
        p.pos = 0;
        return p.err("expected `ideal(`");
    }
    p.expect(b'(')?;
    if p.peek() == Some(b')') {
        return p.err("ideal needs at least one generator");
    }
    let mut gens = vec![p.expr()?];
    while p.eat(b',') {
        gens.push(p.expr()?);
    }
    p.expect(b')')?;
    p.finish()?;
    IdealHandle::new(ring, gens)
}
