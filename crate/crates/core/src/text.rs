//! Plain-text polynomial format: `X1^16-X3*X4`, `3/2*X1*X2^2+1`.
//!
//! Variables are `X1..Xn`, powers use `^`, products use `*`. Rendering
//! writes terms in the polynomial's own order, leading term first.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::ordering::MonomialOrdering;
use crate::poly::{Coefficient, Polynomial};

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, t) in self.terms().iter().enumerate() {
            let c = &t.coefficient;
            if c.is_negative() {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            let abs = c.abs();
            if t.monomial.is_one() {
                write_coefficient(f, &abs)?;
            } else {
                if !abs.is_one() {
                    write_coefficient(f, &abs)?;
                    f.write_str("*")?;
                }
                write!(f, "{}", t.monomial)?;
            }
        }
        Ok(())
    }
}

fn write_coefficient(f: &mut fmt::Formatter<'_>, c: &Coefficient) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, msg: &'static str) -> Error {
        Error::Parse { pos: self.pos, msg }
    }

    fn digits(&mut self) -> Result<&'a [u8]> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(&self.bytes[start..self.pos])
    }

    fn small(&mut self) -> Result<u32> {
        let d = self.digits()?;
        let mut v: u32 = 0;
        for &b in d {
            v = v
                .checked_mul(10)
                .and_then(|v| v.checked_add(u32::from(b - b'0')))
                .ok_or(Error::Parse { pos: self.pos, msg: "integer too large" })?;
        }
        Ok(v)
    }

    fn big(&mut self) -> Result<BigInt> {
        let d = self.digits()?;
        Ok(BigInt::parse_bytes(d, 10).expect("ascii digits"))
    }
}

/// Parses the plain-text format into a polynomial in `nvars` variables.
pub fn parse_polynomial(input: &str, nvars: usize, ordering: MonomialOrdering) -> Result<Polynomial> {
    let mut cur = Cursor { bytes: input.as_bytes(), pos: 0 };
    let mut terms: Vec<(Coefficient, Monomial)> = Vec::new();
    if cur.peek().is_none() {
        return Err(cur.err("empty input"));
    }
    if cur.peek() == Some(b'0') && input.trim() == "0" {
        return Ok(Polynomial::zero(nvars, ordering));
    }
    let mut first = true;
    while cur.peek().is_some() {
        let negative = if cur.eat(b'-') {
            true
        } else if cur.eat(b'+') || first {
            false
        } else {
            return Err(cur.err("expected '+' or '-'"));
        };
        first = false;
        let mut coefficient = BigRational::one();
        let mut exps = alloc::vec![0u32; nvars];
        let mut factors = 0usize;
        loop {
            match cur.peek() {
                Some(b) if b.is_ascii_digit() => {
                    let num = cur.big()?;
                    let den = if cur.eat(b'/') { cur.big()? } else { BigInt::one() };
                    if den == BigInt::from(0) {
                        return Err(cur.err("zero denominator"));
                    }
                    coefficient *= BigRational::new(num, den);
                }
                Some(b'X') | Some(b'x') => {
                    cur.pos += 1;
                    let index = cur.small()? as usize;
                    if index == 0 || index > nvars {
                        return Err(cur.err("variable index out of range"));
                    }
                    let e = if cur.eat(b'^') { cur.small()? } else { 1 };
                    exps[index - 1] = exps[index - 1]
                        .checked_add(e)
                        .ok_or(Error::Parse { pos: cur.pos, msg: "exponent overflow" })?;
                }
                _ => return Err(cur.err("expected coefficient or variable")),
            }
            factors += 1;
            if !cur.eat(b'*') {
                break;
            }
        }
        debug_assert!(factors > 0);
        if negative {
            coefficient = -coefficient;
        }
        terms.push((coefficient, Monomial::new(exps)));
    }
    Polynomial::from_terms(nvars, ordering, terms)
}
