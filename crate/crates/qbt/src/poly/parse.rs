//! Parser for the polynomial grammar: terms joined by +/-, each term an
//! optional rational coefficient (`p` or `p/q`) and `*`-joined powers
//! `x<i>^<e>`; whitespace insignificant. A `*` between coefficient and the
//! first power is optional on input; the printer always emits it.

use super::{MultiPoly, Monomial};
use crate::exactmath::{Rational, Rationals};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek();
        if b.is_some() {
            self.pos += 1;
        }
        b
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ') | Some(b'\t') | Some(b'\n') | Some(b'\r')) {
            self.pos += 1;
        }
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError { position: self.pos, message: message.into() }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected digits"));
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn index(&mut self) -> Result<usize, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected variable index"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("variable index out of range"))
    }
}

pub fn parse_poly(
    text: &str,
    nvars: usize,
    variable_prefix: &str,
) -> Result<MultiPoly<Rationals>, ParseError> {
    let prefix = variable_prefix.as_bytes();
    assert!(!prefix.is_empty(), "variable prefix must be nonempty");
    let mut cur = Cursor { bytes: text.as_bytes(), pos: 0 };
    let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();

    cur.skip_ws();
    if cur.peek().is_none() {
        return Err(cur.err("empty input"));
    }
    let mut sign = Rational::from_integer(1.into());
    if cur.peek() == Some(b'-') {
        cur.bump();
        sign = -sign;
    } else if cur.peek() == Some(b'+') {
        cur.bump();
    }
    loop {
        cur.skip_ws();
        let (mono, coeff) = parse_term(&mut cur, nvars, prefix)?;
        let signed = &sign * coeff;
        let m = Monomial(mono);
        let combined = match terms.get(&m) {
            Some(v) => v + signed,
            None => signed,
        };
        if combined.is_zero() {
            terms.remove(&m);
        } else {
            terms.insert(m, combined);
        }
        cur.skip_ws();
        match cur.peek() {
            None => break,
            Some(b'+') => {
                cur.bump();
                sign = Rational::from_integer(1.into());
            }
            Some(b'-') => {
                cur.bump();
                sign = Rational::from_integer((-1).into());
            }
            Some(c) => {
                return Err(cur.err(format!("expected '+' or '-', found '{}'", c as char)))
            }
        }
    }
    Ok(MultiPoly { nvars, terms })
}

fn parse_term(
    cur: &mut Cursor,
    nvars: usize,
    prefix: &[u8],
) -> Result<(Vec<u16>, Rational), ParseError> {
    let mut coeff = Rational::from_integer(1.into());
    let mut expo = vec![0u16; nvars];
    let mut saw_anything = false;

    // optional leading rational coefficient
    cur.skip_ws();
    if matches!(cur.peek(), Some(b'0'..=b'9')) {
        let num = cur.integer()?;
        let mut den = BigInt::from(1);
        if cur.peek() == Some(b'/') {
            cur.bump();
            den = cur.integer()?;
            if den.is_zero() {
                return Err(cur.err("zero denominator"));
            }
        }
        coeff = Rational::new(num, den);
        saw_anything = true;
        cur.skip_ws();
        if cur.peek() == Some(b'*') {
            cur.bump();
        }
    }

    loop {
        cur.skip_ws();
        if !starts_with_prefix(cur, prefix) {
            break;
        }
        cur.pos += prefix.len();
        let idx = cur.index()?;
        if idx >= nvars {
            return Err(cur.err(format!("variable index {idx} >= nvars {nvars}")));
        }
        let mut e: u32 = 1;
        if cur.peek() == Some(b'^') {
            cur.bump();
            let ei = cur.integer()?;
            e = u32::try_from(ei).map_err(|_| cur.err("exponent too large"))?;
        }
        expo[idx] = expo[idx]
            .checked_add(u16::try_from(e).map_err(|_| cur.err("exponent too large"))?)
            .ok_or_else(|| cur.err("exponent overflow"))?;
        saw_anything = true;
        cur.skip_ws();
        if cur.peek() == Some(b'*') {
            cur.bump();
        } else {
            break;
        }
    }
    if !saw_anything {
        return Err(cur.err("expected coefficient or variable"));
    }
    Ok((expo, coeff))
}

fn starts_with_prefix(cur: &Cursor, prefix: &[u8]) -> bool {
    cur.bytes[cur.pos..].starts_with(prefix)
        && matches!(cur.bytes.get(cur.pos + prefix.len()), Some(b'0'..=b'9'))
}
