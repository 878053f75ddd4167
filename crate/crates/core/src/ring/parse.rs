//! Text grammar for ring elements: `2*l^-1*z^3 - d^2`, with parentheses.

use num_bigint::BigInt;

use super::{Mono, RingElem};
use crate::error::{Error, Result};

/// Byte cursor shared by the ring, word and element parsers.
pub struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    pub fn pos(&self) -> usize {
        self.pos
    }

    pub fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    pub fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    pub fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    pub fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    pub fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub fn error(&self, msg: impl Into<String>) -> Error {
        Error::syntax(self.pos, msg)
    }

    /// Unsigned decimal integer, no leading whitespace skipping after sign.
    pub fn digits(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.peek_raw() {
            if c.is_ascii_digit() {
                self.pos += 1;
            } else {
                break;
            }
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        Ok(self.src[start..self.pos].to_string())
    }

    /// Optionally signed integer directly after the cursor (used for exponents).
    pub fn signed_int(&mut self) -> Result<i64> {
        let neg = self.eat('-');
        let at = self.pos;
        let d = self.digits()?;
        let v: i64 = d
            .parse()
            .map_err(|_| Error::syntax(at, "integer too large"))?;
        Ok(if neg { -v } else { v })
    }
}

pub fn parse_ring(s: &str) -> Result<RingElem> {
    let mut cur = Cursor::new(s);
    let out = parse_ring_prefix(&mut cur)?;
    if !cur.at_end() {
        return Err(cur.error("unexpected trailing input"));
    }
    Ok(out)
}

/// Parses a sum of terms, stopping at the first character that cannot
/// continue the expression.
pub fn parse_ring_prefix(cur: &mut Cursor<'_>) -> Result<RingElem> {
    let mut acc = RingElem::zero();
    let mut first = true;
    loop {
        let sign = match cur.peek() {
            Some('+') if !first => {
                cur.bump();
                1
            }
            Some('-') => {
                cur.bump();
                -1
            }
            _ if first => 1,
            _ => break,
        };
        let t = parse_ring_product(cur)?;
        acc = if sign < 0 { &acc - &t } else { &acc + &t };
        first = false;
    }
    Ok(acc)
}

/// A product of factors, stopping before a `*` that is followed by `[`.
pub fn parse_ring_product(cur: &mut Cursor<'_>) -> Result<RingElem> {
    let mut acc = parse_factor(cur)?;
    while cur.peek() == Some('*') {
        // `*` followed by `[` belongs to the element grammar
        let save = cur.pos;
        cur.bump();
        if cur.peek() == Some('[') {
            cur.pos = save;
            break;
        }
        acc = &acc * &parse_factor(cur)?;
    }
    Ok(acc)
}

fn parse_factor(cur: &mut Cursor<'_>) -> Result<RingElem> {
    match cur.peek() {
        Some('(') => {
            cur.bump();
            let inner = parse_ring_prefix(cur)?;
            cur.expect(')')?;
            Ok(inner)
        }
        Some(c) if c.is_ascii_digit() => {
            let at = cur.pos();
            let d = cur.digits()?;
            let v: BigInt = d.parse().map_err(|_| Error::syntax(at, "bad integer"))?;
            Ok(RingElem::mono(Mono::ONE, v))
        }
        Some(c @ ('l' | 'z' | 'd')) => {
            cur.bump();
            let e = if cur.eat('^') { cur.signed_int()? } else { 1 };
            let at = cur.pos() - e.to_string().len();
            if e < 0 && c != 'l' {
                return Err(Error::syntax(at, format!("negative exponent on '{c}'")));
            }
            let e32 = i32::try_from(e).map_err(|_| Error::syntax(at, "exponent too large"))?;
            Ok(match c {
                'l' => RingElem::lambda_pow(e32),
                'z' => RingElem::mono(Mono::new(0, e32 as u32, 0), 1.into()),
                _ => RingElem::delta_pow(e32 as u32),
            })
        }
        Some(c) => Err(cur.error(format!("unexpected '{c}'"))),
        None => Err(cur.error("unexpected end of input")),
    }
}
