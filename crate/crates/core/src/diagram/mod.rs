//! Tangle diagrams written as words of elementary slices.
//!
//! A slice acts on strand positions `at, at + 1` (0-based). `Pos` and `Neg`
//! are crossings in which the strand entering from the top left passes over
//! resp. under; `Cup` joins the two top points and the two bottom points.
//! Words read left to right from the top of the diagram downwards.

mod canonical;
mod reduce;
mod trace;

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::Cursor;

pub use canonical::canonical_word;
pub(crate) use reduce::close_with;
pub use reduce::{close_diagram, reduce_term, Reducer, Terms};
pub use trace::{trace, Component, ComponentKind, Crossing, Diagram};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum SliceKind {
    Pos,
    Neg,
    Cup,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Slice {
    pub kind: SliceKind,
    pub at: usize,
}

impl Slice {
    pub fn pos(at: usize) -> Self {
        Slice {
            kind: SliceKind::Pos,
            at,
        }
    }

    pub fn neg(at: usize) -> Self {
        Slice {
            kind: SliceKind::Neg,
            at,
        }
    }

    pub fn cup(at: usize) -> Self {
        Slice {
            kind: SliceKind::Cup,
            at,
        }
    }

    pub fn is_crossing(&self) -> bool {
        self.kind != SliceKind::Cup
    }

    /// Same slice with the crossing switched.
    pub fn switched(&self) -> Self {
        let kind = match self.kind {
            SliceKind::Pos => SliceKind::Neg,
            SliceKind::Neg => SliceKind::Pos,
            SliceKind::Cup => SliceKind::Cup,
        };
        Slice { kind, at: self.at }
    }

    pub fn inverse(&self) -> Self {
        self.switched()
    }
}

impl fmt::Display for Slice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = self.at + 1;
        match self.kind {
            SliceKind::Pos => write!(f, "g{i}"),
            SliceKind::Neg => write!(f, "g{i}^-1"),
            SliceKind::Cup => write!(f, "e{i}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SliceWord {
    n: usize,
    slices: Vec<Slice>,
}

impl SliceWord {
    pub fn new(n: usize, slices: Vec<Slice>) -> Result<Self> {
        for s in &slices {
            if s.at + 1 >= n {
                return Err(Error::IndexOutOfRange { index: s.at + 1, n });
            }
        }
        Ok(SliceWord { n, slices })
    }

    pub(crate) fn new_unchecked(n: usize, slices: Vec<Slice>) -> Self {
        debug_assert!(slices.iter().all(|s| s.at + 1 < n));
        SliceWord { n, slices }
    }

    pub fn empty(n: usize) -> Self {
        SliceWord {
            n,
            slices: Vec::new(),
        }
    }

    /// g_i with the usual 1-based index.
    pub fn g(n: usize, i: usize) -> Result<Self> {
        Self::generator(n, i, SliceKind::Pos)
    }

    pub fn g_inv(n: usize, i: usize) -> Result<Self> {
        Self::generator(n, i, SliceKind::Neg)
    }

    pub fn e(n: usize, i: usize) -> Result<Self> {
        Self::generator(n, i, SliceKind::Cup)
    }

    fn generator(n: usize, i: usize, kind: SliceKind) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        Ok(SliceWord {
            n,
            slices: vec![Slice { kind, at: i - 1 }],
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn slices(&self) -> &[Slice] {
        &self.slices
    }

    pub fn len(&self) -> usize {
        self.slices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slices.is_empty()
    }

    pub fn crossing_count(&self) -> usize {
        self.slices.iter().filter(|s| s.is_crossing()).count()
    }

    /// `self` stacked above `other`.
    pub fn concat(&self, other: &SliceWord) -> Result<SliceWord> {
        if self.n != other.n {
            return Err(Error::StrandMismatch(self.n, other.n));
        }
        let mut slices = self.slices.clone();
        slices.extend_from_slice(&other.slices);
        Ok(SliceWord { n: self.n, slices })
    }

    pub fn then(mut self, other: &SliceWord) -> Result<SliceWord> {
        if self.n != other.n {
            return Err(Error::StrandMismatch(self.n, other.n));
        }
        self.slices.extend_from_slice(&other.slices);
        Ok(self)
    }

    pub fn push(&mut self, s: Slice) -> Result<()> {
        if s.at + 1 >= self.n {
            return Err(Error::IndexOutOfRange {
                index: s.at + 1,
                n: self.n,
            });
        }
        self.slices.push(s);
        Ok(())
    }

    /// Same word viewed on more strands.
    pub fn widen(&self, n: usize) -> Result<SliceWord> {
        SliceWord::new(n, self.slices.clone())
    }

    /// S: i → i + 1, as a word over n + 1 strands.
    pub fn shift(&self) -> SliceWord {
        self.shift_by(1)
    }

    pub fn shift_by(&self, k: usize) -> SliceWord {
        SliceWord {
            n: self.n + k,
            slices: self
                .slices
                .iter()
                .map(|s| Slice {
                    kind: s.kind,
                    at: s.at + k,
                })
                .collect(),
        }
    }

    /// Reversal α.
    pub fn alpha(&self) -> SliceWord {
        let mut slices = self.slices.clone();
        slices.reverse();
        SliceWord { n: self.n, slices }
    }

    /// ρ: i → n − i.
    pub fn rho(&self) -> SliceWord {
        SliceWord {
            n: self.n,
            slices: self
                .slices
                .iter()
                .map(|s| Slice {
                    kind: s.kind,
                    at: self.n - 2 - s.at,
                })
                .collect(),
        }
    }

    /// Group inverse of a braid word (reverse and invert each letter).
    /// Cup slices are kept, which makes this α composed with crossing switch.
    pub fn inverse(&self) -> SliceWord {
        SliceWord {
            n: self.n,
            slices: self.slices.iter().rev().map(Slice::inverse).collect(),
        }
    }

    pub fn parse(n: usize, text: &str) -> Result<SliceWord> {
        let mut cur = Cursor::new(text);
        let w = parse_word(&mut cur, n)?;
        if !cur.at_end() {
            return Err(cur.error("unexpected trailing input"));
        }
        Ok(w)
    }
}

/// Parses whitespace-separated `g<i>`, `g<i>^-1` and `e<i>` tokens until the
/// next character that cannot start a token.
pub fn parse_word(cur: &mut Cursor<'_>, n: usize) -> Result<SliceWord> {
    let mut slices = Vec::new();
    while let Some(c @ ('g' | 'e')) = cur.peek() {
        let at = cur.pos();
        cur.bump();
        let digits_at = cur.pos();
        let i: usize = cur
            .digits()?
            .parse()
            .map_err(|_| Error::syntax(digits_at, "index too large"))?;
        let mut kind = if c == 'g' {
            SliceKind::Pos
        } else {
            SliceKind::Cup
        };
        if cur.eat('^') {
            let exp_at = cur.pos();
            let e = cur.signed_int()?;
            match (c, e) {
                ('g', -1) => kind = SliceKind::Neg,
                (_, 1) => {}
                _ => return Err(Error::syntax(exp_at, format!("unsupported exponent {e}"))),
            }
        }
        if i == 0 || i >= n {
            return Err(Error::IndexAt {
                offset: at,
                index: i,
                n,
            });
        }
        slices.push(Slice { kind, at: i - 1 });
    }
    Ok(SliceWord { n, slices })
}

impl fmt::Display for SliceWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.slices.iter().map(Slice::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for SliceWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SliceWord(n={}, \"{}\")", self.n, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let w = SliceWord::parse(3, "g1 e2 g1^-1").unwrap();
        assert_eq!(w.slices(), &[Slice::pos(0), Slice::cup(1), Slice::neg(0)]);
        assert_eq!(w.to_string(), "g1 e2 g1^-1");
        assert!(SliceWord::parse(3, "").unwrap().is_empty());
    }

    #[test]
    fn out_of_range_reports_position() {
        let err = SliceWord::parse(2, "g1 g5").unwrap_err();
        assert_eq!(
            err,
            Error::IndexAt {
                offset: 3,
                index: 5,
                n: 2
            }
        );
        assert!(err.to_string().contains("index 5 out of range for n=2"));
        assert!(matches!(
            SliceWord::parse(3, "g1 x"),
            Err(Error::Syntax { offset: 3, .. })
        ));
        assert!(SliceWord::parse(3, "e1^-1").is_err());
    }

    #[test]
    fn word_maps() {
        let w = SliceWord::parse(4, "g1 e2 g3^-1").unwrap();
        assert_eq!(w.alpha().to_string(), "g3^-1 e2 g1");
        assert_eq!(w.rho().to_string(), "g3 e2 g1^-1");
        assert_eq!(w.shift().n(), 5);
        assert_eq!(w.shift().to_string(), "g2 e3 g4^-1");
        assert_eq!(w.alpha().alpha(), w);
        assert_eq!(w.inverse().to_string(), "g3 e2 g1^-1");
    }
}
