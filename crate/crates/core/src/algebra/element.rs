use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::connector::{parse_connector, BrauerElem, Connector};
use crate::error::{Error, Result};
use crate::ring::{parse_ring_product, Cursor, RingElem};

/// An element of the tangle algebra on n strands, written in the basis of
/// canonical diagrams indexed by connectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    n: usize,
    terms: BTreeMap<Connector, RingElem>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub coef: String,
    pub connector: String,
}

impl AlgebraElement {
    pub fn zero(n: usize) -> Self {
        AlgebraElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::basis(Connector::identity(n))
    }

    pub fn basis(c: Connector) -> Self {
        let mut x = Self::zero(c.n());
        x.terms.insert(c, RingElem::one());
        x
    }

    pub fn from_terms(
        n: usize,
        terms: impl IntoIterator<Item = (Connector, RingElem)>,
    ) -> Result<Self> {
        let mut x = Self::zero(n);
        for (c, v) in terms {
            if c.n() != n {
                return Err(Error::StrandMismatch(n, c.n()));
            }
            x.add_term(c, v);
        }
        Ok(x)
    }

    pub(crate) fn add_term(&mut self, c: Connector, v: RingElem) {
        if v.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&c) {
            Some(old) => &old + &v,
            None => v,
        };
        if !sum.is_zero() {
            self.terms.insert(c, sum);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Connector, &RingElem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, c: &Connector) -> RingElem {
        self.terms.get(c).cloned().unwrap_or_else(RingElem::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = &Connector> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        if self.n != other.n {
            return Err(Error::StrandMismatch(self.n, other.n));
        }
        let mut out = self.clone();
        for (c, v) in &other.terms {
            out.add_term(c.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> AlgebraElement {
        self.scale(&-RingElem::one())
    }

    pub fn scale(&self, k: &RingElem) -> AlgebraElement {
        let mut out = Self::zero(self.n);
        for (c, v) in &self.terms {
            out.add_term(c.clone(), v * k);
        }
        out
    }

    /// Largest number of through strands over the support (0 for the zero element).
    pub fn rank_of(&self) -> usize {
        self.terms.keys().map(Connector::rank).max().unwrap_or(0)
    }

    /// Membership in the ideal spanned by diagrams with at most `r` through strands.
    pub fn in_ideal(&self, r: usize) -> bool {
        self.rank_of() <= r
    }

    /// Image under λ ↦ 1, z ↦ 0 in the Brauer algebra.
    pub fn brauer_image(&self) -> BrauerElem {
        let mut out = BrauerElem::zero(self.n);
        for (c, v) in &self.terms {
            out.add_term(c.clone(), v.spec_brauer());
        }
        out
    }

    /// The connector carrying the only term that survives in the Brauer
    /// image, if there is exactly one.
    pub fn leading_connector(&self) -> Option<Connector> {
        let mut hits = self
            .terms
            .iter()
            .filter(|(_, v)| !v.spec_brauer().is_zero())
            .map(|(c, _)| c);
        let first = hits.next()?;
        if hits.next().is_some() {
            return None;
        }
        Some(first.clone())
    }

    pub fn to_json_terms(&self) -> Vec<JsonTerm> {
        self.terms
            .iter()
            .map(|(c, v)| JsonTerm {
                coef: v.to_string(),
                connector: c.to_string(),
            })
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.to_json_terms()).expect("plain strings serialise")
    }

    pub fn from_json_terms(n: usize, terms: &[JsonTerm]) -> Result<Self> {
        let mut out = Self::zero(n);
        for t in terms {
            let mut cur = Cursor::new(&t.connector);
            let c = parse_connector(&mut cur, Some(n))?;
            out.add_term(c, t.coef.parse()?);
        }
        Ok(out)
    }

    /// Parses `coef * [connector] + ...`; a bare `[connector]` has coefficient 1.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let mut cur = Cursor::new(text);
        let mut out = Self::zero(n);
        if cur.eat('0') {
            if !cur.at_end() {
                return Err(cur.error("unexpected input after 0"));
            }
            return Ok(out);
        }
        let mut first = true;
        while !cur.at_end() {
            let negative = match cur.peek() {
                Some('+') if !first => {
                    cur.bump();
                    false
                }
                Some('-') => {
                    cur.bump();
                    true
                }
                _ if first => false,
                _ => return Err(cur.error("expected '+' or '-'")),
            };
            let coef = if cur.peek() == Some('[') {
                RingElem::one()
            } else {
                let k = parse_ring_product(&mut cur)?;
                cur.expect('*')?;
                k
            };
            let c = parse_connector(&mut cur, Some(n))?;
            out.add_term(c, if negative { -coef } else { coef });
            first = false;
        }
        if first {
            return Err(cur.error("empty element"));
        }
        Ok(out)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (c, v)) in self.terms.iter().enumerate() {
            let text = v.to_string();
            if v.is_compound() {
                if i > 0 {
                    write!(f, " + ")?;
                }
                write!(f, "({text}) * {c}")?;
            } else if let Some(rest) = text.strip_prefix('-') {
                write!(f, "{}{rest} * {c}", if i > 0 { " - " } else { "-" })?;
            } else {
                if i > 0 {
                    write!(f, " + ")?;
                }
                write!(f, "{text} * {c}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraElement(n={}, {})", self.n, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_form() {
        let e1 = Connector::cup_cap(2, 0).unwrap();
        let id = Connector::identity(2);
        let x = AlgebraElement::from_terms(
            2,
            [
                (id.clone(), "-z".parse().unwrap()),
                (e1.clone(), "l^-1 - l".parse().unwrap()),
            ],
        )
        .unwrap();
        let s = x.to_string();
        assert_eq!(s, "(l^-1 - l) * [(t1 t2)(b1 b2)] - z * [(t1 b1)(t2 b2)]");
        assert_eq!(AlgebraElement::parse(2, &s).unwrap(), x);
        assert_eq!(
            AlgebraElement::parse(2, "[(t1 t2)(b1 b2)]").unwrap(),
            AlgebraElement::basis(e1)
        );
        assert_eq!(
            AlgebraElement::parse(2, "0").unwrap(),
            AlgebraElement::zero(2)
        );
        assert!(AlgebraElement::parse(2, "l * [(t1 t3)(b1 b2)]").is_err());
    }

    #[test]
    fn json_is_key_sorted() {
        let x = AlgebraElement::identity(1).scale(&RingElem::delta());
        assert_eq!(
            serde_json::to_string(&x.to_json()).unwrap(),
            r#"[{"coef":"d","connector":"[(t1 b1)]"}]"#
        );
        let back = AlgebraElement::from_json_terms(1, &x.to_json_terms()).unwrap();
        assert_eq!(back, x);
    }
}
