//! The tangle algebra in basis form: normalisation of words, products, and
//! the standard symmetries.

mod element;
pub mod verify;
pub mod words;

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

pub use element::{AlgebraElement, JsonTerm};

use crate::connector::Connector;
use crate::diagram::{Reducer, SliceWord, Terms};
use crate::error::{Error, Result};
use crate::ring::RingElem;

type ProductTable = RefCell<HashMap<(Connector, Connector), Rc<Terms>>>;

/// Holds the reduction caches. Products of basis elements can additionally be
/// kept in a table; results are the same either way.
pub struct Engine {
    reducer: Reducer,
    table: Option<ProductTable>,
}

impl Default for Engine {
    fn default() -> Self {
        Self::new()
    }
}

impl Engine {
    pub fn new() -> Self {
        Engine {
            reducer: Reducer::new(),
            table: Some(RefCell::new(HashMap::new())),
        }
    }

    /// An engine that recomputes every basis product from canonical words.
    pub fn without_table() -> Self {
        Engine {
            reducer: Reducer::new(),
            table: None,
        }
    }

    pub fn reducer(&self) -> &Reducer {
        &self.reducer
    }

    pub fn canonical(&self, c: &Connector) -> SliceWord {
        self.reducer.canonical(c).0
    }

    pub fn normalize(&self, word: &SliceWord) -> AlgebraElement {
        let terms = self.reducer.reduce(word, word.n());
        AlgebraElement::from_terms(word.n(), terms.iter().map(|(c, v)| (c.clone(), v.clone())))
            .expect("reduction keeps the strand count")
    }

    pub fn normalize_sum(
        &self,
        n: usize,
        expr: &[(RingElem, SliceWord)],
    ) -> Result<AlgebraElement> {
        let mut out = AlgebraElement::zero(n);
        for (k, w) in expr {
            if w.n() != n {
                return Err(Error::StrandMismatch(n, w.n()));
            }
            out = out.add(&self.normalize(w).scale(k))?;
        }
        Ok(out)
    }

    /// Normal form of a product of words.
    pub fn normalize_product(&self, words: &[&SliceWord]) -> Result<AlgebraElement> {
        let Some(first) = words.first() else {
            return Err(Error::InvalidParameter("empty product".into()));
        };
        let mut w = (*first).clone();
        for x in &words[1..] {
            w = w.then(x)?;
        }
        Ok(self.normalize(&w))
    }

    fn basis_product(&self, c: &Connector, d: &Connector) -> Rc<Terms> {
        let compute = || {
            let w = self.canonical(c).then(&self.canonical(d)).expect("same n");
            self.reducer.reduce(&w, c.n())
        };
        match &self.table {
            None => compute(),
            Some(table) => {
                let key = (c.clone(), d.clone());
                if let Some(hit) = table.borrow().get(&key) {
                    return hit.clone();
                }
                let v = compute();
                table.borrow_mut().insert(key, v.clone());
                v
            }
        }
    }

    pub fn multiply(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        if x.n() != y.n() {
            return Err(Error::StrandMismatch(x.n(), y.n()));
        }
        let mut out = AlgebraElement::zero(x.n());
        for (c, a) in x.terms() {
            for (d, b) in y.terms() {
                let ab = a * b;
                for (e, v) in self.basis_product(c, d).iter() {
                    out.add_term(e.clone(), v * &ab);
                }
            }
        }
        Ok(out)
    }

    pub fn multiply_all(&self, xs: &[AlgebraElement]) -> Result<AlgebraElement> {
        let (first, rest) = xs
            .split_first()
            .ok_or_else(|| Error::InvalidParameter("empty product".into()))?;
        rest.iter()
            .try_fold(first.clone(), |acc, x| self.multiply(&acc, x))
    }

    /// Closes the last strand of a tangle on m + 1 strands around the right,
    /// giving an element on m strands.
    pub fn close_last_strand(&self, word: &SliceWord) -> Result<AlgebraElement> {
        let m = word
            .n()
            .checked_sub(1)
            .ok_or_else(|| Error::InvalidParameter("no strand to close".into()))?;
        let terms = self.reducer.reduce(word, m);
        AlgebraElement::from_terms(m, terms.iter().map(|(c, v)| (c.clone(), v.clone())))
    }

    /// The tangle ε_m(T) on m strands with ε_m(T) E_m = T E_m: the last
    /// bottom pair of T capped and its last top point bent down the right.
    /// Equal to closing the last strand of T e_m.
    pub fn epsilon(&self, word: &SliceWord) -> Result<AlgebraElement> {
        let m =
            word.n().checked_sub(1).filter(|&m| m >= 1).ok_or_else(|| {
                Error::InvalidParameter("epsilon needs at least 2 strands".into())
            })?;
        self.close_last_strand(&word.concat(&SliceWord::e(m + 1, m)?)?)
    }

    /// Adds vertical strands on the right.
    pub fn widen(&self, x: &AlgebraElement, n: usize) -> Result<AlgebraElement> {
        if n < x.n() {
            return Err(Error::StrandMismatch(n, x.n()));
        }
        let mut out = AlgebraElement::zero(n);
        for (c, v) in x.terms() {
            let image = self.normalize(&self.canonical(c).widen(n)?);
            for (d, u) in image.terms() {
                out.add_term(d.clone(), u * v);
            }
        }
        Ok(out)
    }

    fn transport(&self, x: &AlgebraElement, f: impl Fn(&SliceWord) -> SliceWord) -> AlgebraElement {
        let mut out = AlgebraElement::zero(x.n());
        for (c, v) in x.terms() {
            let image = self.normalize(&f(&self.canonical(c)));
            for (d, u) in image.terms() {
                out.add_term(d.clone(), u * v);
            }
        }
        out
    }

    /// The anti-automorphism α (reverse every diagram).
    pub fn alpha(&self, x: &AlgebraElement) -> AlgebraElement {
        self.transport(x, SliceWord::alpha)
    }

    /// The automorphism ρ (i → n − i).
    pub fn rho(&self, x: &AlgebraElement) -> AlgebraElement {
        self.transport(x, SliceWord::rho)
    }

    /// Closure value of a word.
    pub fn dubrovnik(&self, word: &SliceWord) -> RingElem {
        crate::diagram::close_with(&self.reducer, word)
    }

    pub fn dubrovnik_element(&self, x: &AlgebraElement) -> RingElem {
        x.terms()
            .map(|(c, v)| &self.dubrovnik(&self.canonical(c)) * v)
            .sum()
    }
}
