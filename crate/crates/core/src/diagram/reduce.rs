//! Skein reduction of a word to combinations of canonical diagrams.
//!
//! At the first crossing met from below, the word is rewritten as the
//! switched crossing plus z times the two smoothings. A descending diagram
//! with connector c, writhe w and r loops equals λ^(w(T_c) − w) δ^r T_c.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use super::{canonical_word, trace, Slice, SliceKind, SliceWord};
use crate::connector::Connector;
use crate::ring::RingElem;

pub type Terms = BTreeMap<Connector, RingElem>;

type MemoKey = (usize, usize, Vec<Slice>);

/// Reduction with memoised sub-results and canonical writhes.
#[derive(Default)]
pub struct Reducer {
    canonical: RefCell<HashMap<Connector, (SliceWord, i64)>>,
    memo: RefCell<HashMap<MemoKey, Rc<Terms>>>,
}

impl Reducer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn canonical(&self, c: &Connector) -> (SliceWord, i64) {
        if let Some(hit) = self.canonical.borrow().get(c) {
            return hit.clone();
        }
        let w = canonical_word(c);
        let writhe = trace(&w, c.n()).writhe();
        self.canonical
            .borrow_mut()
            .insert(c.clone(), (w.clone(), writhe));
        (w, writhe)
    }

    /// Reduces `word` with strands `closed_from..n` closed on the right. The
    /// result is indexed by connectors on `closed_from` strands.
    pub fn reduce(&self, word: &SliceWord, closed_from: usize) -> Rc<Terms> {
        let key = (word.n(), closed_from, word.slices().to_vec());
        if let Some(hit) = self.memo.borrow().get(&key) {
            return hit.clone();
        }
        let out = Rc::new(self.reduce_uncached(word, closed_from));
        self.memo.borrow_mut().insert(key, out.clone());
        out
    }

    fn reduce_uncached(&self, word: &SliceWord, closed_from: usize) -> Terms {
        let d = trace(word, closed_from);
        let Some(x) = d.first_violation() else {
            let (_, wc) = self.canonical(&d.connector);
            let e = wc - d.writhe();
            let coef = RingElem::lambda_delta(e as i32, d.loop_count() as u32);
            return BTreeMap::from([(d.connector, coef)]);
        };
        let k = d.crossings[x].slice;
        let s = word.slices()[k];
        let with = |replacement: Option<Slice>| {
            let mut v = word.slices().to_vec();
            match replacement {
                Some(r) => v[k] = r,
                None => {
                    v.remove(k);
                }
            }
            SliceWord::new_unchecked(word.n(), v)
        };
        // X⁺ = X⁻ + z(1 − U), X⁻ = X⁺ − z(1 − U)
        let z = match s.kind {
            SliceKind::Pos => RingElem::z(),
            _ => -RingElem::z(),
        };
        let mut out = Terms::new();
        add_into(
            &mut out,
            &self.reduce(&with(Some(s.switched())), closed_from),
            &RingElem::one(),
        );
        add_into(&mut out, &self.reduce(&with(None), closed_from), &z);
        add_into(
            &mut out,
            &self.reduce(&with(Some(Slice::cup(s.at))), closed_from),
            &-z.clone(),
        );
        out
    }

    pub fn memo_len(&self) -> usize {
        self.memo.borrow().len()
    }

    pub fn clear(&self) {
        self.memo.borrow_mut().clear();
    }
}

pub(crate) fn add_into(acc: &mut Terms, terms: &Terms, scale: &RingElem) {
    for (c, v) in terms {
        let add = if scale.is_one() { v.clone() } else { v * scale };
        let sum = match acc.remove(c) {
            Some(old) => &old + &add,
            None => add,
        };
        if !sum.is_zero() {
            acc.insert(c.clone(), sum);
        }
    }
}

/// Expands `coef · word` in canonical diagrams.
pub fn reduce_term(coef: &RingElem, word: &SliceWord) -> Vec<(RingElem, Connector)> {
    let terms = Reducer::new().reduce(word, word.n());
    terms
        .iter()
        .map(|(c, v)| (v * coef, c.clone()))
        .filter(|(v, _)| !v.is_zero())
        .collect()
}

/// Value of the full closure of `word`, with the empty diagram worth 1.
pub fn close_diagram(word: &SliceWord) -> RingElem {
    close_with(&Reducer::new(), word)
}

pub(crate) fn close_with(r: &Reducer, word: &SliceWord) -> RingElem {
    let terms = r.reduce(word, 0);
    terms
        .get(&Connector::identity(0))
        .cloned()
        .unwrap_or_else(RingElem::zero)
}
