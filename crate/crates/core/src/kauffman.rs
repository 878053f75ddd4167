//! The Dubrovnik polynomial of closures, the Gram matrix of the closure
//! pairing on canonical diagrams, and exact determinants.

use num_bigint::BigInt;
use serde::Serialize;

use crate::algebra::{AlgebraElement, Engine};
use crate::connector::{enumerate_connectors, Connector};
use crate::diagram::{trace, SliceWord};
use crate::error::{Error, Result};
use crate::ring::{DeltaPoly, Exponent, RingElem, SPoly, Sparse};

pub const DEFAULT_MAX_GRAM_N: usize = 3;

/// D of the closure of a word, normalised by D(empty) = 1 and D(O) = δ.
pub fn dubrovnik(eng: &Engine, word: &SliceWord) -> RingElem {
    eng.dubrovnik(word)
}

pub fn dubrovnik_element(eng: &Engine, x: &AlgebraElement) -> RingElem {
    eng.dubrovnik_element(x)
}

/// Number of components of the closure of a word.
pub fn closure_components(word: &SliceWord) -> usize {
    trace(word, 0).loop_count()
}

pub struct GramMatrix {
    pub n: usize,
    pub connectors: Vec<Connector>,
    pub entries: Vec<Vec<RingElem>>,
}

/// a_cd = D(closure of T_c T_d), rows and columns in enumeration order.
pub fn gram_matrix(eng: &Engine, n: usize, max_n: usize) -> Result<GramMatrix> {
    if n > max_n {
        return Err(Error::LimitExceeded { n, max: max_n });
    }
    let connectors = enumerate_connectors(n);
    let words: Vec<SliceWord> = connectors.iter().map(|c| eng.canonical(c)).collect();
    let entries = words
        .iter()
        .map(|tc| {
            words
                .iter()
                .map(|td| eng.dubrovnik(&tc.concat(td).expect("same n")))
                .collect()
        })
        .collect();
    Ok(GramMatrix {
        n,
        connectors,
        entries,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct GramCertificate {
    pub n: usize,
    /// every e(a_cd) is δ^r with r ≤ n, and r = n exactly on the mirror entries
    pub pattern_ok: bool,
    pub pattern_failures: Vec<String>,
    pub brauer_det: String,
    pub delta_n2_coeff: String,
    /// coefficient of the top power δ^(n·|C_n|)
    pub top_coeff: String,
    pub det_nonzero: bool,
    /// how det A ≠ 0 was established
    pub det_witness: String,
}

pub fn gram_certificate(g: &GramMatrix) -> Result<GramCertificate> {
    let n = g.n;
    let size = g.connectors.len();
    let mut failures = Vec::new();
    let special: Vec<Vec<DeltaPoly>> = g
        .entries
        .iter()
        .map(|row| row.iter().map(RingElem::spec_brauer).collect())
        .collect();
    for (i, c) in g.connectors.iter().enumerate() {
        let mirror = c.mirror();
        for (j, d) in g.connectors.iter().enumerate() {
            let v = &special[i][j];
            let r = match v.terms().collect::<Vec<_>>().as_slice() {
                [(&r, coef)] if **coef == BigInt::from(1) => Some(r),
                _ => None,
            };
            let ok = match r {
                Some(r) => r as usize <= n && ((r as usize == n) == (*d == mirror)),
                None => false,
            };
            if !ok {
                failures.push(format!("e(a[{c}, {d}]) = {v}"));
            }
        }
    }
    let det = bareiss_det(special)?;
    let n2 = (n * n) as u32;
    let top = (n * size) as u32;

    let mut det_nonzero = !det.is_zero();
    let mut witness = String::from("e(det A) != 0");
    if !det_nonzero {
        // e(det A) = 0 says nothing; try the s-specialisations
        for m in 1..=6u32 {
            let rows: Vec<Vec<SPoly>> = g
                .entries
                .iter()
                .map(|row| row.iter().map(|a| a.spec_s(m)).collect::<Result<_>>())
                .collect::<Result<_>>()?;
            if !bareiss_det(rows)?.is_zero() {
                det_nonzero = true;
                witness = format!("e_{m}(det A) != 0");
                break;
            }
        }
    }
    Ok(GramCertificate {
        n,
        pattern_ok: failures.is_empty(),
        pattern_failures: failures,
        brauer_det: det.to_string(),
        delta_n2_coeff: det.coeff(n2).to_string(),
        top_coeff: det.coeff(top).to_string(),
        det_nonzero,
        det_witness: witness,
    })
}

/// Determinant of A over Λ, computed in the Laurent embedding.
pub fn laurent_det(g: &GramMatrix) -> Result<crate::ring::LaurentLZ> {
    let rows = g
        .entries
        .iter()
        .map(|row| row.iter().map(RingElem::embed_laurent).collect())
        .collect();
    bareiss_det(rows)
}

/// Fraction-free Gaussian elimination; every division is exact.
pub fn bareiss_det<K: Exponent>(mut m: Vec<Vec<Sparse<K>>>) -> Result<Sparse<K>> {
    let size = m.len();
    if m.iter().any(|row| row.len() != size) {
        return Err(Error::InvalidParameter("matrix is not square".into()));
    }
    if size == 0 {
        return Ok(Sparse::one());
    }
    let mut sign_flip = false;
    let mut prev = Sparse::one();
    for k in 0..size - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..size).find(|&r| !m[r][k].is_zero()) else {
                return Ok(Sparse::zero());
            };
            m.swap(k, p);
            sign_flip = !sign_flip;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[size - 1][size - 1].clone();
    Ok(if sign_flip {
        &Sparse::zero() - &det
    } else {
        det
    })
}
