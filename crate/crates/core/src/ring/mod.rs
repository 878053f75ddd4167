//! The coefficient ring Λ = Z[λ±1, z, δ] / (λ⁻¹ − λ = z(δ − 1)) and its
//! specialisations.
//!
//! Elements are kept as Z-combinations of monomials λ^a z^b δ^c with
//! `b * c == 0`. Any mixed monomial is rewritten with z·δ → λ⁻¹ − λ + z.

mod parse;
mod sparse;

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use sparse::{DeltaPoly, Exponent, LaurentLZ, SPoly, Sparse};

/// Monomial λ^l z^z δ^d. Field order gives the printing order
/// (δ-exponent, then z-exponent, then λ-exponent).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Mono {
    pub d: u32,
    pub z: u32,
    pub l: i32,
}

impl Mono {
    pub const ONE: Mono = Mono { d: 0, z: 0, l: 0 };

    pub fn new(l: i32, z: u32, d: u32) -> Self {
        Mono { d, z, l }
    }

    fn is_normal(&self) -> bool {
        self.z == 0 || self.d == 0
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RingElem {
    terms: BTreeMap<Mono, BigInt>,
}

thread_local! {
    static ZD_CACHE: RefCell<HashMap<(u32, u32), RingElem>> = RefCell::new(HashMap::new());
}

/// Normal form of z^b δ^c.
fn zd_normal(b: u32, c: u32) -> RingElem {
    if b == 0 || c == 0 {
        return RingElem::mono(Mono::new(0, b, c), BigInt::one());
    }
    if let Some(hit) = ZD_CACHE.with(|m| m.borrow().get(&(b, c)).cloned()) {
        return hit;
    }
    // z^b δ^c = z^(b-m) δ^(c-m) (u + z)^m with m = min(b, c), u = λ⁻¹ − λ.
    let m = b.min(c);
    let u = RingElem::from_terms([
        (Mono::new(-1, 0, 0), 1.into()),
        (Mono::new(1, 0, 0), (-1).into()),
    ]);
    let mut out = RingElem::zero();
    let mut binom = BigInt::one();
    for j in 0..=m {
        // C(m, j) u^(m-j) z^j, times z^(b-m) δ^(c-m)
        let upow = u.pow(m - j);
        let rest = zd_normal(b - m + j, c - m);
        out = &out + &(&upow * &rest).scale(&binom);
        binom = binom * BigInt::from(m - j) / BigInt::from(j + 1);
    }
    ZD_CACHE.with(|cache| cache.borrow_mut().insert((b, c), out.clone()));
    out
}

impl RingElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn int(c: i64) -> Self {
        Self::mono(Mono::ONE, BigInt::from(c))
    }

    pub fn lambda() -> Self {
        Self::lambda_pow(1)
    }

    pub fn lambda_pow(e: i32) -> Self {
        Self::mono(Mono::new(e, 0, 0), BigInt::one())
    }

    pub fn z() -> Self {
        Self::mono(Mono::new(0, 1, 0), BigInt::one())
    }

    pub fn delta() -> Self {
        Self::delta_pow(1)
    }

    pub fn delta_pow(e: u32) -> Self {
        Self::mono(Mono::new(0, 0, e), BigInt::one())
    }

    /// λ^l δ^d, the shape every reduction leaf produces.
    pub fn lambda_delta(l: i32, d: u32) -> Self {
        Self::mono(Mono::new(l, 0, d), BigInt::one())
    }

    /// Single monomial; a mixed z·δ monomial is normalised.
    pub fn mono(m: Mono, coef: BigInt) -> Self {
        if m.is_normal() {
            let mut out = Self::zero();
            out.add_term(m, coef);
            out
        } else {
            zd_normal(m.z, m.d).shift_lambda(m.l).scale(&coef)
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Mono, BigInt)>) -> Self {
        let mut out = Self::zero();
        for (m, c) in terms {
            out = &out + &Self::mono(m, c);
        }
        out
    }

    fn add_term(&mut self, m: Mono, coef: BigInt) {
        debug_assert!(m.is_normal());
        if coef.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(BigInt::zero);
        *e += coef;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Mono::ONE).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn shift_lambda(&self, e: i32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (Mono::new(m.l + e, m.z, m.d), v.clone()))
                .collect(),
        }
    }

    /// Total degree |a| + b + c of the largest monomial.
    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.l.unsigned_abs() + m.z + m.d)
            .max()
            .unwrap_or(0)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Specialisation e: λ ↦ 1, z ↦ 0, δ ↦ δ.
    pub fn spec_brauer(&self) -> DeltaPoly {
        DeltaPoly::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.z == 0)
                .map(|(m, c)| (m.d, c.clone())),
        )
    }

    /// Specialisation e_n: λ ↦ s^(2n−1), z ↦ s − s⁻¹,
    /// δ ↦ 1 + (s^(1−2n) − s^(2n−1)) / (s − s⁻¹).
    pub fn spec_s(&self, n: u32) -> Result<SPoly> {
        if n == 0 {
            return Err(Error::InvalidParameter("spec_s needs n >= 1".into()));
        }
        let e = 2 * n as i32 - 1;
        let z = SPoly::from_terms([(1, BigInt::one()), (-1, -BigInt::one())]);
        let num = SPoly::from_terms([(-e, BigInt::one()), (e, -BigInt::one())]);
        let delta = &SPoly::one() + &num.div_exact(&z)?;
        let mut out = SPoly::zero();
        for (m, c) in &self.terms {
            let term = &(&z.pow(m.z) * &delta.pow(m.d)) * &SPoly::monomial(e * m.l, c.clone());
            out = &out + &term;
        }
        Ok(out)
    }

    /// Embedding into Z[λ±1, z±1] via δ = 1 + (λ⁻¹ − λ)/z.
    pub fn embed_laurent(&self) -> LaurentLZ {
        let delta = LaurentLZ::from_terms([
            ((0, 0), BigInt::one()),
            ((-1, -1), BigInt::one()),
            ((1, -1), -BigInt::one()),
        ]);
        let mut out = LaurentLZ::zero();
        for (m, c) in &self.terms {
            let term = &delta.pow(m.d) * &LaurentLZ::monomial((m.l, m.z as i32), c.clone());
            out = &out + &term;
        }
        out
    }
}

impl Add for &RingElem {
    type Output = RingElem;
    fn add(self, rhs: Self) -> RingElem {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &RingElem {
    type Output = RingElem;
    fn sub(self, rhs: Self) -> RingElem {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Neg for &RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        RingElem {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Mul for &RingElem {
    type Output = RingElem;
    fn mul(self, rhs: Self) -> RingElem {
        let mut normal = RingElem::zero();
        let mut mixed: BTreeMap<(u32, u32), Vec<(i32, BigInt)>> = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let m = Mono::new(a.l + b.l, a.z + b.z, a.d + b.d);
                if m.is_normal() {
                    normal.add_term(m, x * y);
                } else {
                    mixed.entry((m.z, m.d)).or_default().push((m.l, x * y));
                }
            }
        }
        for ((z, d), lams) in mixed {
            let base = zd_normal(z, d);
            for (l, c) in lams {
                for (m, v) in &base.terms {
                    normal.add_term(Mono::new(m.l + l, m.z, m.d), v * &c);
                }
            }
        }
        normal
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RingElem {
            type Output = RingElem;
            fn $m(self, rhs: Self) -> RingElem {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        -&self
    }
}

impl std::iter::Sum for RingElem {
    fn sum<I: Iterator<Item = RingElem>>(iter: I) -> Self {
        iter.fold(RingElem::zero(), |a, b| &a + &b)
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let abs = c.abs();
            let factors: Vec<String> = sparse::power("l", m.l as i64)
                .into_iter()
                .chain(sparse::power("z", m.z as i64))
                .chain(sparse::power("d", m.d as i64))
                .collect();
            let mut parts = Vec::new();
            if !abs.is_one() || factors.is_empty() {
                parts.push(abs.to_string());
            }
            parts.extend(factors);
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingElem({self})")
    }
}

impl FromStr for RingElem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse::parse_ring(s)
    }
}

impl RingElem {
    /// Whether the rendered form needs parentheses when used as a factor.
    pub fn is_compound(&self) -> bool {
        self.terms.len() > 1
    }
}

pub use parse::{parse_ring_prefix, parse_ring_product, Cursor};

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> RingElem {
        s.parse().unwrap()
    }

    #[test]
    fn z_times_delta_rewrites() {
        assert_eq!(&RingElem::z() * &RingElem::delta(), r("l^-1 - l + z"));
    }

    #[test]
    fn z_squared_times_delta() {
        // z²δ = z(λ⁻¹ − λ + z)
        let got = &r("z^2") * &RingElem::delta();
        assert_eq!(got, r("l^-1*z - l*z + z^2"));
        assert_eq!(
            got.embed_laurent(),
            &r("z^2").embed_laurent() * &RingElem::delta().embed_laurent()
        );
    }

    #[test]
    fn z_delta_squared() {
        // zδ² = (λ⁻¹ − λ)δ + (λ⁻¹ − λ + z)
        let got = &RingElem::z() * &RingElem::delta_pow(2);
        assert_eq!(got, r("l^-1 - l + z + l^-1*d - l*d"));
        assert_eq!(
            got.embed_laurent(),
            &RingElem::z().embed_laurent() * &RingElem::delta_pow(2).embed_laurent()
        );
    }

    #[test]
    fn spec_brauer_examples() {
        assert_eq!(
            RingElem::delta_pow(2).spec_brauer(),
            DeltaPoly::monomial(2, 1.into())
        );
        assert!(r("z*l^3").spec_brauer().is_zero());
        assert!(r("l^-1 - l + z").spec_brauer().is_zero());
    }

    #[test]
    fn spec_s_examples() {
        assert_eq!(
            RingElem::lambda().spec_s(1).unwrap(),
            SPoly::monomial(1, 1.into())
        );
        assert_eq!(RingElem::one().spec_s(4).unwrap(), SPoly::one());
        assert!(RingElem::delta().spec_s(1).unwrap().is_zero());
        // n = 2: δ ↦ 1 − s^-2 − 1 − s^2
        let d2 = RingElem::delta().spec_s(2).unwrap();
        assert_eq!(d2, SPoly::from_terms([(-2, (-1).into()), (2, (-1).into())]));
    }

    #[test]
    fn embed_examples() {
        assert_eq!(
            RingElem::delta().embed_laurent().to_string(),
            "l^-1*z^-1 + 1 - l*z^-1"
        );
        assert_eq!(
            RingElem::lambda().embed_laurent(),
            LaurentLZ::monomial((1, 0), 1.into())
        );
        assert_eq!(
            r("l^-1 - l + z").embed_laurent(),
            &RingElem::z().embed_laurent() * &RingElem::delta().embed_laurent()
        );
    }

    #[test]
    fn display_order() {
        let x = r("d^2 + 3*z - 2*l^-1 + 1");
        assert_eq!(x.to_string(), "-2*l^-1 + 1 + 3*z + d^2");
        assert_eq!(RingElem::zero().to_string(), "0");
        assert_eq!(r("-l").to_string(), "-l");
    }
}
