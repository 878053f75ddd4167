//! Sparse integer polynomials keyed by an exponent monoid.
//!
//! The same container backs Z[δ], Z[s±1] and Z[λ±1, z±1]; the exponent type
//! decides which of those it is.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exponent of a monomial. The ordering must be a monoid order (compatible
/// with `add`), which is what long division relies on.
pub trait Exponent: Copy + Ord + std::hash::Hash + fmt::Debug {
    fn zero() -> Self;
    fn add(self, other: Self) -> Self;
    /// `self - other` if that is still a valid exponent.
    fn checked_sub(self, other: Self) -> Option<Self>;
}

impl Exponent for u32 {
    fn zero() -> Self {
        0
    }
    fn add(self, other: Self) -> Self {
        self + other
    }
    fn checked_sub(self, other: Self) -> Option<Self> {
        u32::checked_sub(self, other)
    }
}

impl Exponent for i32 {
    fn zero() -> Self {
        0
    }
    fn add(self, other: Self) -> Self {
        self + other
    }
    fn checked_sub(self, other: Self) -> Option<Self> {
        Some(self - other)
    }
}

/// (λ-exponent, z-exponent), compared lexicographically.
impl Exponent for (i32, i32) {
    fn zero() -> Self {
        (0, 0)
    }
    fn add(self, other: Self) -> Self {
        (self.0 + other.0, self.1 + other.1)
    }
    fn checked_sub(self, other: Self) -> Option<Self> {
        Some((self.0 - other.0, self.1 - other.1))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Sparse<K: Exponent> {
    terms: BTreeMap<K, BigInt>,
}

impl<K: Exponent> Sparse<K> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(K::zero(), BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(K::zero(), c.into())
    }

    pub fn monomial(exp: K, coef: BigInt) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coef);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (K, BigInt)>) -> Self {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: K, coef: BigInt) {
        if coef.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coef;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&K, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: K) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<(K, &BigInt)> {
        self.terms.iter().next_back().map(|(k, c)| (*k, c))
    }

    pub fn trailing(&self) -> Option<(K, &BigInt)> {
        self.terms.iter().next().map(|(k, c)| (*k, c))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn shift(&self, exp: K) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.add(exp), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division. Fails if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (lead_exp, lead_coef) = divisor
            .leading()
            .ok_or_else(|| Error::Arithmetic("division by zero".into()))?;
        let lead_coef = lead_coef.clone();
        let (tail_exp, _) = divisor.trailing().expect("nonzero divisor");
        let mut rem = self.clone();
        let mut quot = Self::zero();
        let floor = match self.trailing() {
            Some((t, _)) => t.checked_sub(tail_exp),
            None => return Ok(Self::zero()),
        };
        while let Some((exp, coef)) = rem.leading() {
            let q_exp = exp
                .checked_sub(lead_exp)
                .ok_or_else(|| Error::Arithmetic("inexact division".into()))?;
            if let Some(f) = floor {
                if q_exp < f {
                    return Err(Error::Arithmetic("inexact division".into()));
                }
            }
            let (q_coef, r) = coef.div_rem(&lead_coef);
            if !r.is_zero() {
                return Err(Error::Arithmetic("inexact division".into()));
            }
            let step = Self::monomial(q_exp, q_coef);
            rem = &rem - &(&step * divisor);
            quot = &quot + &step;
        }
        Ok(quot)
    }

    pub fn map_exponents<J: Exponent>(&self, f: impl Fn(K) -> J) -> Sparse<J> {
        Sparse::from_terms(self.terms.iter().map(|(k, c)| (f(*k), c.clone())))
    }
}

impl<K: Exponent> Add for &Sparse<K> {
    type Output = Sparse<K>;
    fn add(self, rhs: Self) -> Sparse<K> {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c.clone());
        }
        out
    }
}

impl<K: Exponent> Sub for &Sparse<K> {
    type Output = Sparse<K>;
    fn sub(self, rhs: Self) -> Sparse<K> {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, -c);
        }
        out
    }
}

impl<K: Exponent> Mul for &Sparse<K> {
    type Output = Sparse<K>;
    fn mul(self, rhs: Self) -> Sparse<K> {
        let mut out = Sparse::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.add(*b), x * y);
            }
        }
        out
    }
}

impl<K: Exponent> Neg for &Sparse<K> {
    type Output = Sparse<K>;
    fn neg(self) -> Sparse<K> {
        Sparse {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<K: Exponent> $tr for Sparse<K> {
            type Output = Sparse<K>;
            fn $m(self, rhs: Self) -> Sparse<K> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Integer polynomial in δ.
pub type DeltaPoly = Sparse<u32>;
/// Integer Laurent polynomial in s.
pub type SPoly = Sparse<i32>;
/// Integer Laurent polynomial in λ and z.
pub type LaurentLZ = Sparse<(i32, i32)>;

fn write_terms<K: Exponent>(
    f: &mut fmt::Formatter<'_>,
    p: &Sparse<K>,
    factors: impl Fn(K) -> Vec<String>,
) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    for (i, (k, c)) in p.terms.iter().enumerate() {
        let fs = factors(*k);
        let neg = c.is_negative();
        let abs = c.abs();
        if i == 0 {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { "-" } else { "+" })?;
        }
        let mut parts = Vec::new();
        if !abs.is_one() || fs.is_empty() {
            parts.push(abs.to_string());
        }
        parts.extend(fs);
        write!(f, "{}", parts.join("*"))?;
    }
    Ok(())
}

pub(crate) fn power(sym: &str, e: i64) -> Option<String> {
    match e {
        0 => None,
        1 => Some(sym.to_string()),
        _ => Some(format!("{sym}^{e}")),
    }
}

impl fmt::Display for DeltaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self, |k| power("d", k as i64).into_iter().collect())
    }
}

impl fmt::Display for SPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self, |k| power("s", k as i64).into_iter().collect())
    }
}

impl fmt::Display for LaurentLZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self, |(l, z)| {
            power("l", l as i64)
                .into_iter()
                .chain(power("z", z as i64))
                .collect()
        })
    }
}

impl<K: Exponent> fmt::Debug for Sparse<K>
where
    Sparse<K>: fmt::Display,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
