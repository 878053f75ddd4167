//! Named words: a_m, b_m, f_k, h_j, positive permutation braids, Lorenz
//! permutations and the rank-filtered spanning family.

use crate::connector::{enumerate_connectors, Connector};
use crate::diagram::{canonical_word, Slice, SliceWord};
use crate::error::{Error, Result};

fn need(n: usize, strands: usize, what: &str) -> Result<()> {
    if strands > n {
        return Err(Error::InvalidParameter(format!(
            "{what} needs {strands} strands, only {n} available"
        )));
    }
    Ok(())
}

/// a_m = g_m g_{m−1} ... g_1 on n strands.
pub fn a_word(m: usize, n: usize) -> Result<SliceWord> {
    need(n, m + 1, "a_m")?;
    SliceWord::new(n, (0..m).rev().map(Slice::pos).collect())
}

/// b_m = g_m⁻¹ ... g_1⁻¹ on n strands.
pub fn b_word(m: usize, n: usize) -> Result<SliceWord> {
    need(n, m + 1, "b_m")?;
    SliceWord::new(n, (0..m).rev().map(Slice::neg).collect())
}

/// f_0 = 1, f_k = α(a_{2k−2}) f_{k−1} e_{2k−1} a_{2k−2}.
pub fn f_word(k: usize, n: usize) -> Result<SliceWord> {
    need(n, 2 * k, "f_k")?;
    if k == 0 {
        return Ok(SliceWord::empty(n));
    }
    let a = a_word(2 * k - 2, n)?;
    a.alpha()
        .then(&f_word(k - 1, n)?)?
        .then(&SliceWord::e(n, 2 * k - 1)?)?
        .then(&a)
}

/// h_j = α(a_j) α(a_{j−2}) e_{j+1} e_{j−1}, for j ≥ 2.
pub fn h_word(j: usize, n: usize) -> Result<SliceWord> {
    if j < 2 {
        return Err(Error::InvalidParameter("h_j needs j >= 2".into()));
    }
    need(n, j + 2, "h_j")?;
    a_word(j, n)?
        .alpha()
        .then(&a_word(j - 2, n)?.alpha())?
        .then(&SliceWord::e(n, j + 1)?)?
        .then(&SliceWord::e(n, j - 1)?)
}

/// e_1 e_3 ... e_{2k−1}.
pub fn e_odd_word(k: usize, n: usize) -> Result<SliceWord> {
    need(n, 2 * k, "e_1 e_3 ... e_{2k-1}")?;
    SliceWord::new(n, (0..k).map(|j| Slice::cup(2 * j)).collect())
}

/// Connector of F_k on n strands: top points i and 2k+1−i joined, the same
/// at the bottom, the remaining strands vertical.
pub fn f_connector(k: usize, n: usize) -> Result<Connector> {
    need(n, 2 * k, "F_k")?;
    let mut pairs = Vec::new();
    for i in 0..k {
        pairs.push((i, 2 * k - 1 - i));
        pairs.push((n + i, n + 2 * k - 1 - i));
    }
    for i in 2 * k..n {
        pairs.push((i, n + i));
    }
    Connector::from_pairs(n, &pairs)
}

pub fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter()
        .all(|&x| x < p.len() && !std::mem::replace(&mut seen[x], true))
}

pub fn inverse_permutation(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

/// Positive permutation braid of `perm` (0-based: the strand starting at top
/// position i ends at bottom position `perm[i]`), by bubble sort.
pub fn perm_braid(perm: &[usize]) -> Result<SliceWord> {
    if !is_permutation(perm) {
        return Err(Error::InvalidParameter(format!(
            "{perm:?} is not a permutation"
        )));
    }
    let n = perm.len();
    let mut row = perm.to_vec();
    let mut slices = Vec::new();
    let mut sorted = false;
    while !sorted {
        sorted = true;
        for j in 0..n.saturating_sub(1) {
            if row[j] > row[j + 1] {
                row.swap(j, j + 1);
                slices.push(Slice::pos(j));
                sorted = false;
            }
        }
    }
    SliceWord::new(n, slices)
}

pub fn inversions(perm: &[usize]) -> usize {
    let mut count = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                count += 1;
            }
        }
    }
    count
}

/// All permutations of 0..n in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        // next lexicographic permutation
        let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

/// Permutations of 0..ℓ+r that keep the first ℓ and the last r strands in order.
pub fn lorenz_perms(l: usize, r: usize) -> Vec<Vec<usize>> {
    let n = l + r;
    let mut out = Vec::new();
    // choose the bottom positions of the right-hand strands
    fn choose(
        start: usize,
        n: usize,
        left: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for p in start..=n - left {
            cur.push(p);
            choose(p + 1, n, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut sets = Vec::new();
    choose(0, n, r, &mut Vec::new(), &mut sets);
    for right in sets {
        let left: Vec<usize> = (0..n).filter(|p| !right.contains(p)).collect();
        out.push(left.into_iter().chain(right).collect());
    }
    out
}

/// (n choose r)² |C_k|² r! with n = 2k + r.
pub fn spanning_count(n: usize, r: usize) -> Option<num_bigint::BigUint> {
    if r > n || !(n - r).is_multiple_of(2) {
        return None;
    }
    let k = (n - r) / 2;
    let binom = binomial(n, r);
    let ck = crate::connector::connector_count(k);
    let fact: num_bigint::BigUint = (1..=r).map(num_bigint::BigUint::from).product();
    Some(&binom * &binom * &ck * &ck * fact)
}

pub fn binomial(n: usize, r: usize) -> num_bigint::BigUint {
    let mut acc = num_bigint::BigUint::from(1u32);
    for i in 0..r {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Words b_π · t_c f_k t_d · S^{2k}(b_τ) · b_μ on n = 2k + r strands, where
/// π⁻¹ and μ are (2k, r) Lorenz permutations, τ runs over permutations of
/// the last r strands and c, d over k-connectors.
pub fn spanning_family(n: usize, r: usize) -> Result<Vec<SliceWord>> {
    if r > n || !(n - r).is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "n - r must be a non-negative even number (n={n}, r={r})"
        )));
    }
    let k = (n - r) / 2;
    let f = f_word(k, n)?;
    let conns = enumerate_connectors(k);
    let tops: Vec<SliceWord> = conns
        .iter()
        .map(|c| canonical_word(c).widen(n))
        .collect::<Result<_>>()?;
    let mut middles = Vec::new();
    for tc in &tops {
        for td in &tops {
            middles.push(tc.concat(&f)?.then(td)?);
        }
    }
    let lorenz = lorenz_perms(2 * k, r);
    let lefts: Vec<SliceWord> = lorenz
        .iter()
        .map(|p| perm_braid(&inverse_permutation(p)).and_then(|w| w.widen(n)))
        .collect::<Result<_>>()?;
    let rights: Vec<SliceWord> = lorenz
        .iter()
        .map(|p| perm_braid(p).and_then(|w| w.widen(n)))
        .collect::<Result<_>>()?;
    let taus: Vec<SliceWord> = all_permutations(r)
        .iter()
        .map(|t| perm_braid(t).map(|w| w.shift_by(2 * k)))
        .collect::<Result<_>>()?;

    let mut out = Vec::new();
    for left in &lefts {
        for mid in &middles {
            for tau in &taus {
                for right in &rights {
                    out.push(left.concat(mid)?.then(tau)?.then(right)?);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_words() {
        assert_eq!(a_word(2, 3).unwrap().to_string(), "g2 g1");
        assert_eq!(b_word(2, 3).unwrap().to_string(), "g2^-1 g1^-1");
        assert_eq!(f_word(1, 2).unwrap().to_string(), "e1");
        assert_eq!(f_word(2, 4).unwrap().to_string(), "g1 g2 e1 e3 g2 g1");
        assert_eq!(h_word(2, 4).unwrap().to_string(), "g1 g2 e3 e1");
        assert!(f_word(3, 5).is_err());
        assert!(a_word(3, 3).is_err());
    }

    #[test]
    fn braids_and_permutations() {
        assert!(perm_braid(&[0, 1, 2]).unwrap().is_empty());
        let p = vec![3, 2, 1, 0];
        assert_eq!(perm_braid(&p).unwrap().len(), inversions(&p));
        assert_eq!(all_permutations(4).len(), 24);
        assert_eq!(lorenz_perms(3, 4).len(), 35);
        for p in lorenz_perms(2, 3) {
            assert!(p[0] < p[1] && p[2] < p[3] && p[3] < p[4]);
        }
        assert!(perm_braid(&[0, 0]).is_err());
    }

    #[test]
    fn counts() {
        let total: u32 = [0usize, 2, 4]
            .iter()
            .map(|&r| u32::try_from(spanning_count(4, r).unwrap()).unwrap())
            .sum();
        assert_eq!(total, 105);
        assert_eq!(spanning_count(3, 1).unwrap(), 9u32.into());
        assert_eq!(spanning_family(3, 1).unwrap().len(), 9);
        assert_eq!(spanning_family(2, 0).unwrap().len(), 1);
        assert!(spanning_family(3, 0).is_err());
    }
}
