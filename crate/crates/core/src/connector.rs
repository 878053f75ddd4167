//! n-connectors (Brauer diagrams) and Brauer's algebra over Z[δ].
//!
//! The 2n boundary points are numbered `0..n` for the top (t1..tn) and
//! `n..2n` for the bottom (b1..bn); this is also the global point order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ring::{Cursor, DeltaPoly};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Connector {
    n: usize,
    mate: Vec<usize>,
}

impl Connector {
    /// Builds a connector from the pairing `mate`, which must be a fixed-point
    /// free involution on `0..2n`.
    pub fn from_mates(n: usize, mate: Vec<usize>) -> Result<Self> {
        if mate.len() != 2 * n {
            return Err(Error::InvalidConnector(format!(
                "expected {} points, got {}",
                2 * n,
                mate.len()
            )));
        }
        for (p, &q) in mate.iter().enumerate() {
            if q >= 2 * n || q == p || mate[q] != p {
                return Err(Error::InvalidConnector(format!(
                    "point {p} is not properly paired"
                )));
            }
        }
        Ok(Connector { n, mate })
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut mate = vec![usize::MAX; 2 * n];
        for &(a, b) in pairs {
            if a >= 2 * n || b >= 2 * n || mate[a] != usize::MAX || mate[b] != usize::MAX || a == b
            {
                return Err(Error::InvalidConnector(format!("bad pair ({a} {b})")));
            }
            mate[a] = b;
            mate[b] = a;
        }
        Self::from_mates(n, mate)
    }

    pub fn identity(n: usize) -> Self {
        let mut mate = vec![0; 2 * n];
        for i in 0..n {
            mate[i] = n + i;
            mate[n + i] = i;
        }
        Connector { n, mate }
    }

    /// Connector of E_i (0-based `at`): t_at–t_{at+1}, b_at–b_{at+1}, the rest vertical.
    pub fn cup_cap(n: usize, at: usize) -> Result<Self> {
        if at + 1 >= n {
            return Err(Error::IndexOutOfRange { index: at + 1, n });
        }
        let mut c = Self::identity(n);
        c.mate[at] = at + 1;
        c.mate[at + 1] = at;
        c.mate[n + at] = n + at + 1;
        c.mate[n + at + 1] = n + at;
        Ok(c)
    }

    /// t_i paired with b_{π(i)}, 0-based.
    pub fn from_permutation(perm: &[usize]) -> Result<Self> {
        let n = perm.len();
        let mut mate = vec![usize::MAX; 2 * n];
        for (i, &p) in perm.iter().enumerate() {
            if p >= n {
                return Err(Error::InvalidConnector(format!("{p} is not a position")));
            }
            mate[i] = n + p;
            mate[n + p] = i;
        }
        Self::from_mates(n, mate)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mate(&self, p: usize) -> usize {
        self.mate[p]
    }

    pub fn mates(&self) -> &[usize] {
        &self.mate
    }

    pub fn is_top(&self, p: usize) -> bool {
        p < self.n
    }

    /// Pairs `(a, b)` with `a < b`, sorted by `a`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..2 * self.n)
            .filter(|&p| p < self.mate[p])
            .map(|p| (p, self.mate[p]))
            .collect()
    }

    /// Number of top-to-bottom pairs.
    pub fn rank(&self) -> usize {
        (0..self.n).filter(|&p| self.mate[p] >= self.n).count()
    }

    /// Swaps t_i and b_i.
    pub fn mirror(&self) -> Self {
        let n = self.n;
        let flip = |p: usize| if p < n { p + n } else { p - n };
        let mut mate = vec![0; 2 * n];
        for p in 0..2 * n {
            mate[flip(p)] = flip(self.mate[p]);
        }
        Connector { n, mate }
    }

    /// Relabels i → n+1−i on top and bottom.
    pub fn relabel_rho(&self) -> Self {
        let n = self.n;
        let flip = |p: usize| {
            if p < n {
                n - 1 - p
            } else {
                n + (2 * n - 1 - p)
            }
        };
        let mut mate = vec![0; 2 * n];
        for p in 0..2 * n {
            mate[flip(p)] = flip(self.mate[p]);
        }
        Connector { n, mate }
    }

    /// The permutation (0-based, t_i → b_π(i)) when every pair is a through pair.
    pub fn to_permutation(&self) -> Option<Vec<usize>> {
        if self.rank() != self.n {
            return None;
        }
        Some((0..self.n).map(|i| self.mate[i] - self.n).collect())
    }

    /// Position of a point when walking around the boundary rectangle:
    /// t1..tn left to right, then bn..b1 right to left.
    fn boundary_position(&self, p: usize) -> usize {
        if p < self.n {
            p
        } else {
            3 * self.n - 1 - p
        }
    }

    /// Whether the pairs `a` and `b` interlock on the boundary, i.e. must cross.
    pub fn interlock(&self, a: (usize, usize), b: (usize, usize)) -> bool {
        let (mut x, mut y) = (self.boundary_position(a.0), self.boundary_position(a.1));
        if x > y {
            std::mem::swap(&mut x, &mut y);
        }
        let inside = |p: usize| {
            let q = self.boundary_position(p);
            x < q && q < y
        };
        inside(b.0) != inside(b.1)
    }

    /// Number of interlocking pairs of pairs.
    pub fn interlocking_pairs(&self) -> usize {
        let pairs = self.pairs();
        let mut count = 0;
        for i in 0..pairs.len() {
            for j in i + 1..pairs.len() {
                if self.interlock(pairs[i], pairs[j]) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Stacks `self` above `other` and returns the composite connector and the
    /// number of closed loops formed in the middle.
    pub fn compose(&self, other: &Connector) -> Result<(Connector, usize)> {
        if self.n != other.n {
            return Err(Error::StrandMismatch(self.n, other.n));
        }
        let n = self.n;
        // Middle points m_0..m_{n-1}: bottom of self == top of other.
        // From a middle point we alternate between the two diagrams.
        let mut mate = vec![usize::MAX; 2 * n];
        let mut middle_seen = vec![false; n];
        // Outer points: self's top (0..n) map to result top, other's bottom to result bottom.
        for start in 0..2 * n {
            if mate[start] != usize::MAX {
                continue;
            }
            // Walk: `in_upper` tells which diagram we are inside.
            let (mut p, mut in_upper) = if start < n {
                (start, true)
            } else {
                (start, false)
            };
            let end = loop {
                let q = if in_upper {
                    self.mate[p]
                } else {
                    other.mate[p]
                };
                if in_upper {
                    if q < n {
                        break q;
                    }
                    // reached middle point q - n; continue in lower diagram at its top
                    middle_seen[q - n] = true;
                    p = q - n;
                    in_upper = false;
                } else {
                    if q >= n {
                        break q;
                    }
                    middle_seen[q] = true;
                    p = q + n;
                    in_upper = true;
                }
            };
            mate[start] = end;
            mate[end] = start;
        }
        // Remaining middle points lie on closed loops.
        let mut loops = 0;
        for m in 0..n {
            if middle_seen[m] {
                continue;
            }
            loops += 1;
            let mut cur = m;
            loop {
                middle_seen[cur] = true;
                // go down through `other` from its top point cur
                let q = other.mate[cur];
                debug_assert!(q < n);
                middle_seen[q] = true;
                // go up through `self` from its bottom point q
                let r = self.mate[n + q];
                debug_assert!(r >= n);
                cur = r - n;
                if cur == m {
                    break;
                }
            }
        }
        Ok((Connector { n, mate }, loops))
    }

    fn label(&self, p: usize) -> String {
        if p < self.n {
            format!("t{}", p + 1)
        } else {
            format!("b{}", p - self.n + 1)
        }
    }
}

/// All n-connectors, ordered lexicographically by the partner of the
/// smallest unpaired point.
pub fn enumerate_connectors(n: usize) -> Vec<Connector> {
    fn rec(n: usize, mate: &mut Vec<usize>, out: &mut Vec<Connector>) {
        let Some(first) = mate.iter().position(|&m| m == usize::MAX) else {
            out.push(Connector {
                n,
                mate: mate.clone(),
            });
            return;
        };
        for q in first + 1..2 * n {
            if mate[q] == usize::MAX {
                mate[first] = q;
                mate[q] = first;
                rec(n, mate, out);
                mate[first] = usize::MAX;
                mate[q] = usize::MAX;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut vec![usize::MAX; 2 * n], &mut out);
    out
}

/// (2n − 1)!!
pub fn connector_count(n: usize) -> num_bigint::BigUint {
    (1..=n).fold(num_bigint::BigUint::from(1u32), |acc, k| acc * (2 * k - 1))
}

impl Ord for Connector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.pairs().cmp(&other.pairs()))
    }
}

impl PartialOrd for Connector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Connector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (a, b) in self.pairs() {
            write!(f, "({} {})", self.label(a), self.label(b))?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Connector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `[(t1 b2)(t2 t3)(b1 b3)]`. The strand count is the largest label
/// seen, unless `n` is given.
pub fn parse_connector(cur: &mut Cursor<'_>, n: Option<usize>) -> Result<Connector> {
    let start = cur.pos();
    cur.expect('[')?;
    let mut raw = Vec::new();
    while cur.peek() == Some('(') {
        cur.bump();
        let a = parse_point(cur)?;
        let b = parse_point(cur)?;
        cur.expect(')')?;
        raw.push((a, b));
    }
    cur.expect(']')?;
    let max = raw
        .iter()
        .flat_map(|&((_, i), (_, j))| [i, j])
        .max()
        .unwrap_or(0);
    let n = n.unwrap_or(max);
    if max > n {
        return Err(Error::IndexOutOfRange { index: max, n });
    }
    let idx = |(top, i): (bool, usize)| if top { i - 1 } else { n + i - 1 };
    let pairs: Vec<(usize, usize)> = raw.iter().map(|&(a, b)| (idx(a), idx(b))).collect();
    Connector::from_pairs(n, &pairs).map_err(|e| Error::syntax(start, e.to_string()))
}

fn parse_point(cur: &mut Cursor<'_>) -> Result<(bool, usize)> {
    let top = match cur.bump() {
        Some('t') => true,
        Some('b') => false,
        _ => return Err(cur.error("expected point label t<i> or b<i>")),
    };
    let at = cur.pos();
    let i: usize = cur
        .digits()?
        .parse()
        .map_err(|_| Error::syntax(at, "bad point index"))?;
    if i == 0 {
        return Err(Error::syntax(at, "point indices start at 1"));
    }
    Ok((top, i))
}

impl FromStr for Connector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let c = parse_connector(&mut cur, None)?;
        if !cur.at_end() {
            return Err(cur.error("unexpected trailing input"));
        }
        Ok(c)
    }
}

/// Element of Brauer's algebra A_n.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BrauerElem {
    n: usize,
    terms: BTreeMap<Connector, DeltaPoly>,
}

impl BrauerElem {
    pub fn zero(n: usize) -> Self {
        BrauerElem {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(c: Connector) -> Self {
        let mut out = Self::zero(c.n());
        out.add_term(c, DeltaPoly::one());
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, c: Connector, coef: DeltaPoly) {
        assert_eq!(c.n(), self.n, "connector strand count");
        if coef.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&c) {
            Some(old) => &old + &coef,
            None => coef,
        };
        if !sum.is_zero() {
            self.terms.insert(c, sum);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Connector, &DeltaPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, c: &Connector) -> DeltaPoly {
        self.terms.get(c).cloned().unwrap_or_else(DeltaPoly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &BrauerElem) -> Result<BrauerElem> {
        if self.n != other.n {
            return Err(Error::StrandMismatch(self.n, other.n));
        }
        let mut out = self.clone();
        for (c, v) in &other.terms {
            out.add_term(c.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn mul(&self, other: &BrauerElem) -> Result<BrauerElem> {
        if self.n != other.n {
            return Err(Error::StrandMismatch(self.n, other.n));
        }
        let mut out = Self::zero(self.n);
        for (c, x) in &self.terms {
            for (d, y) in &other.terms {
                let (cd, loops) = c.compose(d)?;
                let coef = &(x * y) * &DeltaPoly::monomial(loops as u32, 1.into());
                out.add_term(cd, coef);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for BrauerElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(c, v)| format!("({v}) * {c}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Union-find path tracing on the glued graph of two stacked connectors.
    fn compose_oracle(c: &Connector, d: &Connector) -> (Vec<usize>, usize) {
        let n = c.n();
        // vertices: c's points 0..2n, d's points 2n..4n; d's top i glued with c's bottom i.
        let mut parent: Vec<usize> = (0..4 * n).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        let union = |p: &mut Vec<usize>, a: usize, b: usize| {
            let (x, y) = (find(p, a), find(p, b));
            p[x] = y;
        };
        for q in 0..2 * n {
            union(&mut parent, q, c.mate(q));
            union(&mut parent, 2 * n + q, 2 * n + d.mate(q));
        }
        for i in 0..n {
            union(&mut parent, n + i, 2 * n + i);
        }
        let outer: Vec<usize> = (0..n).chain(3 * n..4 * n).collect();
        let mut mate = vec![0; 2 * n];
        for (a, &x) in outer.iter().enumerate() {
            for (b, &y) in outer.iter().enumerate() {
                if a != b && find(&mut parent, x) == find(&mut parent, y) {
                    mate[a] = b;
                }
            }
        }
        let mut roots: Vec<usize> = (0..4 * n).map(|x| find(&mut parent, x)).collect();
        let outer_roots: Vec<usize> = outer.iter().map(|&x| roots[x]).collect();
        roots.sort();
        roots.dedup();
        let loops = roots.iter().filter(|r| !outer_roots.contains(r)).count();
        (mate, loops)
    }

    #[test]
    fn counts() {
        let expect = [1usize, 1, 3, 15, 105, 945, 10395];
        for (n, &e) in expect.iter().enumerate() {
            assert_eq!(enumerate_connectors(n).len(), e, "n={n}");
            assert_eq!(connector_count(n), num_bigint::BigUint::from(e));
        }
    }

    #[test]
    fn enumeration_is_sorted_and_distinct() {
        let all = enumerate_connectors(4);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn compose_matches_oracle() {
        for n in 0..=3 {
            let all = enumerate_connectors(n);
            for c in &all {
                for d in &all {
                    let (cd, loops) = c.compose(d).unwrap();
                    let (mate, l2) = compose_oracle(c, d);
                    assert_eq!(cd.mates(), &mate[..], "{c} {d}");
                    assert_eq!(loops, l2, "{c} {d}");
                    assert!(cd.rank() <= c.rank().min(d.rank()));
                }
            }
        }
    }

    #[test]
    fn compose_examples() {
        let id = Connector::identity(3);
        let e1 = Connector::cup_cap(3, 0).unwrap();
        let e2 = Connector::cup_cap(3, 1).unwrap();
        for c in enumerate_connectors(3) {
            assert_eq!(id.compose(&c).unwrap(), (c.clone(), 0));
        }
        let e12 = Connector::cup_cap(2, 0).unwrap();
        assert_eq!(e12.compose(&e12).unwrap(), (e12.clone(), 1));
        let (e2e1, l) = e2.compose(&e1).unwrap();
        assert_eq!(l, 0);
        let (x, l) = e1.compose(&e2e1).unwrap();
        assert_eq!((x, l), (e1, 0));
    }

    #[test]
    fn attributes() {
        assert_eq!(Connector::identity(4).rank(), 4);
        assert_eq!(Connector::cup_cap(2, 0).unwrap().rank(), 0);
        for c in enumerate_connectors(4) {
            assert_eq!(c.mirror().mirror(), c);
            assert_eq!(c.relabel_rho().relabel_rho(), c);
        }
        let e1 = Connector::cup_cap(3, 0).unwrap();
        assert_eq!(e1.relabel_rho(), Connector::cup_cap(3, 1).unwrap());
        let p = Connector::from_permutation(&[1, 2, 0]).unwrap();
        assert_eq!(p.to_string(), "[(t1 b2)(t2 b3)(t3 b1)]");
        assert_eq!(p.to_permutation().unwrap(), vec![1, 2, 0]);
    }

    #[test]
    fn text_roundtrip() {
        for c in enumerate_connectors(3) {
            let s = c.to_string();
            let back: Connector = s.parse().unwrap();
            assert_eq!(back, c);
        }
        let c: Connector = "[(t1 b2)(t2 t3)(b1 b3)]".parse().unwrap();
        assert_eq!(c.rank(), 1);
        assert!("[(t1 b2)(t1 t3)(b1 b3)]".parse::<Connector>().is_err());
    }

    #[test]
    fn interlocking() {
        let s = Connector::from_permutation(&[1, 0]).unwrap();
        assert_eq!(s.interlocking_pairs(), 1);
        assert_eq!(Connector::identity(3).interlocking_pairs(), 0);
        let rev = Connector::from_permutation(&[3, 2, 1, 0]).unwrap();
        assert_eq!(rev.interlocking_pairs(), 6);
    }

    #[test]
    fn brauer_products() {
        let e1 = BrauerElem::basis(Connector::cup_cap(2, 0).unwrap());
        let sq = e1.mul(&e1).unwrap();
        assert_eq!(
            sq.coeff(&Connector::cup_cap(2, 0).unwrap()),
            DeltaPoly::monomial(1, 1.into())
        );
        let id = BrauerElem::basis(Connector::identity(2));
        assert_eq!(id.mul(&sq).unwrap(), sq);
        assert!(e1.mul(&BrauerElem::basis(Connector::identity(3))).is_err());
    }
}
