#![allow(dead_code)]

use bmw::algebra::verify::random_word;
use bmw::{Connector, Slice, SliceKind, SliceWord};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn w(n: usize, s: &str) -> SliceWord {
    SliceWord::parse(n, s).unwrap()
}

fn sl(kind: SliceKind, at: usize) -> Slice {
    Slice { kind, at }
}

fn sign_kind(rng: &mut ChaCha8Rng) -> SliceKind {
    *[SliceKind::Pos, SliceKind::Neg].choose(rng).unwrap()
}

fn any_kind(rng: &mut ChaCha8Rng, cups: bool) -> SliceKind {
    if cups {
        *[SliceKind::Pos, SliceKind::Neg, SliceKind::Cup]
            .choose(rng)
            .unwrap()
    } else {
        sign_kind(rng)
    }
}

/// A pair of letter sequences equal by one defining relation: far
/// commutation, a braid relation, a mixed braid relation or cancellation.
pub fn relation_pair(rng: &mut ChaCha8Rng, n: usize, cups: bool) -> (Vec<Slice>, Vec<Slice>) {
    loop {
        match rng.gen_range(0..4) {
            0 if n >= 4 => {
                let i = rng.gen_range(0..n - 1);
                let j = rng.gen_range(0..n - 1);
                if i.abs_diff(j) < 2 {
                    continue;
                }
                let (a, b) = (sl(any_kind(rng, cups), i), sl(any_kind(rng, cups), j));
                return (vec![a, b], vec![b, a]);
            }
            1 if n >= 3 => {
                let i = rng.gen_range(0..n - 2);
                let k = sign_kind(rng);
                let x = |at| sl(k, at);
                return (vec![x(i), x(i + 1), x(i)], vec![x(i + 1), x(i), x(i + 1)]);
            }
            2 if n >= 3 => {
                // g_i g_{i+1} g_i^-1 = g_{i+1}^-1 g_i g_{i+1}, or its mirror
                let i = rng.gen_range(0..n - 2);
                let (p, q) = if rng.gen() { (i, i + 1) } else { (i + 1, i) };
                return (
                    vec![Slice::pos(p), Slice::pos(q), Slice::neg(p)],
                    vec![Slice::neg(q), Slice::pos(p), Slice::pos(q)],
                );
            }
            3 if n >= 2 => {
                let s = sl(sign_kind(rng), rng.gen_range(0..n - 1));
                return (vec![s, s.inverse()], vec![]);
            }
            _ if n < 2 => return (vec![], vec![]),
            _ => continue,
        }
    }
}

/// Two words differing by one relation applied somewhere inside a random word.
pub fn rewrite_instance(
    rng: &mut ChaCha8Rng,
    n: usize,
    len: usize,
    cups: bool,
) -> (SliceWord, SliceWord) {
    let base = random_word(rng, n, len, cups);
    let cut = rng.gen_range(0..=base.len());
    let (lhs, rhs) = relation_pair(rng, n, cups);
    let build = |mid: &[Slice]| {
        let mut s = base.slices()[..cut].to_vec();
        s.extend_from_slice(mid);
        s.extend_from_slice(&base.slices()[cut..]);
        SliceWord::new(n, s).unwrap()
    };
    if rng.gen() {
        (build(&lhs), build(&rhs))
    } else {
        (build(&rhs), build(&lhs))
    }
}

/// Connector of a word by stacking the connectors of its letters, with the
/// closed loops counted; independent of the tracer.
pub fn word_connector(word: &SliceWord) -> (Connector, usize) {
    let n = word.n();
    let mut acc = Connector::identity(n);
    let mut loops = 0;
    for s in word.slices() {
        let c = match s.kind {
            SliceKind::Cup => Connector::cup_cap(n, s.at).unwrap(),
            _ => {
                let mut p: Vec<usize> = (0..n).collect();
                p.swap(s.at, s.at + 1);
                Connector::from_permutation(&p).unwrap()
            }
        };
        let (next, l) = acc.compose(&c).unwrap();
        acc = next;
        loops += l;
    }
    (acc, loops)
}

/// Components of the closure of a connector (top i joined to bottom i),
/// by walking the pairs.
pub fn closure_loops(c: &Connector) -> usize {
    let n = c.n();
    let mut seen = vec![false; 2 * n];
    let mut count = 0;
    for start in 0..2 * n {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut p = start;
        while !seen[p] {
            seen[p] = true;
            let q = c.mate(p);
            seen[q] = true;
            // through the closing strand to the other side
            p = if q < n { q + n } else { q - n };
        }
    }
    count
}

/// Cycle count of the permutation of a braid word.
pub fn braid_cycles(word: &SliceWord) -> usize {
    let n = word.n();
    let mut pos: Vec<usize> = (0..n).collect();
    for s in word.slices() {
        assert!(s.is_crossing());
        pos.swap(s.at, s.at + 1);
    }
    let mut seen = vec![false; n];
    let mut cycles = 0;
    for i in 0..n {
        if !seen[i] {
            cycles += 1;
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                j = pos[j];
            }
        }
    }
    cycles
}

/// A word of crossings only, with `crossings` letters.
pub fn random_braid(rng: &mut ChaCha8Rng, n: usize, crossings: usize) -> SliceWord {
    random_word(rng, n, crossings, false)
}
