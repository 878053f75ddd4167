//! The canonical descending diagram of a connector.
//!
//! Top arcs are closed off first, innermost first, by sliding the right leg
//! over to its partner; the bottom arcs are handled the same way from below;
//! the through strands are joined by a positive permutation braid. Each pair
//! of arcs crosses at most once, and at every crossing the arc with the
//! smaller endpoint goes over.

use super::{Slice, SliceWord};
use crate::connector::Connector;

/// Operations on a left-aligned row of `w` active strands.
#[derive(Clone, Copy, Debug)]
enum Move {
    Cross(usize),
    /// join active strands `i, i + 1` from above
    Cap(usize),
    /// create active strands `i, i + 1`, joined above
    Cup(usize),
}

/// Closes off the arcs among `points` (ordered left to right), innermost
/// first. `partner` gives the other end of each point's arc, if it is among
/// `points`.
fn sweep(points: &[usize], partner: impl Fn(usize) -> Option<usize>) -> Vec<Move> {
    let mut row = points.to_vec();
    let mut arcs: Vec<(usize, usize)> = points
        .iter()
        .filter_map(|&p| partner(p).filter(|&q| q > p).map(|q| (p, q)))
        .collect();
    arcs.sort_by_key(|&(p, q)| (q - p, p));
    let mut moves = Vec::new();
    for (a, b) in arcs {
        let ia = row.iter().position(|&x| x == a).expect("point in row");
        let mut ib = row.iter().position(|&x| x == b).expect("point in row");
        while ib > ia + 1 {
            moves.push(Move::Cross(ib - 1));
            row.swap(ib - 1, ib);
            ib -= 1;
        }
        moves.push(Move::Cap(ia));
        row.drain(ia..ia + 2);
    }
    moves
}

pub fn canonical_word(c: &Connector) -> SliceWord {
    let n = c.n();
    let top: Vec<usize> = (0..n).collect();
    let bottom: Vec<usize> = (n..2 * n).collect();
    let on_top = |p: usize| p < n;

    let mut moves = sweep(&top, |p| Some(c.mate(p)).filter(|&q| on_top(q)));

    // through strands, named by their top point
    let through_top: Vec<usize> = top
        .iter()
        .copied()
        .filter(|&p| !on_top(c.mate(p)))
        .collect();
    let mut through_bottom: Vec<usize> = through_top.clone();
    through_bottom.sort_by_key(|&p| c.mate(p));
    let target = |p: usize| through_bottom.iter().position(|&x| x == p).unwrap();
    let mut row = through_top.clone();
    let mut sorted = false;
    while !sorted {
        sorted = true;
        for j in 0..row.len().saturating_sub(1) {
            if target(row[j]) > target(row[j + 1]) {
                row.swap(j, j + 1);
                moves.push(Move::Cross(j));
                sorted = false;
            }
        }
    }

    let below = sweep(&bottom, |p| Some(c.mate(p)).filter(|&q| !on_top(q)));
    moves.extend(below.into_iter().rev().map(|m| match m {
        Move::Cap(i) => Move::Cup(i),
        other => other,
    }));

    to_slices(c, &moves)
}

/// Realises the moves as slices on n positions. Pairs that are not active
/// are parked at the right end of the row as small cups.
fn to_slices(c: &Connector, moves: &[Move]) -> SliceWord {
    let n = c.n();
    let key = |p: usize| p.min(c.mate(p));
    // active strands named by the key of the arc they belong to
    let mut active: Vec<usize> = (0..n).map(key).collect();
    // bottom arcs, in the order their cups are met from the top
    let mut pending_cups: Vec<usize> = Vec::new();
    {
        let mut row: Vec<usize> = (n..2 * n).collect();
        let mut caps = Vec::new();
        for m in moves.iter().rev() {
            match *m {
                Move::Cross(i) => row.swap(i, i + 1),
                Move::Cup(i) => {
                    caps.push(key(row[i]));
                    row.drain(i..i + 2);
                }
                Move::Cap(_) => break,
            }
        }
        caps.reverse();
        pending_cups.extend(caps);
    }
    let mut cups = pending_cups.into_iter();

    let mut slices = Vec::new();
    for m in moves {
        let w = active.len();
        match *m {
            Move::Cross(i) => {
                let over_left = active[i] < active[i + 1];
                slices.push(if over_left {
                    Slice::pos(i)
                } else {
                    Slice::neg(i)
                });
                active.swap(i, i + 1);
            }
            Move::Cap(i) => {
                slices.extend((i..w - 1).map(Slice::cup));
                active.drain(i..i + 2);
            }
            Move::Cup(i) => {
                slices.extend((i..w).rev().map(Slice::cup));
                let k = cups.next().expect("one cup per bottom arc");
                active.splice(i..i, [k, k]);
            }
        }
    }
    SliceWord::new_unchecked(n, simplify(slices))
}

/// Removes zig-zags: e_i e_{i±1} e_i = e_i.
fn simplify(mut s: Vec<Slice>) -> Vec<Slice> {
    let mut changed = true;
    while changed {
        changed = false;
        let mut j = 0;
        while j + 2 < s.len() {
            let (a, b, c) = (s[j], s[j + 1], s[j + 2]);
            if !a.is_crossing() && !b.is_crossing() && a == c && a.at.abs_diff(b.at) == 1 {
                s.drain(j + 1..j + 3);
                changed = true;
            } else {
                j += 1;
            }
        }
    }
    s
}
