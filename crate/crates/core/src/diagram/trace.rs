//! Strand tracing.
//!
//! The word is laid out on levels `0..=L`; slice `k` joins level `k` to level
//! `k + 1`. Positions `closed_from..n` are joined bottom-to-top around the
//! right-hand side, so `closed_from == 0` is the full closure and
//! `closed_from == n` is the plain tangle.
//!
//! Arcs are walked in the order of their smaller endpoint, starting from it.
//! Closed loops follow, in the order in which a top-to-bottom, left-to-right
//! scan of the slices first meets them.

use super::{SliceKind, SliceWord};
use crate::connector::Connector;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Dir {
    Down,
    Up,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct State {
    level: usize,
    pos: usize,
    dir: Dir,
}

enum Step {
    Edge { piece: usize, next: State },
    Wrap(State),
    End(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComponentKind {
    /// Endpoints as connector points, oriented from `from` to `to`.
    Arc { from: usize, to: usize },
    /// Closed loop first met in slice `slice`.
    Loop { slice: usize },
}

#[derive(Clone, Debug)]
pub struct Component {
    pub kind: ComponentKind,
    /// Crossings in the order they are met, with whether this pass is over.
    pub encounters: Vec<(usize, bool)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub slice: usize,
    pub sign: i32,
    pub over: usize,
    pub under: usize,
}

#[derive(Clone, Debug)]
pub struct Diagram {
    pub connector: Connector,
    pub components: Vec<Component>,
    pub crossings: Vec<Crossing>,
    /// Loops with no slices at all (closed strands of an empty word).
    pub trivial_loops: usize,
}

impl Diagram {
    pub fn loop_count(&self) -> usize {
        self.trivial_loops
            + self
                .components
                .iter()
                .filter(|c| matches!(c.kind, ComponentKind::Loop { .. }))
                .count()
    }

    pub fn arc_count(&self) -> usize {
        self.components.len() + self.trivial_loops - self.loop_count()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    /// Index into `crossings` of the first crossing whose first encounter is
    /// as the under strand, walking the components in order.
    pub fn first_violation(&self) -> Option<usize> {
        let mut seen = vec![false; self.crossings.len()];
        for comp in &self.components {
            for &(x, over) in &comp.encounters {
                if !seen[x] {
                    if !over {
                        return Some(x);
                    }
                    seen[x] = true;
                }
            }
        }
        None
    }

    pub fn is_descending(&self) -> bool {
        self.first_violation().is_none()
    }

    pub fn self_crossings(&self) -> usize {
        self.crossings.iter().filter(|c| c.over == c.under).count()
    }
}

/// The two strands through a crossing: 0 enters top left, 1 enters top right.
#[derive(Clone, Copy)]
struct Strands {
    dir: [i32; 2],
    owner: [usize; 2],
}

struct Tracer<'a> {
    word: &'a SliceWord,
    open: usize,
    /// crossing index by slice, or usize::MAX for cup slices
    crossing_of: Vec<usize>,
    visited: Vec<bool>,
}

impl Tracer<'_> {
    fn levels(&self) -> usize {
        self.word.len()
    }

    fn piece(&self, slice: usize, slot: usize) -> usize {
        slice * 2 * self.word.n() + slot
    }

    fn advance(&self, st: State) -> Step {
        let n = self.word.n();
        let len = self.levels();
        match st.dir {
            Dir::Down => {
                if st.level == len {
                    return if st.pos >= self.open {
                        Step::Wrap(State { level: 0, ..st })
                    } else {
                        Step::End(self.open + st.pos)
                    };
                }
                let k = st.level;
                let s = self.word.slices()[k];
                let (p, i) = (st.pos, s.at);
                let down = |pos| State {
                    level: k + 1,
                    pos,
                    dir: Dir::Down,
                };
                if p != i && p != i + 1 {
                    return Step::Edge {
                        piece: self.piece(k, p),
                        next: down(p),
                    };
                }
                match s.kind {
                    SliceKind::Cup => {
                        let other = if p == i { i + 1 } else { i };
                        Step::Edge {
                            piece: self.piece(k, i),
                            next: State {
                                level: k,
                                pos: other,
                                dir: Dir::Up,
                            },
                        }
                    }
                    _ => {
                        let other = if p == i { i + 1 } else { i };
                        Step::Edge {
                            piece: self.piece(k, p),
                            next: down(other),
                        }
                    }
                }
            }
            Dir::Up => {
                if st.level == 0 {
                    return if st.pos >= self.open {
                        Step::Wrap(State { level: len, ..st })
                    } else {
                        Step::End(st.pos)
                    };
                }
                let k = st.level - 1;
                let s = self.word.slices()[k];
                let (p, i) = (st.pos, s.at);
                let up = |pos| State {
                    level: k,
                    pos,
                    dir: Dir::Up,
                };
                if p != i && p != i + 1 {
                    return Step::Edge {
                        piece: self.piece(k, p),
                        next: up(p),
                    };
                }
                let other = if p == i { i + 1 } else { i };
                match s.kind {
                    SliceKind::Cup => Step::Edge {
                        piece: self.piece(k, n + i),
                        next: State {
                            level: k + 1,
                            pos: other,
                            dir: Dir::Down,
                        },
                    },
                    // the piece is named by its top position
                    _ => Step::Edge {
                        piece: self.piece(k, other),
                        next: up(other),
                    },
                }
            }
        }
    }

    /// Records a crossing pass, if `piece` belongs to a crossing slice.
    fn note(
        &self,
        piece: usize,
        dir: Dir,
        comp: usize,
        out: &mut Vec<(usize, bool)>,
        strands: &mut [Strands],
    ) {
        let n = self.word.n();
        let k = piece / (2 * n);
        let slot = piece % (2 * n);
        let x = self.crossing_of[k];
        if x == usize::MAX {
            return;
        }
        let s = self.word.slices()[k];
        if slot != s.at && slot != s.at + 1 {
            return;
        }
        // strand 0 runs from top-left to bottom-right
        let strand = slot - s.at;
        let over = (strand == 0) == (s.kind == SliceKind::Pos);
        strands[x].dir[strand] = if dir == Dir::Down { 1 } else { -1 };
        strands[x].owner[strand] = comp;
        out.push((x, over));
    }

    fn walk(
        &mut self,
        start: State,
        comp: usize,
        strands: &mut [Strands],
    ) -> (Vec<(usize, bool)>, Option<usize>) {
        let mut enc = Vec::new();
        let mut st = start;
        loop {
            match self.advance(st) {
                Step::Edge { piece, next } => {
                    self.visited[piece] = true;
                    self.note(piece, st.dir, comp, &mut enc, strands);
                    st = next;
                }
                Step::Wrap(next) => st = next,
                Step::End(point) => return (enc, Some(point)),
            }
            if st == start {
                return (enc, None);
            }
        }
    }
}

/// Traces `word` with strands `closed_from..n` closed around the right.
pub fn trace(word: &SliceWord, closed_from: usize) -> Diagram {
    let n = word.n();
    let open = closed_from.min(n);
    let len = word.len();
    let mut crossing_of = vec![usize::MAX; len];
    let mut count = 0;
    for (k, s) in word.slices().iter().enumerate() {
        if s.is_crossing() {
            crossing_of[k] = count;
            count += 1;
        }
    }
    let mut tracer = Tracer {
        word,
        open,
        crossing_of,
        visited: vec![false; len * 2 * n],
    };
    let mut strands = vec![
        Strands {
            dir: [0; 2],
            owner: [usize::MAX; 2]
        };
        count
    ];
    let mut components: Vec<Component> = Vec::new();
    let mut mate = vec![usize::MAX; 2 * open];

    for p in 0..2 * open {
        if mate[p] != usize::MAX {
            continue;
        }
        let start = if p < open {
            State {
                level: 0,
                pos: p,
                dir: Dir::Down,
            }
        } else {
            State {
                level: len,
                pos: p - open,
                dir: Dir::Up,
            }
        };
        let (enc, end) = tracer.walk(start, components.len(), &mut strands);
        let q = end.expect("arc ends on the boundary");
        mate[p] = q;
        mate[q] = p;
        components.push(Component {
            kind: ComponentKind::Arc { from: p, to: q },
            encounters: enc,
        });
    }

    let mut trivial_loops = 0;
    if len == 0 {
        trivial_loops = n - open;
    } else {
        for k in 0..len {
            let s = word.slices()[k];
            let mut starts = Vec::new();
            for p in 0..n {
                if s.kind == SliceKind::Cup && p == s.at + 1 {
                    continue;
                }
                starts.push((
                    tracer.piece(k, p),
                    State {
                        level: k,
                        pos: p,
                        dir: Dir::Down,
                    },
                ));
            }
            if s.kind == SliceKind::Cup {
                starts.push((
                    tracer.piece(k, n + s.at),
                    State {
                        level: k + 1,
                        pos: s.at,
                        dir: Dir::Up,
                    },
                ));
            }
            for (piece, start) in starts {
                if tracer.visited[piece] {
                    continue;
                }
                let (enc, end) = tracer.walk(start, components.len(), &mut strands);
                debug_assert!(end.is_none());
                components.push(Component {
                    kind: ComponentKind::Loop { slice: k },
                    encounters: enc,
                });
            }
        }
    }

    let mut crossings = Vec::with_capacity(count);
    for (k, s) in word.slices().iter().enumerate() {
        let x = tracer.crossing_of[k];
        if x == usize::MAX {
            continue;
        }
        let chirality = if s.kind == SliceKind::Pos { 1 } else { -1 };
        let Strands { dir, owner: [a, b] } = strands[x];
        let (over, under) = if s.kind == SliceKind::Pos {
            (a, b)
        } else {
            (b, a)
        };
        crossings.push(Crossing {
            slice: k,
            sign: chirality * dir[0] * dir[1],
            over,
            under,
        });
    }

    let connector = Connector::from_mates(open, mate).expect("traced pairing is an involution");
    Diagram {
        connector,
        components,
        crossings,
        trivial_loops,
    }
}
