use std::collections::BTreeSet;

use crate::automaton::{Automaton, Label};
use crate::regex::{mark, Marked, MarkedRegEx, RegEx};

/// First, last and follow sets of a marked expression over positions
/// `1..=positions`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PositionSets {
    pub positions: usize,
    pub nullable: bool,
    pub first: BTreeSet<usize>,
    pub last: BTreeSet<usize>,
    pub follow: BTreeSet<(usize, usize)>,
}

struct Partial {
    nullable: bool,
    first: BTreeSet<usize>,
    last: BTreeSet<usize>,
}

fn walk(m: &Marked, follow: &mut BTreeSet<(usize, usize)>) -> Partial {
    match m {
        Marked::Empty => Partial {
            nullable: false,
            first: BTreeSet::new(),
            last: BTreeSet::new(),
        },
        Marked::Epsilon => Partial {
            nullable: true,
            first: BTreeSet::new(),
            last: BTreeSet::new(),
        },
        Marked::Pos(i, _) => Partial {
            nullable: false,
            first: BTreeSet::from([*i]),
            last: BTreeSet::from([*i]),
        },
        Marked::Union(s, t) => {
            let s = walk(s, follow);
            let t = walk(t, follow);
            Partial {
                nullable: s.nullable || t.nullable,
                first: &s.first | &t.first,
                last: &s.last | &t.last,
            }
        }
        Marked::Concat(s, t) => {
            let s = walk(s, follow);
            let t = walk(t, follow);
            for &i in &s.last {
                for &j in &t.first {
                    follow.insert((i, j));
                }
            }
            let first = if s.nullable {
                &s.first | &t.first
            } else {
                s.first
            };
            let last = if t.nullable {
                &s.last | &t.last
            } else {
                t.last
            };
            Partial {
                nullable: s.nullable && t.nullable,
                first,
                last,
            }
        }
        Marked::Star(s) => {
            let s = walk(s, follow);
            for &i in &s.last {
                for &j in &s.first {
                    follow.insert((i, j));
                }
            }
            Partial {
                nullable: true,
                ..s
            }
        }
        Marked::Optional(s) => Partial {
            nullable: true,
            ..walk(s, follow)
        },
    }
}

pub fn position_sets(m: &MarkedRegEx) -> PositionSets {
    let mut follow = BTreeSet::new();
    let p = walk(m.tree(), &mut follow);
    PositionSets {
        positions: m.awidth(),
        nullable: p.nullable,
        first: p.first,
        last: p.last,
        follow,
    }
}

/// Position automaton: state 0 plus one state per letter occurrence, so
/// always `awidth(r) + 1` states.
pub fn construct_position(r: &RegEx) -> Automaton {
    let m = mark(r);
    let ps = position_sets(&m);
    let mut a = Automaton::new(ps.positions + 1);
    a.extend_alphabet(r.symbols());
    let letter = |j: usize| Label::Sym(m.letter(j).clone());
    for &j in &ps.first {
        a.add_transition(0, letter(j), j);
    }
    for &(i, j) in &ps.follow {
        a.add_transition(i, letter(j), j);
    }
    for &f in &ps.last {
        a.set_final(f, true);
    }
    if ps.nullable {
        a.set_final(0, true);
    }
    a
}
