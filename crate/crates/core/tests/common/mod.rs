//! Brute-force oracles shared by the integration tests. None of them use
//! the library's own algorithms beyond the data types.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use refa::automaton::{Automaton, Word};
use refa::graph::Digraph;
use refa::regex::{RegEx, Symbol};

/// Span matcher: does `r` match `w[i..j]`?
pub fn matches(r: &RegEx, w: &[Symbol]) -> bool {
    let mut memo = HashMap::new();
    span(r, w, 0, w.len(), &mut memo)
}

fn span(
    r: &RegEx,
    w: &[Symbol],
    i: usize,
    j: usize,
    memo: &mut HashMap<(*const RegEx, usize, usize), bool>,
) -> bool {
    let key = (r as *const RegEx, i, j);
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let v = match r {
        RegEx::Empty => false,
        RegEx::Epsilon => i == j,
        RegEx::Sym(s) => j == i + 1 && &w[i] == s,
        RegEx::Union(x, y) => span(x, w, i, j, memo) || span(y, w, i, j, memo),
        RegEx::Optional(x) => i == j || span(x, w, i, j, memo),
        RegEx::Concat(x, y) => (i..=j).any(|k| span(x, w, i, k, memo) && span(y, w, k, j, memo)),
        RegEx::Star(x) => {
            i == j || (i + 1..=j).any(|k| span(x, w, i, k, memo) && span(r, w, k, j, memo))
        }
    };
    memo.insert(key, v);
    v
}

/// All words over `sigma` of length at most `max_len`.
pub fn words(sigma: &[Symbol], max_len: usize) -> Vec<Vec<Symbol>> {
    let mut out = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for s in sigma {
                let mut v: Vec<Symbol> = w.clone();
                v.push(s.clone());
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Direct simulation on state sets, λ-closure by fixpoint.
pub fn simulate(a: &Automaton, w: &[Symbol]) -> bool {
    let close = |set: BTreeSet<usize>| {
        let mut set = set;
        loop {
            let more: BTreeSet<usize> = set
                .iter()
                .flat_map(|&p| a.outgoing(p))
                .filter(|(l, _)| l.symbol().is_none())
                .map(|(_, q)| q)
                .collect();
            let before = set.len();
            set.extend(more);
            if set.len() == before {
                return set;
            }
        }
    };
    let mut cur = close(BTreeSet::from([a.initial()]));
    for s in w {
        let next = cur
            .iter()
            .flat_map(|&p| a.outgoing(p))
            .filter(|(l, _)| l.symbol() == Some(s))
            .map(|(_, q)| q)
            .collect();
        cur = close(next);
    }
    cur.iter().any(|&q| a.is_final(q))
}

/// Agreement of an automaton with an expression on every short word.
pub fn agrees(a: &Automaton, r: &RegEx, sigma: &[Symbol], max_len: usize) -> bool {
    words(sigma, max_len)
        .iter()
        .all(|w| simulate(a, w) == matches(r, w))
}

pub fn same_on_short_words(r: &RegEx, s: &RegEx, sigma: &[Symbol], max_len: usize) -> bool {
    words(sigma, max_len)
        .iter()
        .all(|w| matches(r, w) == matches(s, w))
}

pub fn word(w: &[Symbol]) -> Word {
    Word(w.to_vec())
}

fn reach(d: &Digraph, alive: &[usize], from: usize) -> BTreeSet<usize> {
    let mut seen = BTreeSet::from([from]);
    let mut stack = vec![from];
    while let Some(u) = stack.pop() {
        for v in d.successors(u) {
            if alive.contains(&v) && seen.insert(v) {
                stack.push(v);
            }
        }
    }
    seen
}

/// Cycle rank straight from the recursive definition, without memoization
/// or any pruning.
pub fn naive_cycle_rank(d: &Digraph) -> usize {
    let all: Vec<usize> = (0..d.num_vertices()).collect();
    naive_on(d, &all)
}

fn naive_on(d: &Digraph, alive: &[usize]) -> usize {
    let reaches: Vec<BTreeSet<usize>> = alive.iter().map(|&u| reach(d, alive, u)).collect();
    let mut done = BTreeSet::new();
    let mut best = 0;
    for (i, &u) in alive.iter().enumerate() {
        if done.contains(&u) {
            continue;
        }
        let comp: Vec<usize> = alive
            .iter()
            .enumerate()
            .filter(|&(j, &v)| reaches[i].contains(&v) && reaches[j].contains(&u))
            .map(|(_, &v)| v)
            .collect();
        done.extend(comp.iter().copied());
        let cyclic = comp.len() > 1 || d.has_arc(u, u);
        if cyclic {
            let r = 1 + comp
                .iter()
                .map(|&x| {
                    let rest: Vec<usize> = comp.iter().copied().filter(|&y| y != x).collect();
                    naive_on(d, &rest)
                })
                .min()
                .unwrap();
            best = best.max(r);
        }
    }
    best
}

/// Small deterministic digraph generator (splitmix64).
pub fn random_digraph(n: usize, density_percent: u64, seed: u64) -> Digraph {
    let mut state = seed.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut next = || {
        state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    };
    let mut d = Digraph::new(n);
    for u in 0..n {
        for v in 0..n {
            if next() % 100 < density_percent {
                d.add_arc(u, v);
            }
        }
    }
    d
}
