//! The λ-NFA of Ott and Feinstein and its refinement, the follow automaton.

use std::collections::BTreeSet;

use crate::automaton::{Automaton, Label};
use crate::regex::RegEx;

/// Mutable automaton whose states can be merged.
struct Arena {
    out: Vec<BTreeSet<(Label, usize)>>,
    inc: Vec<BTreeSet<(Label, usize)>>,
    alive: Vec<bool>,
    follow: bool,
}

#[derive(Clone, Copy)]
struct Fragment {
    init: usize,
    fin: usize,
}

impl Arena {
    fn new(follow: bool) -> Arena {
        Arena {
            out: Vec::new(),
            inc: Vec::new(),
            alive: Vec::new(),
            follow,
        }
    }

    fn state(&mut self) -> usize {
        self.out.push(BTreeSet::new());
        self.inc.push(BTreeSet::new());
        self.alive.push(true);
        self.out.len() - 1
    }

    fn arc(&mut self, p: usize, l: Label, q: usize) {
        if p == q && l == Label::Lambda {
            return;
        }
        self.out[p].insert((l.clone(), q));
        self.inc[q].insert((l, p));
    }

    /// Moves every arc of `from` onto `into` and retires `from`.
    fn merge(&mut self, from: usize, into: usize) {
        if from == into {
            return;
        }
        let out = std::mem::take(&mut self.out[from]);
        let inc = std::mem::take(&mut self.inc[from]);
        for (l, q) in &out {
            self.inc[*q].remove(&(l.clone(), from));
        }
        for (l, p) in &inc {
            self.out[*p].remove(&(l.clone(), from));
        }
        for (l, q) in out {
            let q = if q == from { into } else { q };
            self.arc(into, l, q);
        }
        for (l, p) in inc {
            let p = if p == from { into } else { p };
            self.arc(p, l, into);
        }
        self.alive[from] = false;
    }

    fn only_out(&self, p: usize) -> Option<&(Label, usize)> {
        let mut it = self.out[p].iter();
        match (it.next(), it.next()) {
            (Some(x), None) => Some(x),
            _ => None,
        }
    }

    fn only_in(&self, q: usize) -> Option<&(Label, usize)> {
        let mut it = self.inc[q].iter();
        match (it.next(), it.next()) {
            (Some(x), None) => Some(x),
            _ => None,
        }
    }

    fn build(&mut self, r: &RegEx) -> Fragment {
        match r {
            RegEx::Empty => Fragment {
                init: self.state(),
                fin: self.state(),
            },
            RegEx::Epsilon => self.atom(Label::Lambda),
            RegEx::Sym(a) => self.atom(Label::Sym(a.clone())),
            RegEx::Union(s, t) => {
                let fs = self.build(s);
                let ft = self.build(t);
                self.merge(ft.init, fs.init);
                self.merge(ft.fin, fs.fin);
                fs
            }
            RegEx::Concat(s, t) => {
                let fs = self.build(s);
                let ft = self.build(t);
                self.merge(ft.init, fs.fin);
                let mut frag = Fragment {
                    init: fs.init,
                    fin: ft.fin,
                };
                if self.follow {
                    self.shrink_common(fs.fin, &mut frag);
                }
                frag
            }
            RegEx::Star(s) => {
                let fs = self.build(s);
                self.merge(fs.fin, fs.init);
                let m = fs.init;
                let init = self.state();
                let fin = self.state();
                self.arc(init, Label::Lambda, m);
                self.arc(m, Label::Lambda, fin);
                if self.follow {
                    self.collapse_lambda_cycle(m);
                }
                Fragment { init, fin }
            }
            RegEx::Optional(s) => {
                let fs = self.build(s);
                self.arc(fs.init, Label::Lambda, fs.fin);
                fs
            }
        }
    }

    fn atom(&mut self, l: Label) -> Fragment {
        let init = self.state();
        let fin = self.state();
        self.arc(init, l, fin);
        Fragment { init, fin }
    }

    /// Merges along λ-transitions at the state shared by a concatenation.
    /// A λ-arc `p → q` lets `p` merge into `q` when it is the only arc
    /// leaving `p`, and `q` merge into `p` when it is the only arc entering
    /// `q`. The fragment keeps an initial state without incoming arcs and a
    /// final state without outgoing arcs.
    fn shrink_common(&mut self, mut c: usize, frag: &mut Fragment) {
        loop {
            let mut arcs: Vec<(usize, usize)> = self.inc[c]
                .iter()
                .filter(|(l, _)| *l == Label::Lambda)
                .map(|&(_, p)| (p, c))
                .collect();
            arcs.extend(
                self.out[c]
                    .iter()
                    .filter(|(l, _)| *l == Label::Lambda)
                    .map(|&(_, q)| (c, q)),
            );
            let mut merged = false;
            for (p, q) in arcs {
                if let Some((from, into)) = self.safe_merge(p, q, frag) {
                    self.merge(from, into);
                    if frag.init == from {
                        frag.init = into;
                    }
                    if frag.fin == from {
                        frag.fin = into;
                    }
                    if c == from {
                        c = into;
                    }
                    merged = true;
                    break;
                }
            }
            if !merged {
                return;
            }
        }
    }

    fn safe_merge(&self, p: usize, q: usize, frag: &Fragment) -> Option<(usize, usize)> {
        let lambda = (Label::Lambda, q);
        let ends = |x: usize, y: usize| {
            (x == frag.init && y == frag.fin) || (x == frag.fin && y == frag.init)
        };
        if ends(p, q) {
            return None;
        }
        if self.only_out(p) == Some(&lambda) && p != frag.fin {
            let init_ok = p != frag.init || self.inc[q].iter().all(|(_, x)| *x == p);
            if init_ok {
                return Some((p, q));
            }
        }
        if self.only_in(q) == Some(&(Label::Lambda, p)) && q != frag.init {
            let fin_ok = q != frag.fin || self.out[p].iter().all(|(_, x)| *x == q);
            if fin_ok {
                return Some((q, p));
            }
        }
        None
    }

    /// Merges the λ-strongly-connected component of `m`.
    fn collapse_lambda_cycle(&mut self, m: usize) {
        let reach = |arena: &Arena, forward: bool| {
            let mut seen = BTreeSet::from([m]);
            let mut stack = vec![m];
            while let Some(p) = stack.pop() {
                let arcs = if forward {
                    &arena.out[p]
                } else {
                    &arena.inc[p]
                };
                for (l, q) in arcs {
                    if *l == Label::Lambda && seen.insert(*q) {
                        stack.push(*q);
                    }
                }
            }
            seen
        };
        let fwd = reach(self, true);
        let bwd = reach(self, false);
        for q in fwd.intersection(&bwd) {
            self.merge(*q, m);
        }
    }

    /// Removes the λ-arc leaving the initial state by merging its ends.
    fn shrink_initial(&mut self, frag: &mut Fragment) {
        let arcs: Vec<usize> = self.out[frag.init]
            .iter()
            .filter(|(l, _)| *l == Label::Lambda)
            .map(|&(_, q)| q)
            .collect();
        for q in arcs {
            let p = frag.init;
            let lambda = (Label::Lambda, q);
            if self.only_out(p) == Some(&lambda) {
                self.merge(p, q);
                frag.init = q;
                if frag.fin == p {
                    frag.fin = q;
                }
                return;
            }
            if self.only_in(q) == Some(&(Label::Lambda, p)) {
                self.merge(q, p);
                if frag.fin == q {
                    frag.fin = p;
                }
                return;
            }
        }
    }

    fn into_automaton(self, frag: Fragment, r: &RegEx) -> Automaton {
        let live: Vec<usize> = (0..self.out.len()).filter(|&q| self.alive[q]).collect();
        let mut index = vec![usize::MAX; self.out.len()];
        for (i, &q) in live.iter().enumerate() {
            index[q] = i;
        }
        let mut a = Automaton::new(live.len());
        a.extend_alphabet(r.symbols());
        a.set_initial(index[frag.init]);
        a.set_final(index[frag.fin], true);
        for &p in &live {
            for (l, q) in &self.out[p] {
                a.add_transition(index[p], l.clone(), index[*q]);
            }
        }
        a
    }
}

/// λ-NFA with a single initial and a single final state. Union shares
/// both end states, concatenation shares the middle state, and the star
/// loops through a middle state reached and left by λ-transitions.
pub fn construct_of(r: &RegEx) -> Automaton {
    let mut arena = Arena::new(false);
    let frag = arena.build(r);
    arena.into_automaton(frag, r)
}

/// Follow automaton: the construction above with λ-transitions merged away
/// where possible, followed by λ-removal and trimming. States are numbered
/// breadth-first.
pub fn construct_follow(r: &RegEx) -> Automaton {
    let mut arena = Arena::new(true);
    let mut frag = arena.build(r);
    arena.shrink_initial(&mut frag);
    arena.into_automaton(frag, r).remove_lambda().trim()
}
