//! Finite automata.
//!
//! One representation covers λ-NFAs, NFAs and partial or complete DFAs;
//! the class of a value is derived from its transitions, never stored.
//! States are dense indices `0..num_states()`. Optional display names are
//! carried along for automata read from files.

mod determinize;
mod io;
mod minimize;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::regex::Symbol;

pub use determinize::subset_construction;
pub use io::{to_dot, AutomatonFile};
pub use minimize::{distinguishing_word, equivalent, minimize, MinimizeMode};

pub type StateId = usize;

/// Transition label: a letter or the empty word.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Lambda,
    Sym(Symbol),
}

impl Label {
    /// `""`, `"&"`, `"λ"` and `"ε"` denote λ; anything else must be a symbol.
    pub fn parse(s: &str) -> Result<Label> {
        match s {
            "" | "&" | "λ" | "ε" => Ok(Label::Lambda),
            _ => Ok(Label::Sym(Symbol::new(s)?)),
        }
    }

    pub fn symbol(&self) -> Option<&Symbol> {
        match self {
            Label::Lambda => None,
            Label::Sym(a) => Some(a),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Lambda => f.write_str("λ"),
            Label::Sym(a) => write!(f, "{a}"),
        }
    }
}

/// A finite word over symbols.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<Symbol>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Symbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Tokenizes like the expression grammar: `"a1b2a"` is `a1 b2 a`. The
/// empty string, `&` and `λ` give the empty word; whitespace is ignored.
impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        let s = s.trim();
        if s == "&" || s == "λ" {
            return Ok(Word::empty());
        }
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut letters = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let start = i;
            i += 1;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let token: String = chars[start..i].iter().collect();
            letters.push(Symbol::new(&token)?);
        }
        Ok(Word(letters))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("&");
        }
        for a in &self.0 {
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// State and transition counts. `size` is their sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FaMeasures {
    pub states: usize,
    pub transitions: usize,
}

impl FaMeasures {
    pub fn size(&self) -> usize {
        self.states + self.transitions
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automaton {
    alphabet: BTreeSet<Symbol>,
    initial: StateId,
    finals: BTreeSet<StateId>,
    out: Vec<BTreeSet<(Label, StateId)>>,
    names: Option<Vec<String>>,
}

impl Automaton {
    /// `num_states` states (at least one), initial state 0, nothing final.
    pub fn new(num_states: usize) -> Automaton {
        Automaton {
            alphabet: BTreeSet::new(),
            initial: 0,
            finals: BTreeSet::new(),
            out: vec![BTreeSet::new(); num_states.max(1)],
            names: None,
        }
    }

    pub fn num_states(&self) -> usize {
        self.out.len()
    }

    pub fn num_transitions(&self) -> usize {
        self.out.iter().map(BTreeSet::len).sum()
    }

    pub fn states(&self) -> std::ops::Range<StateId> {
        0..self.out.len()
    }

    pub fn alphabet(&self) -> &BTreeSet<Symbol> {
        &self.alphabet
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn finals(&self) -> &BTreeSet<StateId> {
        &self.finals
    }

    pub fn is_final(&self, q: StateId) -> bool {
        self.finals.contains(&q)
    }

    pub fn add_state(&mut self) -> StateId {
        self.out.push(BTreeSet::new());
        if let Some(names) = &mut self.names {
            names.push((self.out.len() - 1).to_string());
        }
        self.out.len() - 1
    }

    pub fn set_initial(&mut self, q: StateId) {
        assert!(q < self.num_states(), "state {q} out of range");
        self.initial = q;
    }

    pub fn set_final(&mut self, q: StateId, is_final: bool) {
        assert!(q < self.num_states(), "state {q} out of range");
        if is_final {
            self.finals.insert(q);
        } else {
            self.finals.remove(&q);
        }
    }

    pub fn add_symbol(&mut self, a: Symbol) {
        self.alphabet.insert(a);
    }

    pub fn extend_alphabet<I: IntoIterator<Item = Symbol>>(&mut self, symbols: I) {
        self.alphabet.extend(symbols);
    }

    /// Adds a transition; letters join the alphabet automatically.
    pub fn add_transition(&mut self, p: StateId, label: Label, q: StateId) {
        assert!(
            p < self.num_states() && q < self.num_states(),
            "state out of range"
        );
        if let Label::Sym(a) = &label {
            if !self.alphabet.contains(a) {
                self.alphabet.insert(a.clone());
            }
        }
        self.out[p].insert((label, q));
    }

    /// Shorthand for tests and examples: `a.add("a", 0, 1)`; `""` is λ.
    pub fn add(&mut self, label: &str, p: StateId, q: StateId) {
        let label = Label::parse(label).expect("valid label");
        self.add_transition(p, label, q);
    }

    pub fn remove_transition(&mut self, p: StateId, label: &Label, q: StateId) -> bool {
        self.out[p].remove(&(label.clone(), q))
    }

    /// Outgoing transitions of `p`, ordered by label then target.
    pub fn outgoing(&self, p: StateId) -> impl Iterator<Item = (&Label, StateId)> + '_ {
        self.out[p].iter().map(|(l, q)| (l, *q))
    }

    pub fn transitions(&self) -> impl Iterator<Item = (StateId, &Label, StateId)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(p, set)| set.iter().map(move |(l, q)| (p, l, *q)))
    }

    pub fn successors<'a>(
        &'a self,
        p: StateId,
        label: &'a Label,
    ) -> impl Iterator<Item = StateId> + 'a {
        self.out[p]
            .iter()
            .filter(move |(l, _)| l == label)
            .map(|(_, q)| *q)
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn set_names(&mut self, names: Vec<String>) {
        assert_eq!(names.len(), self.num_states());
        self.names = Some(names);
    }

    pub fn clear_names(&mut self) {
        self.names = None;
    }

    pub fn state_name(&self, q: StateId) -> String {
        match &self.names {
            Some(names) => names[q].clone(),
            None => q.to_string(),
        }
    }

    /// Looks a state up by display name (or index when unnamed).
    pub fn state_by_name(&self, name: &str) -> Option<StateId> {
        match &self.names {
            Some(names) => names.iter().position(|n| n == name),
            None => name.parse().ok().filter(|&q| q < self.num_states()),
        }
    }

    pub fn is_lambda_free(&self) -> bool {
        self.transitions().all(|(_, l, _)| *l != Label::Lambda)
    }

    /// λ-free with at most one successor per state and letter.
    pub fn is_partial_deterministic(&self) -> bool {
        self.out.iter().all(|set| {
            let mut prev: Option<&Label> = None;
            for (l, _) in set {
                if *l == Label::Lambda || prev == Some(l) {
                    return false;
                }
                prev = Some(l);
            }
            true
        })
    }

    /// Exactly one successor per state and letter of the alphabet.
    pub fn is_complete_deterministic(&self) -> bool {
        self.is_partial_deterministic()
            && self.out.iter().all(|set| {
                set.len() == self.alphabet.len()
                    && set
                        .iter()
                        .zip(self.alphabet.iter())
                        .all(|((l, _), a)| l.symbol() == Some(a))
            })
    }

    pub fn fa_measures(&self) -> FaMeasures {
        FaMeasures {
            states: self.num_states(),
            transitions: self.num_transitions(),
        }
    }

    /// States reachable from `from` by λ-transitions alone (including `from`).
    pub fn lambda_closure(&self, from: &BTreeSet<StateId>) -> BTreeSet<StateId> {
        let mut seen = from.clone();
        let mut stack: Vec<StateId> = from.iter().copied().collect();
        while let Some(p) = stack.pop() {
            for q in self.successors(p, &Label::Lambda) {
                if seen.insert(q) {
                    stack.push(q);
                }
            }
        }
        seen
    }

    /// True iff `w` is accepted. Letters outside the alphabet are an error.
    pub fn accepts(&self, w: &Word) -> Result<bool> {
        let mut current = self.lambda_closure(&BTreeSet::from([self.initial]));
        for a in w.letters() {
            if !self.alphabet.contains(a) {
                return Err(Error::UnknownSymbol(a.to_string()));
            }
            let label = Label::Sym(a.clone());
            let next: BTreeSet<StateId> = current
                .iter()
                .flat_map(|&p| self.successors(p, &label))
                .collect();
            current = self.lambda_closure(&next);
        }
        Ok(current.iter().any(|q| self.finals.contains(q)))
    }

    pub fn accessible(&self) -> Vec<bool> {
        let mut seen = vec![false; self.num_states()];
        seen[self.initial] = true;
        let mut stack = vec![self.initial];
        while let Some(p) = stack.pop() {
            for (_, q) in self.outgoing(p) {
                if !seen[q] {
                    seen[q] = true;
                    stack.push(q);
                }
            }
        }
        seen
    }

    /// States from which some final state is reachable.
    pub fn coaccessible(&self) -> Vec<bool> {
        let n = self.num_states();
        let mut preds: Vec<Vec<StateId>> = vec![Vec::new(); n];
        for (p, _, q) in self.transitions() {
            preds[q].push(p);
        }
        let mut seen = vec![false; n];
        let mut stack: Vec<StateId> = self.finals.iter().copied().collect();
        for &f in &stack {
            seen[f] = true;
        }
        while let Some(q) = stack.pop() {
            for &p in &preds[q] {
                if !seen[p] {
                    seen[p] = true;
                    stack.push(p);
                }
            }
        }
        seen
    }

    /// Breadth-first order from the initial state, following transitions in
    /// label order; unreachable states are omitted.
    pub fn bfs_order(&self) -> Vec<StateId> {
        let mut seen = vec![false; self.num_states()];
        let mut order = vec![self.initial];
        seen[self.initial] = true;
        let mut queue = VecDeque::from([self.initial]);
        while let Some(p) = queue.pop_front() {
            for (_, q) in self.outgoing(p) {
                if !seen[q] {
                    seen[q] = true;
                    order.push(q);
                    queue.push_back(q);
                }
            }
        }
        order
    }

    /// Keeps the listed states, numbered by their position in `order`.
    /// Transitions touching other states are dropped. `order` must contain
    /// the initial state.
    pub fn restrict(&self, order: &[StateId]) -> Automaton {
        let mut index = vec![usize::MAX; self.num_states()];
        for (i, &q) in order.iter().enumerate() {
            index[q] = i;
        }
        assert!(index[self.initial] != usize::MAX, "initial state dropped");
        let mut out = Automaton::new(order.len());
        out.alphabet = self.alphabet.clone();
        out.initial = index[self.initial];
        for (i, &q) in order.iter().enumerate() {
            if self.finals.contains(&q) {
                out.finals.insert(i);
            }
            for (l, r) in self.outgoing(q) {
                if index[r] != usize::MAX {
                    out.out[i].insert((l.clone(), index[r]));
                }
            }
        }
        if let Some(names) = &self.names {
            out.names = Some(order.iter().map(|&q| names[q].clone()).collect());
        }
        out
    }

    /// Renumbers reachable states in breadth-first order.
    pub fn canonical(&self) -> Automaton {
        self.restrict(&self.bfs_order())
    }

    /// Accessible and co-accessible part; the initial state always stays.
    pub fn trim(&self) -> Automaton {
        let acc = self.accessible();
        let co = self.coaccessible();
        let order: Vec<StateId> = self
            .bfs_order()
            .into_iter()
            .filter(|&q| q == self.initial || (acc[q] && co[q]))
            .collect();
        self.restrict(&order)
    }

    /// Copy of `self` whose alphabet also contains `extra`.
    pub fn with_alphabet<'a, I: IntoIterator<Item = &'a Symbol>>(&self, extra: I) -> Automaton {
        let mut a = self.clone();
        a.alphabet.extend(extra.into_iter().cloned());
        a
    }

    /// Standard λ-removal: `p` gets every letter transition leaving its
    /// λ-closure and becomes final when the closure meets a final state.
    /// The state set is unchanged.
    pub fn remove_lambda(&self) -> Automaton {
        if self.is_lambda_free() {
            return self.clone();
        }
        let mut out = Automaton::new(self.num_states());
        out.alphabet = self.alphabet.clone();
        out.initial = self.initial;
        out.names = self.names.clone();
        for p in self.states() {
            let closure = self.lambda_closure(&BTreeSet::from([p]));
            if closure.iter().any(|q| self.finals.contains(q)) {
                out.finals.insert(p);
            }
            for &q in &closure {
                for (l, r) in self.outgoing(q) {
                    if *l != Label::Lambda {
                        out.out[p].insert((l.clone(), r));
                    }
                }
            }
        }
        out
    }

    /// Reverses every transition and swaps initial and final roles. With a
    /// single final state it becomes the initial state; otherwise a fresh
    /// initial state with λ-transitions to the former finals is added.
    pub fn reverse(&self) -> Automaton {
        let n = self.num_states();
        let single = (self.finals.len() == 1).then(|| *self.finals.iter().next().unwrap());
        let mut out = Automaton::new(if single.is_some() { n } else { n + 1 });
        out.alphabet = self.alphabet.clone();
        for (p, l, q) in self.transitions() {
            out.out[q].insert((l.clone(), p));
        }
        match single {
            Some(f) => out.initial = f,
            None => {
                out.initial = n;
                for &f in &self.finals {
                    out.out[n].insert((Label::Lambda, f));
                }
            }
        }
        out.finals.insert(self.initial);
        if let Some(names) = &self.names {
            let mut names = names.clone();
            if single.is_none() {
                names.push(format!("{n}"));
            }
            out.names = Some(names);
        }
        out
    }

    /// A partial DFA with one final state whose reversal is again a
    /// partial DFA.
    pub fn is_bideterministic(&self) -> bool {
        self.finals.len() == 1
            && self.is_partial_deterministic()
            && self.reverse().is_partial_deterministic()
    }
}

pub fn accepts(a: &Automaton, w: &Word) -> Result<bool> {
    a.accepts(w)
}

pub fn remove_lambda(a: &Automaton) -> Automaton {
    a.remove_lambda()
}

pub fn reverse(a: &Automaton) -> Automaton {
    a.reverse()
}

pub fn is_bideterministic(a: &Automaton) -> bool {
    a.is_bideterministic()
}

pub fn fa_measures(a: &Automaton) -> FaMeasures {
    a.fa_measures()
}
