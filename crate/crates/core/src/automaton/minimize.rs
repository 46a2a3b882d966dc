use std::collections::{BTreeSet, HashMap, VecDeque};

use super::{subset_construction, Automaton, Label, StateId, Word};
use crate::error::{Error, Result};
use crate::regex::Symbol;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MinimizeMode {
    /// Complete minimal DFA (a dead state is kept if the language needs one).
    #[default]
    Complete,
    /// Minimal partial DFA: the complete result without its dead state.
    Partial,
}

/// Transition table of a deterministic automaton, completed by a sink when
/// some transition is missing. Only states reachable from the initial state
/// are kept; row 0 is the initial state.
struct Table {
    sigma: Vec<Symbol>,
    delta: Vec<Vec<usize>>,
    finals: Vec<bool>,
}

impl Table {
    fn new(a: &Automaton) -> Table {
        let sigma: Vec<Symbol> = a.alphabet().iter().cloned().collect();
        let order = a.bfs_order();
        let mut row = vec![usize::MAX; a.num_states()];
        for (i, &q) in order.iter().enumerate() {
            row[q] = i;
        }
        let n = order.len();
        let sink = n;
        let mut needs_sink = false;
        let mut delta = Vec::with_capacity(n + 1);
        for &q in &order {
            let mut line = vec![sink; sigma.len()];
            for (l, r) in a.outgoing(q) {
                if let Label::Sym(s) = l {
                    let k = sigma.binary_search(s).expect("letter in alphabet");
                    line[k] = row[r];
                }
            }
            needs_sink |= line.contains(&sink);
            delta.push(line);
        }
        let mut finals: Vec<bool> = order.iter().map(|&q| a.is_final(q)).collect();
        if needs_sink {
            delta.push(vec![sink; sigma.len()]);
            finals.push(false);
        }
        Table {
            sigma,
            delta,
            finals,
        }
    }

    /// Moore refinement; returns the class of every row.
    fn classes(&self) -> (Vec<usize>, usize) {
        let mut class: Vec<usize> = self.finals.iter().map(|&f| usize::from(f)).collect();
        let mut count = class.iter().collect::<BTreeSet<_>>().len();
        loop {
            let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
            let mut next = Vec::with_capacity(class.len());
            for (q, line) in self.delta.iter().enumerate() {
                let mut sig = Vec::with_capacity(line.len() + 1);
                sig.push(class[q]);
                sig.extend(line.iter().map(|&r| class[r]));
                let fresh = ids.len();
                next.push(*ids.entry(sig).or_insert(fresh));
            }
            let new_count = ids.len();
            class = next;
            if new_count == count {
                return (class, count);
            }
            count = new_count;
        }
    }
}

/// Minimizes a deterministic automaton (partial DFAs are completed first).
/// States are renumbered breadth-first from the initial state with letters
/// in alphabet order, so equal languages over equal alphabets give equal
/// values. An empty language yields one non-final state.
pub fn minimize(a: &Automaton, mode: MinimizeMode) -> Result<Automaton> {
    if !a.is_partial_deterministic() {
        return Err(Error::NotDeterministic);
    }
    let table = Table::new(a);
    let (class, count) = table.classes();
    let mut q = Automaton::new(count);
    q.extend_alphabet(table.sigma.iter().cloned());
    q.set_initial(class[0]);
    let mut done = vec![false; count];
    for (row, line) in table.delta.iter().enumerate() {
        let c = class[row];
        if done[c] {
            continue;
        }
        done[c] = true;
        if table.finals[row] {
            q.set_final(c, true);
        }
        for (k, &r) in line.iter().enumerate() {
            q.add_transition(c, Label::Sym(table.sigma[k].clone()), class[r]);
        }
    }
    if mode == MinimizeMode::Partial {
        let co = q.coaccessible();
        if !co[q.initial()] {
            let mut empty = Automaton::new(1);
            empty.extend_alphabet(table.sigma.iter().cloned());
            return Ok(empty);
        }
        let keep: Vec<StateId> = q
            .bfs_order()
            .into_iter()
            .filter(|&s| s == q.initial() || co[s])
            .collect();
        q = q.restrict(&keep);
    }
    Ok(q.canonical())
}

fn canonical_complete(a: &Automaton, sigma: &BTreeSet<Symbol>) -> Automaton {
    let d = subset_construction(&a.with_alphabet(sigma));
    minimize(&d, MinimizeMode::Complete).expect("subset construction is deterministic")
}

/// Language equality, decided on canonical minimal complete DFAs over the
/// union of both alphabets.
pub fn equivalent(a: &Automaton, b: &Automaton) -> bool {
    let sigma: BTreeSet<Symbol> = a.alphabet().union(b.alphabet()).cloned().collect();
    canonical_complete(a, &sigma) == canonical_complete(b, &sigma)
}

type Pair = (StateId, StateId);

/// A shortest word (first in alphabet order among those) accepted by
/// exactly one of the automata, or `None` when they are equivalent.
pub fn distinguishing_word(a: &Automaton, b: &Automaton) -> Option<Word> {
    let sigma: BTreeSet<Symbol> = a.alphabet().union(b.alphabet()).cloned().collect();
    let da = canonical_complete(a, &sigma);
    let db = canonical_complete(b, &sigma);
    let letters: Vec<Symbol> = sigma.into_iter().collect();
    let step = |d: &Automaton, p: StateId, s: &Symbol| -> StateId {
        d.successors(p, &Label::Sym(s.clone()))
            .next()
            .expect("complete DFA")
    };
    let start = (da.initial(), db.initial());
    let mut parent: HashMap<Pair, Option<(Pair, usize)>> = HashMap::from([(start, None)]);
    let mut queue = VecDeque::from([start]);
    while let Some(pair @ (p, q)) = queue.pop_front() {
        if da.is_final(p) != db.is_final(q) {
            let mut letters_rev = Vec::new();
            let mut cur = pair;
            while let Some(Some((prev, k))) = parent.get(&cur) {
                letters_rev.push(letters[*k].clone());
                cur = *prev;
            }
            letters_rev.reverse();
            return Some(Word(letters_rev));
        }
        for (k, s) in letters.iter().enumerate() {
            let next = (step(&da, p, s), step(&db, q, s));
            if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(next) {
                e.insert(Some((pair, k)));
                queue.push_back(next);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn buffer2() -> Automaton {
        let mut a = Automaton::new(3);
        a.add("a", 0, 1);
        a.add("a", 1, 2);
        a.add("b", 2, 1);
        a.add("b", 1, 0);
        a.set_final(0, true);
        a
    }

    #[test]
    fn minimal_buffer_sizes() {
        let a = buffer2();
        let partial = minimize(&a, MinimizeMode::Partial).unwrap();
        assert_eq!(partial.num_states(), 3);
        assert_eq!(partial.num_transitions(), 4);
        let complete = minimize(&a, MinimizeMode::Complete).unwrap();
        assert_eq!(complete.num_states(), 4);
        assert!(complete.is_complete_deterministic());
    }

    #[test]
    fn rejects_nondeterministic_input() {
        let mut n = Automaton::new(2);
        n.add("a", 0, 0);
        n.add("a", 0, 1);
        assert!(matches!(
            minimize(&n, MinimizeMode::Complete),
            Err(Error::NotDeterministic)
        ));
    }

    #[test]
    fn merges_equivalent_states() {
        // a* with a redundant copy of the loop state
        let mut a = Automaton::new(2);
        a.add("a", 0, 1);
        a.add("a", 1, 0);
        a.set_final(0, true);
        a.set_final(1, true);
        let m = minimize(&a, MinimizeMode::Partial).unwrap();
        assert_eq!(m.num_states(), 1);
        assert_eq!(m.num_transitions(), 1);
    }

    #[test]
    fn empty_language_is_one_state() {
        let mut a = Automaton::new(2);
        a.add("a", 0, 1);
        for mode in [MinimizeMode::Complete, MinimizeMode::Partial] {
            let m = minimize(&a, mode).unwrap();
            assert_eq!(m.num_states(), 1);
            assert!(m.finals().is_empty());
        }
        assert_eq!(
            minimize(&a, MinimizeMode::Partial)
                .unwrap()
                .num_transitions(),
            0
        );
    }

    #[test]
    fn equivalence_and_witness() {
        let a = buffer2();
        let mut b = buffer2();
        assert!(equivalent(&a, &b));
        assert_eq!(distinguishing_word(&a, &b), None);
        b.set_final(1, true);
        assert!(!equivalent(&a, &b));
        assert_eq!(distinguishing_word(&a, &b).unwrap().to_string(), "a");
    }

    #[test]
    fn alphabets_are_unified() {
        let mut a = Automaton::new(1);
        a.add("a", 0, 0);
        a.set_final(0, true);
        let mut b = a.clone();
        b.add_symbol(Symbol::new("b").unwrap());
        assert!(equivalent(&a, &b));
        let mut c = a.clone();
        c.add("b", 0, 0);
        assert_eq!(distinguishing_word(&a, &c).unwrap().to_string(), "b");
    }
}
