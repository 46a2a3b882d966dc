use std::collections::{BTreeSet, HashMap, VecDeque};

use super::{Automaton, Label, StateId};

/// Subset construction over the reachable subsets.
///
/// The result is a complete DFA over the same alphabet; λ-transitions are
/// followed through closures. States are numbered breadth-first, letters
/// taken in alphabet order. The empty subset appears as a sink only if it
/// is reached.
pub fn subset_construction(a: &Automaton) -> Automaton {
    let sigma: Vec<Label> = a.alphabet().iter().cloned().map(Label::Sym).collect();
    let start: Vec<StateId> = a
        .lambda_closure(&BTreeSet::from([a.initial()]))
        .into_iter()
        .collect();

    let mut index: HashMap<Vec<StateId>, StateId> = HashMap::new();
    let mut subsets: Vec<Vec<StateId>> = Vec::new();
    let mut edges: Vec<(StateId, Label, StateId)> = Vec::new();
    index.insert(start.clone(), 0);
    subsets.push(start);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for label in &sigma {
            let step: BTreeSet<StateId> = subsets[i]
                .iter()
                .flat_map(|&p| a.successors(p, label))
                .collect();
            let target: Vec<StateId> = a.lambda_closure(&step).into_iter().collect();
            let j = match index.get(&target) {
                Some(&j) => j,
                None => {
                    let j = subsets.len();
                    index.insert(target.clone(), j);
                    subsets.push(target);
                    queue.push_back(j);
                    j
                }
            };
            edges.push((i, label.clone(), j));
        }
    }

    let mut d = Automaton::new(subsets.len());
    d.extend_alphabet(a.alphabet().iter().cloned());
    for (i, subset) in subsets.iter().enumerate() {
        if subset.iter().any(|&q| a.is_final(q)) {
            d.set_final(i, true);
        }
    }
    for (p, l, q) in edges {
        d.add_transition(p, l, q);
    }
    d
}
