use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::automaton::{Automaton, Label};
use crate::regex::Symbol;

/// `a, b, c, …` up to 26 letters, `a1 … ak` beyond that.
pub fn alphabet(k: usize) -> Vec<Symbol> {
    if k <= 26 {
        (0..k)
            .map(|i| Symbol::new(&((b'a' + i as u8) as char).to_string()).unwrap())
            .collect()
    } else {
        (1..=k)
            .map(|i| Symbol::new(&format!("a{i}")).unwrap())
            .collect()
    }
}

/// Complete DFA with uniformly random targets and each state final with
/// probability ½, restricted to its accessible part. If no accessible
/// state is final, one of them is chosen uniformly and made final.
pub fn random_dfa(n: usize, alphabet_size: usize, seed: u64) -> Automaton {
    let n = n.max(1);
    let sigma = alphabet(alphabet_size.max(1));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut a = Automaton::new(n);
    for p in 0..n {
        for s in &sigma {
            let q = rng.gen_range(0..n);
            a.add_transition(p, Label::Sym(s.clone()), q);
        }
    }
    for p in 0..n {
        if rng.gen_bool(0.5) {
            a.set_final(p, true);
        }
    }
    let mut a = a.canonical();
    if a.finals().is_empty() {
        let q = rng.gen_range(0..a.num_states());
        a.set_final(q, true);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_state() {
        let a = random_dfa(1, 1, 7);
        assert_eq!(a.num_states(), 1);
        assert_eq!(a.num_transitions(), 1);
        assert!(a.is_final(0));
    }

    #[test]
    fn reproducible_and_complete() {
        for seed in 0..20 {
            let a = random_dfa(8, 2, seed);
            assert_eq!(a, random_dfa(8, 2, seed));
            assert!(a.is_complete_deterministic());
            assert!(!a.finals().is_empty());
            assert!(a.accessible().iter().all(|&x| x));
        }
        assert_ne!(random_dfa(8, 2, 1), random_dfa(8, 2, 2));
    }

    #[test]
    fn large_alphabets_use_indices() {
        assert_eq!(
            alphabet(3).iter().map(Symbol::as_str).collect::<Vec<_>>(),
            ["a", "b", "c"]
        );
        assert_eq!(alphabet(30)[29].as_str(), "a30");
    }
}
