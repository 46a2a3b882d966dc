//! The matrix recurrence of McNaughton and Yamada.

use super::simplify;
use crate::automaton::{Automaton, Label, StateId};
use crate::error::{Error, Result};
use crate::regex::RegEx;

/// Square matrix of expressions indexed by state ids.
pub type Matrix = Vec<Vec<RegEx>>;

/// Every intermediate matrix: `rounds[0]` holds the letters, `rounds[k]`
/// the entries after the `k`-th pivot of the ranking.
#[derive(Clone, Debug)]
pub struct MnyTrace {
    pub ranking: Vec<StateId>,
    pub rounds: Vec<Matrix>,
    pub result: RegEx,
}

/// Runs one round per state of `ranking` and returns the expression
/// `(λ +) Σ_f entry(initial, f)` over the final states `f`.
pub fn mcnaughton_yamada(a: &Automaton, ranking: &[StateId]) -> Result<RegEx> {
    Ok(mcnaughton_yamada_trace(a, ranking)?.result)
}

pub fn mcnaughton_yamada_trace(a: &Automaton, ranking: &[StateId]) -> Result<MnyTrace> {
    if !a.is_lambda_free() {
        return Err(Error::RequiresLambdaFree);
    }
    let n = a.num_states();
    let mut sorted = ranking.to_vec();
    sorted.sort_unstable();
    if sorted != (0..n).collect::<Vec<_>>() {
        return Err(Error::InvalidOrdering(format!(
            "ranking must be a permutation of 0..{n}"
        )));
    }
    let mut m: Matrix = vec![vec![RegEx::Empty; n]; n];
    for (p, l, q) in a.transitions() {
        if let Label::Sym(s) = l {
            m[p][q] = simplify(&RegEx::union(m[p][q].clone(), RegEx::Sym(s.clone())));
        }
    }
    let mut rounds = vec![m.clone()];
    for &i in ranking {
        let loop_star = RegEx::star(m[i][i].clone());
        let mut next = m.clone();
        for j in 0..n {
            for k in 0..n {
                let entry = if j == i {
                    RegEx::concat(loop_star.clone(), m[i][k].clone())
                } else if k == i {
                    RegEx::concat(m[j][i].clone(), loop_star.clone())
                } else {
                    let through =
                        RegEx::product([m[j][i].clone(), loop_star.clone(), m[i][k].clone()]);
                    RegEx::union(m[j][k].clone(), through)
                };
                next[j][k] = simplify(&entry);
            }
        }
        m = next;
        rounds.push(m.clone());
    }
    let q0 = a.initial();
    let mut terms = Vec::new();
    if a.is_final(q0) {
        terms.push(RegEx::Epsilon);
    }
    terms.extend(a.finals().iter().map(|&f| m[q0][f].clone()));
    let result = simplify(&RegEx::sum(terms));
    Ok(MnyTrace {
        ranking: ranking.to_vec(),
        rounds,
        result,
    })
}
