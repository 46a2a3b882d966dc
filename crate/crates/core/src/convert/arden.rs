//! Solving the system of language equations of an automaton.

use std::collections::BTreeMap;

use super::simplify;
use crate::automaton::{Automaton, Label};
use crate::error::{Error, Result};
use crate::regex::RegEx;

/// `X = Σ coeff[j]·X_j + constant`
#[derive(Clone, Debug)]
struct Equation {
    coeff: BTreeMap<usize, RegEx>,
    constant: RegEx,
}

impl Equation {
    fn add(&mut self, j: usize, r: RegEx) {
        let merged = match self.coeff.remove(&j) {
            Some(old) => simplify(&RegEx::union(old, r)),
            None => r,
        };
        if !merged.is_empty_set() {
            self.coeff.insert(j, merged);
        }
    }

    /// Arden's lemma: `X = K·X + L` becomes `X = K*·L`.
    fn resolve_self(&mut self, me: usize) {
        if let Some(k) = self.coeff.remove(&me) {
            debug_assert!(!k.nullable());
            let ks = RegEx::star(k);
            for r in self.coeff.values_mut() {
                *r = simplify(&RegEx::concat(ks.clone(), r.clone()));
            }
            self.constant = simplify(&RegEx::concat(ks, self.constant.clone()));
        }
    }
}

/// Expression for `L(a)` from the equations `X_p = Σ a·X_q (+ λ if p is
/// final)`. Non-initial unknowns are eliminated from the highest index
/// down; the initial one is solved last.
pub fn arden_solve(a: &Automaton) -> Result<RegEx> {
    if !a.is_lambda_free() {
        return Err(Error::RequiresLambdaFree);
    }
    let n = a.num_states();
    let mut eqs: Vec<Equation> = (0..n)
        .map(|p| Equation {
            coeff: BTreeMap::new(),
            constant: if a.is_final(p) {
                RegEx::Epsilon
            } else {
                RegEx::Empty
            },
        })
        .collect();
    for (p, l, q) in a.transitions() {
        if let Label::Sym(s) = l {
            eqs[p].add(q, RegEx::Sym(s.clone()));
        }
    }
    let mut live: Vec<bool> = vec![true; n];
    let order = (0..n)
        .rev()
        .filter(|&q| q != a.initial())
        .chain([a.initial()]);
    for q in order {
        eqs[q].resolve_self(q);
        live[q] = false;
        let solved = eqs[q].clone();
        for p in (0..n).filter(|&p| live[p]) {
            let Some(c) = eqs[p].coeff.remove(&q) else {
                continue;
            };
            for (&j, r) in &solved.coeff {
                eqs[p].add(j, simplify(&RegEx::concat(c.clone(), r.clone())));
            }
            let extra = simplify(&RegEx::concat(c, solved.constant.clone()));
            eqs[p].constant = simplify(&RegEx::union(eqs[p].constant.clone(), extra));
        }
    }
    Ok(simplify(&eqs[a.initial()].constant))
}
