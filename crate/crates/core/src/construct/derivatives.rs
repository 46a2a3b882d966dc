//! Partial derivatives (Antimirov) and total derivatives (Brzozowski).

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::Arc;

use crate::automaton::{Automaton, Label};
use crate::error::{Error, Result};
use crate::regex::{RegEx, Symbol};

/// Default bound on the number of Brzozowski states.
pub const DEFAULT_STATE_CAP: usize = 1_000_000;

/// `x·y` with λ as unit, ∅ as zero, and concatenations nested to the right.
fn cat(x: &RegEx, y: &RegEx) -> RegEx {
    match (x, y) {
        (RegEx::Empty, _) | (_, RegEx::Empty) => RegEx::Empty,
        (RegEx::Epsilon, _) => y.clone(),
        (_, RegEx::Epsilon) => x.clone(),
        (RegEx::Concat(x1, x2), _) => {
            let tail = cat(x2, y);
            cat_arc(x1, tail)
        }
        _ => RegEx::concat(x.clone(), y.clone()),
    }
}

fn cat_arc(head: &Arc<RegEx>, tail: RegEx) -> RegEx {
    match tail {
        RegEx::Empty => RegEx::Empty,
        RegEx::Epsilon => (**head).clone(),
        _ => RegEx::Concat(head.clone(), Arc::new(tail)),
    }
}

/// Right-nested top-level concatenation spine without λ factors.
fn spine(r: &RegEx) -> RegEx {
    match r {
        RegEx::Concat(s, t) => cat(&spine(s), &spine(t)),
        _ => r.clone(),
    }
}

/// Partial derivatives of `r` by `a`; terms denoting ∅ are dropped.
pub fn partial_derivatives(r: &RegEx, a: &Symbol) -> BTreeSet<RegEx> {
    let mut out = BTreeSet::new();
    pd_into(r, a, &mut out);
    out
}

fn pd_into(r: &RegEx, a: &Symbol, out: &mut BTreeSet<RegEx>) {
    match r {
        RegEx::Empty | RegEx::Epsilon => {}
        RegEx::Sym(b) => {
            if a == b {
                out.insert(RegEx::Epsilon);
            }
        }
        RegEx::Union(s, t) => {
            pd_into(s, a, out);
            pd_into(t, a, out);
        }
        RegEx::Concat(s, t) => {
            for p in partial_derivatives(s, a) {
                let term = cat(&p, t);
                if !term.is_empty_set() {
                    out.insert(term);
                }
            }
            if s.nullable() {
                pd_into(t, a, out);
            }
        }
        RegEx::Star(s) => {
            for p in partial_derivatives(s, a) {
                let term = cat(&p, r);
                if !term.is_empty_set() {
                    out.insert(term);
                }
            }
        }
        RegEx::Optional(s) => pd_into(s, a, out),
    }
}

/// Partial-derivative automaton; states are the derived terms, the
/// initial one being `r` itself. States are numbered breadth-first.
pub fn construct_pd(r: &RegEx) -> Automaton {
    let sigma: Vec<Symbol> = r.symbols().into_iter().collect();
    let start = spine(r);
    let mut index: HashMap<RegEx, usize> = HashMap::from([(start.clone(), 0)]);
    let mut terms = vec![start];
    let mut edges = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for a in &sigma {
            for t in partial_derivatives(&terms[i].clone(), a) {
                let j = *index.entry(t.clone()).or_insert_with(|| {
                    terms.push(t);
                    queue.push_back(terms.len() - 1);
                    terms.len() - 1
                });
                edges.push((i, a.clone(), j));
            }
        }
    }
    let mut aut = Automaton::new(terms.len());
    aut.extend_alphabet(sigma);
    for (i, t) in terms.iter().enumerate() {
        if t.nullable() {
            aut.set_final(i, true);
        }
    }
    for (p, a, q) in edges {
        aut.add_transition(p, Label::Sym(a), q);
    }
    aut
}

fn union_members(r: &RegEx, out: &mut Vec<RegEx>) {
    match r {
        RegEx::Union(s, t) => {
            union_members(s, out);
            union_members(t, out);
        }
        RegEx::Empty => {}
        _ => out.push(r.clone()),
    }
}

/// Union modulo associativity, commutativity and idempotence, ∅ as unit.
fn aci_union(x: &RegEx, y: &RegEx) -> RegEx {
    let mut members = Vec::new();
    union_members(x, &mut members);
    union_members(y, &mut members);
    members.sort();
    members.dedup();
    RegEx::sum(members)
}

fn aci_star(s: &RegEx) -> RegEx {
    match s {
        RegEx::Empty | RegEx::Epsilon => RegEx::Epsilon,
        RegEx::Star(_) => s.clone(),
        _ => RegEx::star(s.clone()),
    }
}

/// Rebuilds `r` bottom-up with the normalizing constructors.
fn normalize(r: &RegEx) -> RegEx {
    match r {
        RegEx::Empty | RegEx::Epsilon | RegEx::Sym(_) => r.clone(),
        RegEx::Union(s, t) => aci_union(&normalize(s), &normalize(t)),
        RegEx::Concat(s, t) => cat(&normalize(s), &normalize(t)),
        RegEx::Star(s) => aci_star(&normalize(s)),
        RegEx::Optional(s) => aci_union(&RegEx::Epsilon, &normalize(s)),
    }
}

/// Brzozowski derivative of a normalized expression, again normalized.
fn deriv(r: &RegEx, a: &Symbol) -> RegEx {
    match r {
        RegEx::Empty | RegEx::Epsilon => RegEx::Empty,
        RegEx::Sym(b) => {
            if a == b {
                RegEx::Epsilon
            } else {
                RegEx::Empty
            }
        }
        RegEx::Union(s, t) => aci_union(&deriv(s, a), &deriv(t, a)),
        RegEx::Concat(s, t) => {
            let left = cat(&deriv(s, a), t);
            if s.nullable() {
                aci_union(&left, &deriv(t, a))
            } else {
                left
            }
        }
        RegEx::Star(s) => cat(&deriv(s, a), r),
        RegEx::Optional(s) => deriv(s, a),
    }
}

/// Total derivative of `r` by `a`, normalized modulo ACI of union and the
/// unit and zero laws.
pub fn derivative(r: &RegEx, a: &Symbol) -> RegEx {
    deriv(&normalize(r), a)
}

/// Complete DFA whose states are the normalized derivatives of `r`.
pub fn construct_brzozowski(r: &RegEx) -> Result<Automaton> {
    construct_brzozowski_with_cap(r, DEFAULT_STATE_CAP)
}

pub fn construct_brzozowski_with_cap(r: &RegEx, cap: usize) -> Result<Automaton> {
    let sigma: Vec<Symbol> = r.symbols().into_iter().collect();
    let start = normalize(r);
    let mut index: HashMap<RegEx, usize> = HashMap::from([(start.clone(), 0)]);
    let mut terms = vec![start];
    let mut edges = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for a in &sigma {
            let t = deriv(&terms[i], a);
            let j = match index.get(&t) {
                Some(&j) => j,
                None => {
                    if terms.len() >= cap {
                        return Err(Error::SaturationCap(cap));
                    }
                    index.insert(t.clone(), terms.len());
                    terms.push(t);
                    queue.push_back(terms.len() - 1);
                    terms.len() - 1
                }
            };
            edges.push((i, a.clone(), j));
        }
    }
    let mut aut = Automaton::new(terms.len());
    aut.extend_alphabet(sigma);
    for (i, t) in terms.iter().enumerate() {
        if t.nullable() {
            aut.set_final(i, true);
        }
    }
    for (p, a, q) in edges {
        aut.add_transition(p, Label::Sym(a), q);
    }
    Ok(aut)
}
