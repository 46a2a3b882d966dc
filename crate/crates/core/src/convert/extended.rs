//! Extended automata and state elimination.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use super::simplify;
use crate::automaton::{Automaton, Label, StateId};
use crate::error::{Error, Result};
use crate::graph::{
    cycles_through, independent_set, underlying_digraph, Digraph, DEFAULT_CYCLE_CAP,
};
use crate::regex::RegEx;

/// Automaton with expression labels plus a source `s` and a sink `t`.
/// Original states keep their ids; `s` is `n` and `t` is `n + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedAutomaton {
    n: usize,
    labels: BTreeMap<(usize, usize), RegEx>,
    remaining: BTreeSet<usize>,
    simplify: bool,
}

/// Adds `s` with a λ-label to the initial state and λ-labels from every
/// final state to `t`; parallel transitions are folded into unions.
pub fn augment(a: &Automaton) -> ExtendedAutomaton {
    let n = a.num_states();
    let mut e = ExtendedAutomaton {
        n,
        labels: BTreeMap::new(),
        remaining: (0..n).collect(),
        simplify: true,
    };
    e.labels.insert((n, a.initial()), RegEx::Epsilon);
    for &f in a.finals() {
        e.labels.insert((f, n + 1), RegEx::Epsilon);
    }
    for (p, l, q) in a.transitions() {
        let letter = match l {
            Label::Lambda => RegEx::Epsilon,
            Label::Sym(s) => RegEx::Sym(s.clone()),
        };
        e.add_label(p, q, letter);
    }
    e
}

impl ExtendedAutomaton {
    pub fn source(&self) -> usize {
        self.n
    }

    pub fn sink(&self) -> usize {
        self.n + 1
    }

    /// States not yet eliminated, excluding `s` and `t`.
    pub fn remaining(&self) -> &BTreeSet<usize> {
        &self.remaining
    }

    /// Turns the simplification of new labels on or off.
    pub fn set_simplify(&mut self, on: bool) {
        self.simplify = on;
    }

    /// The label from `p` to `q`; `∅` when absent.
    pub fn label(&self, p: usize, q: usize) -> RegEx {
        self.labels.get(&(p, q)).cloned().unwrap_or(RegEx::Empty)
    }

    pub fn labels(&self) -> impl Iterator<Item = ((usize, usize), &RegEx)> + '_ {
        self.labels.iter().map(|(k, v)| (*k, v))
    }

    fn add_label(&mut self, p: usize, q: usize, r: RegEx) {
        let merged = match self.labels.remove(&(p, q)) {
            Some(old) => RegEx::union(old, r),
            None => r,
        };
        self.labels.insert((p, q), merged);
    }

    /// Predecessors of `q` other than `q` itself.
    pub fn predecessors(&self, q: usize) -> Vec<usize> {
        self.labels
            .keys()
            .filter(|&&(p, r)| r == q && p != q)
            .map(|&(p, _)| p)
            .collect()
    }

    /// Successors of `q` other than `q` itself.
    pub fn successors(&self, q: usize) -> Vec<usize> {
        self.labels
            .range((q, 0)..=(q, usize::MAX))
            .map(|(&(_, r), _)| r)
            .filter(|&r| r != q)
            .collect()
    }

    /// Digraph of the labelled pairs over vertices `0..n+2`.
    pub fn digraph(&self) -> Digraph {
        Digraph::from_arcs(self.n + 2, self.labels.keys().copied())
    }

    /// Removes `q`, rerouting every path through it:
    /// `L(j,k) := L(j,k) + L(j,q)·L(q,q)*·L(q,k)`.
    pub fn eliminate(&mut self, q: usize) -> Result<()> {
        if !self.remaining.contains(&q) {
            return Err(Error::NotEliminable(q));
        }
        let preds = self.predecessors(q);
        let succs = self.successors(q);
        let lq = self.labels.remove(&(q, q));
        for &j in &preds {
            for &k in &succs {
                let mut path = self.labels[&(j, q)].clone();
                if let Some(l) = &lq {
                    path = RegEx::concat(path, RegEx::star(l.clone()));
                }
                path = RegEx::concat(path, self.labels[&(q, k)].clone());
                self.add_label(j, k, path);
                if self.simplify {
                    let l = simplify(&self.labels[&(j, k)]);
                    if l.is_empty_set() {
                        self.labels.remove(&(j, k));
                    } else {
                        self.labels.insert((j, k), l);
                    }
                }
            }
        }
        for &j in &preds {
            self.labels.remove(&(j, q));
        }
        for &k in &succs {
            self.labels.remove(&(q, k));
        }
        self.remaining.remove(&q);
        Ok(())
    }

    /// The `s → t` label (simplified unless simplification is off).
    pub fn result(&self) -> RegEx {
        let r = self.label(self.source(), self.sink());
        if self.simplify {
            simplify(&r)
        } else {
            r
        }
    }
}

/// Copy of `e` with `q` eliminated.
pub fn eliminate_state(e: &ExtendedAutomaton, q: usize) -> Result<ExtendedAutomaton> {
    let mut out = e.clone();
    out.eliminate(q)?;
    Ok(out)
}

/// How the next state to eliminate is chosen.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Strategy {
    Fixed(Vec<StateId>),
    /// Fewest `in · out` (neighbours other than the state itself).
    DegreeGreedy,
    /// Smallest growth of the total alphabetic width of the labels.
    DelgadoMorais,
    /// Fewest simple cycles through the state.
    CycleCount,
    /// An independent set of the underlying graph first, then greedy.
    IndependentFirst,
    /// Bridge states last; greedy before that.
    BridgeFirst,
}

/// An elimination strategy plus whether its measure is recomputed after
/// every elimination (otherwise it is evaluated once on the input).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ordering {
    pub strategy: Strategy,
    pub recompute: bool,
}

impl Ordering {
    pub fn new(strategy: Strategy) -> Ordering {
        let recompute = !matches!(strategy, Strategy::CycleCount);
        Ordering {
            strategy,
            recompute,
        }
    }

    pub fn fixed<I: IntoIterator<Item = StateId>>(order: I) -> Ordering {
        Ordering::new(Strategy::Fixed(order.into_iter().collect()))
    }

    pub fn with_recompute(mut self, recompute: bool) -> Ordering {
        self.recompute = recompute;
        self
    }

    /// Short name as accepted by [`FromStr`].
    pub fn name(&self) -> String {
        match &self.strategy {
            Strategy::Fixed(v) => {
                let ids: Vec<String> = v.iter().map(usize::to_string).collect();
                format!("fixed:{}", ids.join(","))
            }
            Strategy::DegreeGreedy => "greedy".into(),
            Strategy::DelgadoMorais => "dm".into(),
            Strategy::CycleCount => "cycles".into(),
            Strategy::IndependentFirst => "indep".into(),
            Strategy::BridgeFirst => "bridge".into(),
        }
    }
}

impl Default for Ordering {
    fn default() -> Ordering {
        Ordering::new(Strategy::DelgadoMorais)
    }
}

/// `fixed:<comma list>`, `greedy`, `dm`, `cycles`, `indep` or `bridge`.
impl FromStr for Ordering {
    type Err = Error;

    fn from_str(s: &str) -> Result<Ordering> {
        let strategy = match s {
            "greedy" => Strategy::DegreeGreedy,
            "dm" => Strategy::DelgadoMorais,
            "cycles" => Strategy::CycleCount,
            "indep" => Strategy::IndependentFirst,
            "bridge" => Strategy::BridgeFirst,
            _ => {
                let list = s
                    .strip_prefix("fixed:")
                    .ok_or_else(|| Error::InvalidOrdering(format!("unknown ordering '{s}'")))?;
                let ids = list
                    .split(',')
                    .filter(|x| !x.trim().is_empty())
                    .map(|x| {
                        x.trim()
                            .parse::<usize>()
                            .map_err(|_| Error::InvalidOrdering(format!("bad state id '{x}'")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Strategy::Fixed(ids)
            }
        };
        Ok(Ordering::new(strategy))
    }
}

impl fmt::Display for Ordering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

fn greedy_weight(e: &ExtendedAutomaton, q: usize) -> i64 {
    (e.predecessors(q).len() * e.successors(q).len()) as i64
}

fn dm_weight(e: &ExtendedAutomaton, q: usize) -> i64 {
    let preds = e.predecessors(q);
    let succs = e.successors(q);
    let (i, o) = (preds.len() as i64, succs.len() as i64);
    let w_in: i64 = preds.iter().map(|&p| e.label(p, q).awidth() as i64).sum();
    let w_out: i64 = succs.iter().map(|&r| e.label(q, r).awidth() as i64).sum();
    let w_loop = e.label(q, q).awidth() as i64;
    w_in * (o - 1) + w_out * (i - 1) + w_loop * (i * o - 1)
}

fn cycle_weight(e: &ExtendedAutomaton, q: usize) -> i64 {
    cycles_through(&e.digraph(), q, DEFAULT_CYCLE_CAP).count as i64
}

/// States on no cycle that every `s → t` path passes through.
fn bridges(e: &ExtendedAutomaton) -> BTreeSet<usize> {
    let d = e.digraph();
    let (s, t) = (e.source(), e.sink());
    let reaches = |skip: Option<usize>| {
        let mut seen = vec![false; d.num_vertices()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for v in d.successors(u) {
                if Some(v) != skip && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen[t]
    };
    if !reaches(None) {
        return BTreeSet::new();
    }
    e.remaining()
        .iter()
        .copied()
        .filter(|&q| cycles_through(&d, q, 1).count == 0 && !reaches(Some(q)))
        .collect()
}

fn static_order(
    e: &ExtendedAutomaton,
    states: &BTreeSet<usize>,
    weight: impl Fn(&ExtendedAutomaton, usize) -> i64,
) -> Vec<usize> {
    let mut v: Vec<(i64, usize)> = states.iter().map(|&q| (weight(e, q), q)).collect();
    v.sort();
    v.into_iter().map(|(_, q)| q).collect()
}

/// Runs the elimination, returning the order used and the final automaton.
fn run(mut e: ExtendedAutomaton, o: &Ordering) -> Result<(Vec<usize>, ExtendedAutomaton)> {
    let weight: fn(&ExtendedAutomaton, usize) -> i64 = match o.strategy {
        Strategy::DelgadoMorais => dm_weight,
        Strategy::CycleCount => cycle_weight,
        _ => greedy_weight,
    };
    let mut order = Vec::with_capacity(e.remaining().len());
    let (front, back): (Vec<usize>, Vec<usize>) = match &o.strategy {
        Strategy::Fixed(list) => {
            let mut sorted = list.clone();
            sorted.sort_unstable();
            let all: Vec<usize> = e.remaining().iter().copied().collect();
            if sorted != all {
                return Err(Error::InvalidOrdering(format!(
                    "expected a permutation of 0..{}",
                    all.len()
                )));
            }
            (list.clone(), Vec::new())
        }
        Strategy::IndependentFirst => {
            let d = underlying_digraph_of(&e);
            (independent_set(&d).into_iter().collect(), Vec::new())
        }
        Strategy::BridgeFirst => (Vec::new(), bridges(&e).into_iter().collect()),
        _ => (Vec::new(), Vec::new()),
    };
    for q in front {
        e.eliminate(q)?;
        order.push(q);
    }
    let middle: BTreeSet<usize> = e
        .remaining()
        .iter()
        .copied()
        .filter(|q| !back.contains(q))
        .collect();
    if o.recompute {
        let mut left = middle;
        while !left.is_empty() {
            let q = left
                .iter()
                .copied()
                .min_by_key(|&q| (weight(&e, q), q))
                .unwrap();
            e.eliminate(q)?;
            order.push(q);
            left.remove(&q);
        }
    } else {
        for q in static_order(&e, &middle, weight) {
            e.eliminate(q)?;
            order.push(q);
        }
    }
    for q in back {
        e.eliminate(q)?;
        order.push(q);
    }
    Ok((order, e))
}

fn underlying_digraph_of(e: &ExtendedAutomaton) -> Digraph {
    let mut a = Automaton::new(e.n);
    for ((p, q), _) in e.labels() {
        if p < e.n && q < e.n {
            a.add_transition(p, Label::Lambda, q);
        }
    }
    underlying_digraph(&a)
}

/// The elimination order `o` produces on `a`.
pub fn make_ordering(a: &Automaton, o: &Ordering) -> Result<Vec<StateId>> {
    Ok(run(augment(a), o)?.0)
}

/// Regular expression for `L(a)`: augment, eliminate every original state
/// in the order given by `o`, and read off the `s → t` label.
pub fn state_elimination(a: &Automaton, o: &Ordering) -> Result<RegEx> {
    Ok(run(augment(a), o)?.1.result())
}

/// Like [`state_elimination`] but without simplifying any label.
pub fn state_elimination_raw(a: &Automaton, o: &Ordering) -> Result<RegEx> {
    let mut e = augment(a);
    e.set_simplify(false);
    Ok(run(e, o)?.1.result())
}
