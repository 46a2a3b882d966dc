//! Digraphs underlying automata and their structural measures.

mod cycles;
mod independent;
mod rank;

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::automaton::{minimize, subset_construction, Automaton, Label, MinimizeMode};
use crate::error::{Error, Result};

pub use cycles::{cycles_through, CycleCount, DEFAULT_CYCLE_CAP};
pub use independent::{independent_set, independent_set_exact, is_independent};
pub use rank::{
    cycle_rank, cycle_rank_at_most, cycle_rank_upper, undirected_cycle_rank, DEFAULT_BUDGET,
};

/// Digraph on vertices `0..n`; parallel arcs collapse, loops are allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Digraph {
    adj: Vec<BTreeSet<usize>>,
}

impl Digraph {
    pub fn new(n: usize) -> Digraph {
        Digraph {
            adj: vec![BTreeSet::new(); n],
        }
    }

    pub fn from_arcs<I: IntoIterator<Item = (usize, usize)>>(n: usize, arcs: I) -> Digraph {
        let mut d = Digraph::new(n);
        for (u, v) in arcs {
            d.add_arc(u, v);
        }
        d
    }

    /// Directed cycle `0 → 1 → … → n-1 → 0`.
    pub fn cycle(n: usize) -> Digraph {
        Digraph::from_arcs(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// Path `0 – 1 – … – n-1` with arcs in both directions.
    pub fn bidirectional_path(n: usize) -> Digraph {
        Digraph::from_arcs(n, (1..n).flat_map(|i| [(i - 1, i), (i, i - 1)]))
    }

    pub fn add_arc(&mut self, u: usize, v: usize) {
        assert!(
            u < self.adj.len() && v < self.adj.len(),
            "vertex out of range"
        );
        self.adj[u].insert(v);
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn num_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn num_arcs(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum()
    }

    pub fn successors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[u].iter().copied()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, s)| s.iter().map(move |&v| (u, v)))
    }

    /// Adds the reverse of every arc.
    pub fn symmetrize(&self) -> Digraph {
        let mut d = self.clone();
        for (u, v) in self.arcs() {
            d.add_arc(v, u);
        }
        d
    }

    pub fn is_acyclic(&self) -> bool {
        sccs(self)
            .iter()
            .all(|c| c.len() == 1 && !self.has_arc(c[0], c[0]))
    }

    /// Subdigraph induced by `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Digraph {
        let mut index = vec![usize::MAX; self.num_vertices()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut d = Digraph::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for v in self.successors(u) {
                if index[v] != usize::MAX {
                    d.add_arc(i, index[v]);
                }
            }
        }
        d
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph g {\n");
        for v in 0..self.num_vertices() {
            let _ = writeln!(out, "  {v};");
        }
        for (u, v) in self.arcs() {
            let _ = writeln!(out, "  {u} -> {v};");
        }
        out.push_str("}\n");
        out
    }

    /// Automaton JSON with λ labels, initial state 0 and no finals.
    pub fn to_json(&self) -> String {
        let mut a = Automaton::new(self.num_vertices());
        for (u, v) in self.arcs() {
            a.add_transition(u, Label::Lambda, v);
        }
        a.to_json()
    }

    /// Reads automaton JSON; labels are ignored.
    pub fn from_json(text: &str) -> Result<Digraph> {
        Ok(underlying_digraph(&Automaton::from_json(text)?))
    }
}

/// One arc per ordered pair of states joined by at least one transition.
pub fn underlying_digraph(a: &Automaton) -> Digraph {
    Digraph::from_arcs(a.num_states(), a.transitions().map(|(p, _, q)| (p, q)))
}

/// Strongly connected components in reverse topological order (sinks
/// first); vertices inside a component are sorted.
pub fn sccs(d: &Digraph) -> Vec<Vec<usize>> {
    let all: Vec<usize> = (0..d.num_vertices()).collect();
    sccs_within(d, &all)
}

/// Tarjan's algorithm on the subdigraph induced by `vertices`.
pub(crate) fn sccs_within(d: &Digraph, vertices: &[usize]) -> Vec<Vec<usize>> {
    let n = d.num_vertices();
    let mut inside = vec![false; n];
    for &v in vertices {
        inside[v] = true;
    }
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut out = Vec::new();
    let mut counter = 0;
    for &root in vertices {
        if index[root] != usize::MAX {
            continue;
        }
        // explicit call stack of (vertex, remaining successors)
        let mut calls: Vec<(usize, Vec<usize>)> = Vec::new();
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;
        calls.push((root, d.successors(root).filter(|&w| inside[w]).collect()));
        while let Some((v, pending)) = calls.last_mut() {
            let v = *v;
            if let Some(w) = pending.pop() {
                if index[w] == usize::MAX {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    calls.push((w, d.successors(w).filter(|&x| inside[x]).collect()));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            calls.pop();
            if let Some((parent, _)) = calls.last() {
                low[*parent] = low[*parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().unwrap();
                    on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comp.sort_unstable();
                out.push(comp);
            }
        }
    }
    out
}

/// Star height of a bideterministic language: the cycle rank of the
/// digraph underlying its minimal partial DFA.
pub fn star_height_bideterministic(a: &Automaton) -> Result<usize> {
    let det = if a.is_partial_deterministic() {
        a.clone()
    } else {
        subset_construction(a)
    };
    let m = minimize(&det, MinimizeMode::Partial)?;
    if !m.is_bideterministic() {
        return Err(Error::NotBideterministic);
    }
    cycle_rank(&underlying_digraph(&m), DEFAULT_BUDGET)
}
