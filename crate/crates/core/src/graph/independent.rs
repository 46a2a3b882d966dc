//! Independent sets of the symmetrized graph. Loops are ignored.

use std::collections::{BTreeSet, VecDeque};

use super::Digraph;
use crate::error::{Error, Result};

const EXACT_LIMIT: usize = 20;

fn neighbours(d: &Digraph) -> Vec<BTreeSet<usize>> {
    let mut nb = vec![BTreeSet::new(); d.num_vertices()];
    for (u, v) in d.arcs() {
        if u != v {
            nb[u].insert(v);
            nb[v].insert(u);
        }
    }
    nb
}

pub fn is_independent(d: &Digraph, set: &BTreeSet<usize>) -> bool {
    d.arcs()
        .all(|(u, v)| u == v || !(set.contains(&u) && set.contains(&v)))
}

/// Larger of two heuristics: greedy minimum degree, and (when the graph is
/// bipartite) the larger colour class of every component. Ties go to the
/// smallest vertex id.
pub fn independent_set(d: &Digraph) -> BTreeSet<usize> {
    let nb = neighbours(d);
    let greedy = greedy_min_degree(&nb);
    match bipartite_classes(&nb) {
        Some(colored) if colored.len() > greedy.len() => colored,
        _ => greedy,
    }
}

fn greedy_min_degree(nb: &[BTreeSet<usize>]) -> BTreeSet<usize> {
    let n = nb.len();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = nb.iter().map(BTreeSet::len).collect();
    let mut out = BTreeSet::new();
    loop {
        let pick = (0..n).filter(|&v| alive[v]).min_by_key(|&v| (degree[v], v));
        let Some(v) = pick else { break };
        out.insert(v);
        let mut removed = vec![v];
        removed.extend(nb[v].iter().copied().filter(|&w| alive[w]));
        for &r in &removed {
            alive[r] = false;
        }
        for &r in &removed {
            for &w in &nb[r] {
                if alive[w] {
                    degree[w] -= 1;
                }
            }
        }
    }
    out
}

fn bipartite_classes(nb: &[BTreeSet<usize>]) -> Option<BTreeSet<usize>> {
    let n = nb.len();
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut out = BTreeSet::new();
    for root in 0..n {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(false);
        let mut members = vec![root];
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for &w in &nb[u] {
                match color[w] {
                    None => {
                        color[w] = Some(!cu);
                        members.push(w);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => return None,
                    _ => {}
                }
            }
        }
        let zeros = members.iter().filter(|&&v| color[v] == Some(false)).count();
        // the root is coloured false and is the smallest id of its component
        let keep = zeros * 2 >= members.len();
        out.extend(members.into_iter().filter(|&v| color[v] == Some(!keep)));
    }
    Some(out)
}

/// Maximum independent set by branch and bound; at most 20 vertices.
pub fn independent_set_exact(d: &Digraph) -> Result<BTreeSet<usize>> {
    let n = d.num_vertices();
    if n > EXACT_LIMIT {
        return Err(Error::BudgetExceeded {
            vertices: n,
            budget: EXACT_LIMIT,
        });
    }
    let nb: Vec<u32> = neighbours(d)
        .iter()
        .map(|s| s.iter().fold(0u32, |m, &v| m | (1 << v)))
        .collect();
    let mut best = 0u32;
    let all = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
    search(&nb, all, 0, &mut best);
    Ok((0..n).filter(|&v| best & (1 << v) != 0).collect())
}

fn search(nb: &[u32], candidates: u32, chosen: u32, best: &mut u32) {
    if candidates == 0 {
        if chosen.count_ones() > best.count_ones() {
            *best = chosen;
        }
        return;
    }
    if chosen.count_ones() + candidates.count_ones() <= best.count_ones() {
        return;
    }
    let v = candidates.trailing_zeros() as usize;
    let bit = 1u32 << v;
    search(nb, candidates & !bit & !nb[v], chosen | bit, best);
    if nb[v] & candidates != 0 {
        search(nb, candidates & !bit, chosen, best);
    }
}
