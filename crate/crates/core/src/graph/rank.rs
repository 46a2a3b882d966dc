//! Cycle rank.
//!
//! `r(D) = 0` for acyclic `D`; for strongly connected `D` with an arc,
//! `r(D) = 1 + min_v r(D - v)`; otherwise the maximum over the components.

use std::collections::HashMap;

use super::{sccs_within, Digraph};
use crate::error::{Error, Result};

/// Largest strongly connected component the exact search accepts by default.
pub const DEFAULT_BUDGET: usize = 18;

const MASK_BITS: usize = 128;

/// Exact cycle rank. Components larger than `budget` vertices (at most 128)
/// are refused; acyclic parts of any size are fine.
pub fn cycle_rank(d: &Digraph, budget: usize) -> Result<usize> {
    let limit = budget.min(MASK_BITS);
    let mut best = 0;
    for comp in sccs_within(d, &(0..d.num_vertices()).collect::<Vec<_>>()) {
        if comp.len() == 1 && !d.has_arc(comp[0], comp[0]) {
            continue;
        }
        if comp.len() > limit {
            return Err(Error::BudgetExceeded {
                vertices: comp.len(),
                budget,
            });
        }
        let mut search = MaskSearch::new(&d.induced(&comp));
        let full = if comp.len() == MASK_BITS {
            u128::MAX
        } else {
            (1u128 << comp.len()) - 1
        };
        best = best.max(search.rank(full));
    }
    Ok(best)
}

/// Memoized recursion over vertex subsets encoded as bit masks.
struct MaskSearch {
    succ: Vec<u128>,
    pred: Vec<u128>,
    memo: HashMap<u128, usize>,
}

impl MaskSearch {
    fn new(d: &Digraph) -> MaskSearch {
        let n = d.num_vertices();
        let mut succ = vec![0u128; n];
        let mut pred = vec![0u128; n];
        for (u, v) in d.arcs() {
            succ[u] |= 1 << v;
            pred[v] |= 1 << u;
        }
        MaskSearch {
            succ,
            pred,
            memo: HashMap::new(),
        }
    }

    fn reach(&self, start: usize, within: u128, edges: &[u128]) -> u128 {
        let mut seen = 1u128 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = edges[v] & within & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen
    }

    fn components(&self, mut set: u128) -> Vec<u128> {
        let mut out = Vec::new();
        while set != 0 {
            let v = set.trailing_zeros() as usize;
            let comp = self.reach(v, set, &self.succ) & self.reach(v, set, &self.pred);
            out.push(comp);
            set &= !comp;
        }
        out
    }

    fn rank(&mut self, set: u128) -> usize {
        let mut best = 0;
        for comp in self.components(set) {
            best = best.max(self.rank_strong(comp));
        }
        best
    }

    fn rank_strong(&mut self, comp: u128) -> usize {
        if comp.count_ones() == 1 {
            let v = comp.trailing_zeros() as usize;
            return usize::from(self.succ[v] & comp != 0);
        }
        if let Some(&r) = self.memo.get(&comp) {
            return r;
        }
        let mut best = usize::MAX;
        let mut rest = comp;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            best = best.min(self.rank(comp & !(1u128 << v)));
            if best == 0 {
                break;
            }
        }
        let r = best + 1;
        self.memo.insert(comp, r);
        r
    }
}

/// Greedy upper bound: inside every nontrivial component delete a vertex
/// of maximum in+out degree (smallest id on ties) and recurse.
pub fn cycle_rank_upper(d: &Digraph) -> usize {
    let all: Vec<usize> = (0..d.num_vertices()).collect();
    upper_within(d, &all)
}

fn upper_within(d: &Digraph, vertices: &[usize]) -> usize {
    let mut best = 0;
    for comp in sccs_within(d, vertices) {
        if comp.len() == 1 && !d.has_arc(comp[0], comp[0]) {
            continue;
        }
        let pick = max_degree_vertex(d, &comp);
        let rest: Vec<usize> = comp.iter().copied().filter(|&v| v != pick).collect();
        best = best.max(1 + upper_within(d, &rest));
    }
    best
}

fn degrees(d: &Digraph, comp: &[usize]) -> Vec<(usize, usize)> {
    let mut inside = vec![false; d.num_vertices()];
    for &v in comp {
        inside[v] = true;
    }
    let mut deg: HashMap<usize, usize> = comp.iter().map(|&v| (v, 0)).collect();
    for &u in comp {
        for v in d.successors(u).filter(|&v| inside[v]) {
            *deg.get_mut(&u).unwrap() += 1;
            *deg.get_mut(&v).unwrap() += 1;
        }
    }
    comp.iter().map(|&v| (v, deg[&v])).collect()
}

fn max_degree_vertex(d: &Digraph, comp: &[usize]) -> usize {
    degrees(d, comp)
        .into_iter()
        .max_by(|(u, du), (v, dv)| du.cmp(dv).then(v.cmp(u)))
        .map(|(v, _)| v)
        .expect("nonempty component")
}

/// Decides `cycle_rank(d) <= k` without a size limit. The search depth is
/// bounded by `k`, so it stays practical for small `k` on large digraphs.
pub fn cycle_rank_at_most(d: &Digraph, k: usize) -> bool {
    let all: Vec<usize> = (0..d.num_vertices()).collect();
    let mut memo = HashMap::new();
    at_most_within(d, &all, k, &mut memo)
}

fn at_most_within(
    d: &Digraph,
    vertices: &[usize],
    k: usize,
    memo: &mut HashMap<(Vec<usize>, usize), bool>,
) -> bool {
    for comp in sccs_within(d, vertices) {
        if comp.len() == 1 && !d.has_arc(comp[0], comp[0]) {
            continue;
        }
        if k == 0 {
            return false;
        }
        if upper_within(d, &comp) <= k {
            continue;
        }
        let key = (comp.clone(), k);
        if let Some(&ok) = memo.get(&key) {
            if ok {
                continue;
            }
            return false;
        }
        let mut order = degrees(d, &comp);
        order.sort_by(|(u, du), (v, dv)| dv.cmp(du).then(u.cmp(v)));
        let ok = order.iter().any(|&(pick, _)| {
            let rest: Vec<usize> = comp.iter().copied().filter(|&v| v != pick).collect();
            at_most_within(d, &rest, k - 1, memo)
        });
        memo.insert(key, ok);
        if !ok {
            return false;
        }
    }
    true
}

/// Cycle rank of the symmetrized digraph.
pub fn undirected_cycle_rank(d: &Digraph, budget: usize) -> Result<usize> {
    cycle_rank(&d.symmetrize(), budget)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Straight from the definition, no memo, no masks.
    fn naive(d: &Digraph, vertices: &[usize]) -> usize {
        sccs_within(d, vertices)
            .iter()
            .map(|comp| {
                if comp.len() == 1 && !d.has_arc(comp[0], comp[0]) {
                    return 0;
                }
                1 + comp
                    .iter()
                    .map(|&v| {
                        let rest: Vec<usize> = comp.iter().copied().filter(|&u| u != v).collect();
                        naive(d, &rest)
                    })
                    .min()
                    .unwrap()
            })
            .max()
            .unwrap_or(0)
    }

    fn torus(m: usize, n: usize) -> Digraph {
        let id = |i: usize, j: usize| i * n + j;
        let mut d = Digraph::new(m * n);
        for i in 0..m {
            for j in 0..n {
                d.add_arc(id(i, j), id((i + 1) % m, j));
                d.add_arc(id(i, j), id(i, (j + 1) % n));
            }
        }
        d
    }

    #[test]
    fn small_values() {
        let dag = Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 3), (0, 3)]);
        assert_eq!(cycle_rank(&dag, DEFAULT_BUDGET).unwrap(), 0);
        for n in 1..8 {
            assert_eq!(cycle_rank(&Digraph::cycle(n), DEFAULT_BUDGET).unwrap(), 1);
        }
        let looped = Digraph::from_arcs(2, [(0, 0), (0, 1)]);
        assert_eq!(cycle_rank(&looped, DEFAULT_BUDGET).unwrap(), 1);
    }

    #[test]
    fn tori() {
        assert_eq!(cycle_rank(&torus(2, 2), DEFAULT_BUDGET).unwrap(), 2);
        assert_eq!(cycle_rank(&torus(2, 4), DEFAULT_BUDGET).unwrap(), 3);
        assert_eq!(cycle_rank(&torus(3, 3), DEFAULT_BUDGET).unwrap(), 3);
        let upper = cycle_rank_upper(&torus(2, 4));
        assert!((3..=4).contains(&upper));
    }

    #[test]
    fn budget_is_enforced() {
        let big = Digraph::cycle(30);
        assert!(matches!(
            cycle_rank(&big, DEFAULT_BUDGET),
            Err(Error::BudgetExceeded { vertices: 30, .. })
        ));
        assert_eq!(cycle_rank(&big, 30).unwrap(), 1);
        // a large DAG is no problem
        let chain = Digraph::from_arcs(100, (1..100).map(|i| (i - 1, i)));
        assert_eq!(cycle_rank(&chain, DEFAULT_BUDGET).unwrap(), 0);
    }

    #[test]
    fn undirected_examples() {
        assert_eq!(
            undirected_cycle_rank(&Digraph::new(1), DEFAULT_BUDGET).unwrap(),
            0
        );
        let path = Digraph::from_arcs(7, (1..7).map(|i| (i - 1, i)));
        assert_eq!(undirected_cycle_rank(&path, DEFAULT_BUDGET).unwrap(), 2);
        let triangle = Digraph::cycle(3);
        assert_eq!(undirected_cycle_rank(&triangle, DEFAULT_BUDGET).unwrap(), 2);
    }

    #[test]
    fn matches_naive_recursion() {
        let graphs = [
            torus(2, 3),
            Digraph::bidirectional_path(6),
            Digraph::from_arcs(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (1, 1)]),
        ];
        for d in &graphs {
            let all: Vec<usize> = (0..d.num_vertices()).collect();
            let exact = cycle_rank(d, DEFAULT_BUDGET).unwrap();
            assert_eq!(exact, naive(d, &all));
            assert!(cycle_rank_at_most(d, exact));
            assert!(exact == 0 || !cycle_rank_at_most(d, exact - 1));
            assert!(cycle_rank_upper(d) >= exact);
        }
    }
}
