//! Counting simple cycles through a vertex (Johnson's circuit search with
//! a fixed start vertex).

use super::{sccs, Digraph};

pub const DEFAULT_CYCLE_CAP: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CycleCount {
    pub count: usize,
    /// The enumeration stopped at the cap; `count` is a lower bound.
    pub saturated: bool,
}

/// Number of simple cycles containing `v`, a loop at `v` included.
pub fn cycles_through(d: &Digraph, v: usize, cap: usize) -> CycleCount {
    let comp = sccs(d)
        .into_iter()
        .find(|c| c.contains(&v))
        .expect("vertex in range");
    let sub = d.induced(&comp);
    let start = comp.binary_search(&v).unwrap();
    let n = sub.num_vertices();
    let mut search = Johnson {
        graph: &sub,
        start,
        blocked: vec![false; n],
        blocked_by: vec![Vec::new(); n],
        count: 0,
        cap,
    };
    search.circuit(start);
    CycleCount {
        count: search.count.min(cap),
        saturated: search.count >= cap,
    }
}

struct Johnson<'a> {
    graph: &'a Digraph,
    start: usize,
    blocked: Vec<bool>,
    blocked_by: Vec<Vec<usize>>,
    count: usize,
    cap: usize,
}

impl Johnson<'_> {
    fn circuit(&mut self, v: usize) -> bool {
        let mut found = false;
        self.blocked[v] = true;
        let succ: Vec<usize> = self.graph.successors(v).collect();
        for &w in &succ {
            if self.count >= self.cap {
                return true;
            }
            if w == self.start {
                self.count += 1;
                found = true;
            } else if !self.blocked[w] && self.circuit(w) {
                found = true;
            }
        }
        if found {
            self.unblock(v);
        } else {
            for &w in &succ {
                if !self.blocked_by[w].contains(&v) {
                    self.blocked_by[w].push(v);
                }
            }
        }
        found
    }

    fn unblock(&mut self, v: usize) {
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            if !self.blocked[u] {
                continue;
            }
            self.blocked[u] = false;
            stack.append(&mut self.blocked_by[u]);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Plain path enumeration, exponential but obviously right.
    fn brute(d: &Digraph, v: usize) -> usize {
        fn go(d: &Digraph, start: usize, u: usize, seen: &mut Vec<bool>) -> usize {
            let mut total = 0;
            for w in d.successors(u) {
                if w == start {
                    total += 1;
                } else if !seen[w] {
                    seen[w] = true;
                    total += go(d, start, w, seen);
                    seen[w] = false;
                }
            }
            total
        }
        let mut seen = vec![false; d.num_vertices()];
        seen[v] = true;
        go(d, v, v, &mut seen)
    }

    #[test]
    fn examples() {
        let c = Digraph::cycle(6);
        assert_eq!(cycles_through(&c, 3, DEFAULT_CYCLE_CAP).count, 1);
        let dag = Digraph::from_arcs(3, [(0, 1), (1, 2)]);
        assert_eq!(cycles_through(&dag, 1, DEFAULT_CYCLE_CAP).count, 0);
        // two triangles sharing vertex 0
        let bowtie = Digraph::from_arcs(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]);
        assert_eq!(cycles_through(&bowtie, 0, DEFAULT_CYCLE_CAP).count, 2);
        assert_eq!(cycles_through(&bowtie, 1, DEFAULT_CYCLE_CAP).count, 1);
    }

    #[test]
    fn agrees_with_brute_force() {
        let complete = Digraph::from_arcs(
            5,
            (0..5).flat_map(|u| (0..5).filter(move |&v| v != u).map(move |v| (u, v))),
        );
        let mut looped = Digraph::bidirectional_path(5);
        looped.add_arc(2, 2);
        looped.add_arc(4, 0);
        for d in [&complete, &looped] {
            for v in 0..5 {
                assert_eq!(cycles_through(d, v, DEFAULT_CYCLE_CAP).count, brute(d, v));
            }
        }
    }

    #[test]
    fn saturates_at_cap() {
        let complete = Digraph::from_arcs(
            6,
            (0..6).flat_map(|u| (0..6).filter(move |&v| v != u).map(move |v| (u, v))),
        );
        let c = cycles_through(&complete, 0, 10);
        assert_eq!(
            c,
            CycleCount {
                count: 10,
                saturated: true
            }
        );
    }
}
