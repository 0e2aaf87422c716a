//! Exact maximum independent set and maximum clique by branch and bound.

use crate::graph::{BitIter, SimpleGraph};

#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn full(n: usize) -> Self {
        let mut words = vec![u64::MAX; n.div_ceil(64)];
        if !n.is_multiple_of(64) {
            if let Some(last) = words.last_mut() {
                *last = (1u64 << (n % 64)) - 1;
            }
        }
        Bits(words)
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn remove(&mut self, v: usize) {
        self.0[v / 64] &= !(1 << (v % 64));
    }

    fn minus(&self, other: &[u64]) -> Bits {
        Bits(self.0.iter().zip(other).map(|(a, b)| a & !b).collect())
    }

    fn count_and(&self, other: &[u64]) -> usize {
        self.0
            .iter()
            .zip(other)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(w, &bits)| BitIter(bits).map(move |b| w * 64 + b))
    }
}

struct Solver<'a> {
    g: &'a SimpleGraph,
    best: Vec<usize>,
}

impl Solver<'_> {
    /// Greedy clique cover of `cand`: an upper bound on any independent set
    /// inside it.
    fn clique_cover_bound(&self, cand: &Bits) -> usize {
        let mut rest = cand.clone();
        let mut cliques = 0;
        loop {
            let Some(u) = rest.iter().next() else { break };
            cliques += 1;
            rest.remove(u);
            let mut clique = vec![u];
            let members: Vec<usize> = rest.iter().collect();
            for v in members {
                if clique.iter().all(|&c| self.g.has_edge(c, v)) {
                    clique.push(v);
                    rest.remove(v);
                }
            }
        }
        cliques
    }

    /// Extends `current` from `cand`; restores `current` before returning.
    fn search(&mut self, mut cand: Bits, current: &mut Vec<usize>) {
        let depth = current.len();
        loop {
            if cand.is_empty() {
                if current.len() > self.best.len() {
                    self.best = current.clone();
                }
                break;
            }
            if current.len() + self.clique_cover_bound(&cand) <= self.best.len() {
                break;
            }
            // A vertex with at most one candidate neighbour lies in some
            // maximum independent set of the candidate graph.
            let mut low = None;
            let mut high: Option<(usize, usize)> = None;
            for v in cand.iter() {
                let d = cand.count_and(self.g.adjacency_row(v));
                if d <= 1 {
                    low = Some(v);
                    break;
                }
                if high.is_none_or(|(_, hd)| d > hd) {
                    high = Some((v, d));
                }
            }
            if let Some(v) = low {
                current.push(v);
                cand.remove(v);
                cand = cand.minus(self.g.adjacency_row(v));
                continue;
            }
            let (v, _) = high.expect("candidates are non-empty");
            let mut with = cand.minus(self.g.adjacency_row(v));
            with.remove(v);
            current.push(v);
            self.search(with, current);
            current.pop();
            cand.remove(v);
        }
        current.truncate(depth);
    }
}

fn greedy_independent(g: &SimpleGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut cand = Bits::full(n);
    let mut out = Vec::new();
    while !cand.is_empty() {
        let v = cand
            .iter()
            .min_by_key(|&v| (cand.count_and(g.adjacency_row(v)), v))
            .expect("non-empty");
        out.push(v);
        cand.remove(v);
        cand = cand.minus(g.adjacency_row(v));
    }
    out.sort_unstable();
    out
}

/// `(alpha, witness)` with the witness sorted.
pub fn independence_number(g: &SimpleGraph) -> (usize, Vec<usize>) {
    let n = g.vertex_count();
    if n == 0 {
        return (0, Vec::new());
    }
    let mut solver = Solver {
        g,
        best: greedy_independent(g),
    };
    let mut current = Vec::new();
    solver.search(Bits::full(n), &mut current);
    let mut best = solver.best;
    best.sort_unstable();
    debug_assert!(is_independent(g, &best));
    (best.len(), best)
}

/// `(omega, witness)`: an independent set of the complement.
pub fn clique_number(g: &SimpleGraph) -> (usize, Vec<usize>) {
    independence_number(&g.complement())
}

pub(crate) fn is_independent(g: &SimpleGraph, set: &[usize]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && !g.has_edge(u, v)))
}
