//! Slow reference implementations over raw row-major cells. None of these
//! call into the library's algorithms.

#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

pub fn is_associative(cells: &[usize], n: usize) -> bool {
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let left = cells[cells[i * n + j] * n + k];
                let right = cells[i * n + cells[j * n + k]];
                if left != right {
                    return false;
                }
            }
        }
    }
    true
}

/// Every associative table on `n` elements, by scanning all `n^(n*n)`,
/// sorted.
pub fn all_tables(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cells = vec![0; n * n];
    loop {
        if is_associative(&cells, n) {
            out.push(cells.clone());
        }
        let mut pos = 0;
        loop {
            if pos == cells.len() {
                out.sort();
                return out;
            }
            cells[pos] += 1;
            if cells[pos] < n {
                break;
            }
            cells[pos] = 0;
            pos += 1;
        }
    }
}

/// Heap's algorithm.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, a, out);
            if k % 2 == 0 {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
        }
    }
    let mut a: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    heap(n, &mut a, &mut out);
    out
}

/// `p` applied to a table: `T'[p a][p b] = p(T[a][b])`.
pub fn apply(cells: &[usize], n: usize, p: &[usize]) -> Vec<usize> {
    let mut out = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            out[p[a] * n + p[b]] = p[cells[a * n + b]];
        }
    }
    out
}

pub fn transpose(cells: &[usize], n: usize) -> Vec<usize> {
    let mut out = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            out[b * n + a] = cells[a * n + b];
        }
    }
    out
}

pub fn orbit_min(cells: &[usize], n: usize, anti: bool) -> Vec<usize> {
    let t = transpose(cells, n);
    let mut best = cells.to_vec();
    for p in all_permutations(n) {
        best = best.min(apply(cells, n, &p));
        if anti {
            best = best.min(apply(&t, n, &p));
        }
    }
    best
}

/// `(index, period, [a, a^2, ..])` by remembering where each power first
/// appeared.
pub fn power_chain(cells: &[usize], n: usize, a: usize) -> (usize, usize, Vec<usize>) {
    let mut seen = HashMap::new();
    let mut list = Vec::new();
    let mut x = a;
    let mut k = 1;
    loop {
        if let Some(&first) = seen.get(&x) {
            return (first, k - first, list);
        }
        seen.insert(x, k);
        list.push(x);
        x = cells[x * n + a];
        k += 1;
    }
}

/// Adjacency matrix of the enhanced power graph straight from the definition.
pub fn enhanced_power_adjacency(cells: &[usize], n: usize) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; n]; n];
    for z in 0..n {
        let (_, _, gen) = power_chain(cells, n, z);
        for &x in &gen {
            for &y in &gen {
                if x != y {
                    adj[x][y] = true;
                }
            }
        }
    }
    adj
}

pub fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in edges {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

pub fn edge_list(adj: &[Vec<bool>]) -> Vec<(usize, usize)> {
    let n = adj.len();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if adj[u][v] {
                out.push((u, v));
            }
        }
    }
    out
}

/// Components by breadth-first search, each sorted, ordered by least member.
pub fn components(adj: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in 0..n {
                if adj[u][v] && !seen[v] {
                    seen[v] = true;
                    comp.push(v);
                    queue.push_back(v);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Largest independent set size over all `2^n` subsets.
pub fn max_independent(adj: &[Vec<bool>]) -> usize {
    let n = adj.len();
    assert!(n <= 20);
    let masks: Vec<u32> = (0..n)
        .map(|u| (0..n).filter(|&v| adj[u][v]).fold(0, |m, v| m | 1 << v))
        .collect();
    let mut best = 0;
    for set in 0u32..(1 << n) {
        let independent = (0..n).all(|u| set & (1 << u) == 0 || set & masks[u] == 0);
        if independent {
            best = best.max(set.count_ones() as usize);
        }
    }
    best
}

/// Whether the graph contains a subdivision of K5 or K3,3: try every choice
/// of branch vertices and route internally disjoint paths through the
/// remaining vertices by backtracking.
pub fn has_kuratowski_subdivision(adj: &[Vec<bool>]) -> bool {
    let n = adj.len();
    let degree: Vec<usize> = adj
        .iter()
        .map(|r| r.iter().filter(|&&b| b).count())
        .collect();
    let subsets = |k: usize| {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for v in start..n {
                cur.push(v);
                rec(v + 1, n, k, cur, out);
                cur.pop();
            }
        }
        rec(0, n, k, &mut cur, &mut out);
        out
    };
    for branch in subsets(5) {
        if branch.iter().any(|&v| degree[v] < 4) {
            continue;
        }
        let mut pairs = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                pairs.push((branch[i], branch[j]));
            }
        }
        if route_all(adj, &branch, &pairs) {
            return true;
        }
    }
    for six in subsets(6) {
        if six.iter().any(|&v| degree[v] < 3) {
            continue;
        }
        // parts containing six[0]
        for rest in 0..(1u32 << 5) {
            if rest.count_ones() != 2 {
                continue;
            }
            let mut left = vec![six[0]];
            let mut right = Vec::new();
            for (i, &v) in six[1..].iter().enumerate() {
                if rest & (1 << i) != 0 {
                    left.push(v);
                } else {
                    right.push(v);
                }
            }
            let mut pairs = Vec::new();
            for &u in &left {
                for &v in &right {
                    pairs.push((u, v));
                }
            }
            if route_all(adj, &six, &pairs) {
                return true;
            }
        }
    }
    false
}

fn route_all(adj: &[Vec<bool>], branch: &[usize], pairs: &[(usize, usize)]) -> bool {
    let n = adj.len();
    let mut used = vec![false; n];
    for &b in branch {
        used[b] = true;
    }
    fn route(adj: &[Vec<bool>], pairs: &[(usize, usize)], used: &mut Vec<bool>) -> bool {
        let Some(&(s, t)) = pairs.first() else {
            return true;
        };
        // depth-first over simple paths s .. t through unused vertices
        fn extend(
            adj: &[Vec<bool>],
            at: usize,
            t: usize,
            rest: &[(usize, usize)],
            used: &mut Vec<bool>,
        ) -> bool {
            if adj[at][t] && route(adj, rest, used) {
                return true;
            }
            for v in 0..adj.len() {
                if adj[at][v] && !used[v] {
                    used[v] = true;
                    if extend(adj, v, t, rest, used) {
                        return true;
                    }
                    used[v] = false;
                }
            }
            false
        }
        extend(adj, s, t, &pairs[1..], used)
    }
    route(adj, pairs, &mut used)
}
