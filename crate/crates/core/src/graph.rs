//! Simple undirected graphs on dense vertex indices.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

/// Loop-free undirected graph. Edges are stored as ordered pairs `(u, v)`
/// with `u < v`, mirrored in a bitset adjacency matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "RawGraph", into = "RawGraph")]
pub struct SimpleGraph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
    adjacency: Vec<Vec<u64>>,
    labels: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl From<RawGraph> for SimpleGraph {
    fn from(raw: RawGraph) -> Self {
        let mut g = SimpleGraph::from_edges(raw.vertex_count, raw.edges);
        g.labels = raw.labels.filter(|l| l.len() == raw.vertex_count);
        g
    }
}

impl From<SimpleGraph> for RawGraph {
    fn from(g: SimpleGraph) -> Self {
        RawGraph {
            vertex_count: g.vertex_count,
            edges: g.edges.into_iter().collect(),
            labels: g.labels,
        }
    }
}

impl SimpleGraph {
    pub fn new(vertex_count: usize) -> Self {
        let words = vertex_count.div_ceil(64).max(1);
        SimpleGraph {
            vertex_count,
            edges: BTreeSet::new(),
            adjacency: vec![vec![0; words]; vertex_count],
            labels: None,
        }
    }

    /// Loops and out-of-range endpoints are ignored.
    pub fn from_edges(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Self {
        let mut g = SimpleGraph::new(vertex_count);
        for (u, v) in edges {
            if u < vertex_count && v < vertex_count {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        SimpleGraph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        SimpleGraph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.vertex_count);
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> String {
        self.labels
            .as_ref()
            .map_or_else(|| v.to_string(), |l| l[v].clone())
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Returns whether the edge was new. Loops are rejected.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u < self.vertex_count && v < self.vertex_count);
        if u == v {
            return false;
        }
        let key = (u.min(v), u.max(v));
        if !self.edges.insert(key) {
            return false;
        }
        self.adjacency[u][v / 64] |= 1 << (v % 64);
        self.adjacency[v][u / 64] |= 1 << (u % 64);
        true
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        let key = (u.min(v), u.max(v));
        if !self.edges.remove(&key) {
            return false;
        }
        self.adjacency[u][v / 64] &= !(1 << (v % 64));
        self.adjacency[v][u / 64] &= !(1 << (u % 64));
        true
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count
            && v < self.vertex_count
            && self.adjacency[u][v / 64] >> (v % 64) & 1 == 1
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[v]
            .iter()
            .enumerate()
            .flat_map(|(w, &bits)| BitIter(bits).map(move |b| w * 64 + b))
    }

    pub(crate) fn adjacency_row(&self, v: usize) -> &[u64] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.vertex_count).map(|v| self.degree(v)).collect()
    }

    pub fn complement(&self) -> SimpleGraph {
        let n = self.vertex_count;
        let mut g = SimpleGraph::from_edges(
            n,
            (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|&(u, v)| !self.has_edge(u, v)),
        );
        g.labels.clone_from(&self.labels);
        g
    }

    /// Edge-set inclusion on the same vertex count.
    pub fn is_subgraph_of(&self, other: &SimpleGraph) -> bool {
        self.vertex_count == other.vertex_count && self.edges.is_subset(&other.edges)
    }

    /// Connected components by breadth-first search, each sorted, ordered by
    /// least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.vertex_count];
        let mut out = Vec::new();
        for start in 0..self.vertex_count {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            let mut comp = Vec::new();
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap_or(0);
            for w in self.neighbors(v) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// The subgraph induced on `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> SimpleGraph {
        let mut g = SimpleGraph::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        if let Some(labels) = &self.labels {
            g.labels = Some(vertices.iter().map(|&v| labels[v].clone()).collect());
        }
        g
    }
}

pub(crate) struct BitIter(pub(crate) u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}

/// Connected components of `g`.
pub fn components(g: &SimpleGraph) -> Vec<Vec<usize>> {
    g.components()
}
