//! Planarity testing with Kuratowski certificates.
//!
//! The decision procedure is the face-by-face path embedding of Demoucron,
//! Malgrange and Pertuiset, run on each biconnected block. A non-planar
//! verdict is certified by deleting edges while the graph stays non-planar;
//! what remains is a subdivision of `K5` or `K3,3`, which is then decoded
//! into branch vertices and paths.

use serde::{Deserialize, Serialize};

use crate::graph::SimpleGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// A subdivision of `K5` or `K3,3` inside a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    /// Sorted.
    pub branch_vertices: Vec<usize>,
    /// The two sides of a `K3,3`, each sorted, the side holding the least
    /// branch vertex first.
    pub parts: Option<(Vec<usize>, Vec<usize>)>,
    /// One path per edge of the underlying complete (bipartite) graph, from
    /// the smaller branch vertex to the larger, sorted by endpoints.
    pub paths: Vec<Vec<usize>>,
}

impl KuratowskiWitness {
    /// Checks the certificate edge by edge against `g`.
    pub fn verify(&self, g: &SimpleGraph) -> bool {
        let n = g.vertex_count();
        let branch = &self.branch_vertices;
        if branch.iter().any(|&b| b >= n) {
            return false;
        }
        let mut required: Vec<(usize, usize)> = match (self.kind, &self.parts) {
            (KuratowskiKind::K5, None) if branch.len() == 5 => (0..5)
                .flat_map(|i| (i + 1..5).map(move |j| (branch[i], branch[j])))
                .collect(),
            (KuratowskiKind::K33, Some((a, b))) if a.len() == 3 && b.len() == 3 => {
                let mut both: Vec<usize> = a.iter().chain(b).copied().collect();
                both.sort_unstable();
                if &both != branch {
                    return false;
                }
                a.iter()
                    .flat_map(|&x| b.iter().map(move |&y| (x.min(y), x.max(y))))
                    .collect()
            }
            _ => return false,
        };
        required.sort_unstable();
        let mut got: Vec<(usize, usize)> = Vec::with_capacity(self.paths.len());
        let mut used_inner = vec![false; n];
        for path in &self.paths {
            if path.len() < 2 || path.iter().any(|&v| v >= n) {
                return false;
            }
            if path.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
                return false;
            }
            for &v in &path[1..path.len() - 1] {
                if branch.contains(&v) || used_inner[v] {
                    return false;
                }
                used_inner[v] = true;
            }
            let (s, t) = (path[0], path[path.len() - 1]);
            got.push((s.min(t), s.max(t)));
        }
        got.sort_unstable();
        got == required
    }

    /// Every edge used by the paths.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .paths
            .iter()
            .flat_map(|p| p.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1]))))
            .collect();
        out.sort_unstable();
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanarityResult {
    pub planar: bool,
    pub witness: Option<KuratowskiWitness>,
}

pub fn is_planar(g: &SimpleGraph) -> PlanarityResult {
    if planar_decision(g) {
        return PlanarityResult {
            planar: true,
            witness: None,
        };
    }
    PlanarityResult {
        planar: false,
        witness: Some(kuratowski_subgraph(g)),
    }
}

/// Sound and complete planarity decision without a certificate.
pub fn planar_decision(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    let e = g.edge_count();
    if n >= 3 && e > 3 * n - 6 {
        return false;
    }
    if n <= 4 {
        return true;
    }
    biconnected_blocks(g)
        .iter()
        .all(|block| block_is_planar(block))
}

/// Edge sets of the biconnected components.
fn biconnected_blocks(g: &SimpleGraph) -> Vec<Vec<(usize, usize)>> {
    struct State<'a> {
        g: &'a SimpleGraph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        blocks: Vec<Vec<(usize, usize)>>,
    }
    fn dfs(st: &mut State<'_>, u: usize, parent: Option<usize>) {
        st.time += 1;
        st.disc[u] = st.time;
        st.low[u] = st.time;
        let neighbors: Vec<usize> = st.g.neighbors(u).collect();
        for v in neighbors {
            if st.disc[v] == 0 {
                st.stack.push((u, v));
                dfs(st, v, Some(u));
                st.low[u] = st.low[u].min(st.low[v]);
                if st.low[v] >= st.disc[u] {
                    let mut block = Vec::new();
                    while let Some(edge) = st.stack.pop() {
                        block.push(edge);
                        if edge == (u, v) {
                            break;
                        }
                    }
                    st.blocks.push(block);
                }
            } else if Some(v) != parent && st.disc[v] < st.disc[u] {
                st.stack.push((u, v));
                st.low[u] = st.low[u].min(st.disc[v]);
            }
        }
    }
    let n = g.vertex_count();
    let mut st = State {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    for v in 0..n {
        if st.disc[v] == 0 {
            dfs(&mut st, v, None);
        }
    }
    st.blocks
}

/// Runs the path-embedding procedure on one biconnected block.
fn block_is_planar(block: &[(usize, usize)]) -> bool {
    let mut verts: Vec<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
    verts.sort_unstable();
    verts.dedup();
    let n = verts.len();
    if n <= 4 {
        return true;
    }
    if block.len() > 3 * n - 6 {
        return false;
    }
    let local = |v: usize| verts.binary_search(&v).expect("block vertex");
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in block {
        let (a, b) = (local(u), local(v));
        adj[a].push(b);
        adj[b].push(a);
    }
    for row in &mut adj {
        row.sort_unstable();
    }
    Embedder::new(adj).run()
}

struct Embedder {
    adj: Vec<Vec<usize>>,
    vertex_in: Vec<bool>,
    edge_in: Vec<Vec<bool>>,
    faces: Vec<Vec<usize>>,
    embedded_edges: usize,
    total_edges: usize,
}

struct Fragment {
    attachments: Vec<usize>,
    /// Interior vertices; empty for a single-edge fragment.
    interior: Vec<usize>,
}

impl Embedder {
    fn new(adj: Vec<Vec<usize>>) -> Self {
        let n = adj.len();
        let total_edges = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Embedder {
            edge_in: vec![vec![false; n]; n],
            vertex_in: vec![false; n],
            adj,
            faces: Vec::new(),
            embedded_edges: 0,
            total_edges,
        }
    }

    fn find_cycle(&self) -> Vec<usize> {
        let n = self.adj.len();
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![usize::MAX; n];
        let mut stack = vec![(0usize, 0usize)];
        depth[0] = 0;
        while let Some(top) = stack.last_mut() {
            let u = top.0;
            if top.1 >= self.adj[u].len() {
                stack.pop();
                continue;
            }
            let v = self.adj[u][top.1];
            top.1 += 1;
            if depth[v] == usize::MAX {
                depth[v] = depth[u] + 1;
                parent[v] = u;
                stack.push((v, 0));
            } else if v != parent[u] && depth[v] < depth[u] {
                let mut cycle = vec![u];
                let mut w = u;
                while w != v {
                    w = parent[w];
                    cycle.push(w);
                }
                return cycle;
            }
        }
        unreachable!("a biconnected block on at least three vertices has a cycle")
    }

    fn embed_path(&mut self, path: &[usize]) {
        for &v in path {
            self.vertex_in[v] = true;
        }
        for w in path.windows(2) {
            if !self.edge_in[w[0]][w[1]] {
                self.edge_in[w[0]][w[1]] = true;
                self.edge_in[w[1]][w[0]] = true;
                self.embedded_edges += 1;
            }
        }
    }

    fn fragments(&self) -> Vec<Fragment> {
        let n = self.adj.len();
        let mut out = Vec::new();
        for u in 0..n {
            if !self.vertex_in[u] {
                continue;
            }
            for &v in &self.adj[u] {
                if u < v && self.vertex_in[v] && !self.edge_in[u][v] {
                    out.push(Fragment {
                        attachments: vec![u, v],
                        interior: Vec::new(),
                    });
                }
            }
        }
        let mut seen = vec![false; n];
        for start in 0..n {
            if self.vertex_in[start] || seen[start] {
                continue;
            }
            seen[start] = true;
            let mut interior = vec![start];
            let mut attach = Vec::new();
            let mut i = 0;
            while i < interior.len() {
                let u = interior[i];
                i += 1;
                for &v in &self.adj[u] {
                    if self.vertex_in[v] {
                        attach.push(v);
                    } else if !seen[v] {
                        seen[v] = true;
                        interior.push(v);
                    }
                }
            }
            attach.sort_unstable();
            attach.dedup();
            out.push(Fragment {
                attachments: attach,
                interior,
            });
        }
        out
    }

    /// A path between two distinct attachments through the fragment.
    fn fragment_path(&self, frag: &Fragment) -> Vec<usize> {
        if frag.interior.is_empty() {
            return frag.attachments.clone();
        }
        let n = self.adj.len();
        let mut in_frag = vec![false; n];
        for &v in &frag.interior {
            in_frag[v] = true;
        }
        let start = frag.attachments[0];
        let mut parent = vec![usize::MAX; n];
        let mut queue = std::collections::VecDeque::new();
        for &v in &self.adj[start] {
            if in_frag[v] && parent[v] == usize::MAX {
                parent[v] = start;
                queue.push_back(v);
            }
        }
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if self.vertex_in[v] && v != start {
                    let mut path = vec![v, u];
                    let mut w = u;
                    while parent[w] != start {
                        w = parent[w];
                        path.push(w);
                    }
                    path.push(start);
                    path.reverse();
                    return path;
                }
                if in_frag[v] && parent[v] == usize::MAX {
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        unreachable!("fragments of a biconnected block have two attachments")
    }

    fn split_face(&mut self, face_index: usize, path: &[usize]) {
        let face = self.faces.swap_remove(face_index);
        let (s, t) = (path[0], path[path.len() - 1]);
        let i = face
            .iter()
            .position(|&v| v == s)
            .expect("attachment on face");
        let j = face
            .iter()
            .position(|&v| v == t)
            .expect("attachment on face");
        let len = face.len();
        let walk = |from: usize, to: usize| {
            let mut out = vec![face[from]];
            let mut k = from;
            while k != to {
                k = (k + 1) % len;
                out.push(face[k]);
            }
            out
        };
        let inner = &path[1..path.len() - 1];
        let mut first = walk(i, j);
        first.extend(inner.iter().rev());
        let mut second = walk(j, i);
        second.extend(inner.iter());
        self.faces.push(first);
        self.faces.push(second);
    }

    fn run(mut self) -> bool {
        let cycle = self.find_cycle();
        let mut closed = cycle.clone();
        closed.push(cycle[0]);
        self.embed_path(&closed);
        self.faces = vec![cycle.clone(), cycle];
        while self.embedded_edges < self.total_edges {
            let fragments = self.fragments();
            let mut choice: Option<(usize, usize)> = None;
            for (fi, frag) in fragments.iter().enumerate() {
                let admissible: Vec<usize> = self
                    .faces
                    .iter()
                    .enumerate()
                    .filter(|(_, face)| frag.attachments.iter().all(|a| face.contains(a)))
                    .map(|(k, _)| k)
                    .collect();
                match admissible.len() {
                    0 => return false,
                    1 => {
                        choice = Some((fi, admissible[0]));
                        break;
                    }
                    _ => {
                        if choice.is_none() {
                            choice = Some((fi, admissible[0]));
                        }
                    }
                }
            }
            let (fi, face) = choice.expect("at least one fragment remains");
            let path = self.fragment_path(&fragments[fi]);
            self.split_face(face, &path);
            self.embed_path(&path);
        }
        true
    }
}

/// Deletes edges while the graph stays non-planar. Requires `g` non-planar.
fn minimal_nonplanar(g: &SimpleGraph) -> SimpleGraph {
    // Restrict to one non-planar block first.
    let mut h = SimpleGraph::new(g.vertex_count());
    let blocks = biconnected_blocks(g);
    let block = blocks
        .iter()
        .find(|b| {
            let sub = SimpleGraph::from_edges(g.vertex_count(), b.iter().copied());
            !planar_decision(&sub)
        })
        .expect("a non-planar graph has a non-planar block");
    for &(u, v) in block {
        h.add_edge(u, v);
    }
    let edges: Vec<(usize, usize)> = h.edges().collect();
    for (u, v) in edges {
        h.remove_edge(u, v);
        if planar_decision(&h) {
            h.add_edge(u, v);
        }
    }
    h
}

fn kuratowski_subgraph(g: &SimpleGraph) -> KuratowskiWitness {
    let h = minimal_nonplanar(g);
    let n = h.vertex_count();
    let branch: Vec<usize> = (0..n).filter(|&v| h.degree(v) >= 3).collect();
    let is_branch = |v: usize| h.degree(v) >= 3;

    let mut paths: Vec<Vec<usize>> = Vec::new();
    for &b in &branch {
        for first in h.neighbors(b) {
            let mut path = vec![b, first];
            let (mut prev, mut cur) = (b, first);
            while !is_branch(cur) {
                let next = h
                    .neighbors(cur)
                    .find(|&w| w != prev)
                    .expect("subdivision vertices have degree two");
                prev = cur;
                cur = next;
                path.push(cur);
            }
            if b < cur {
                paths.push(path);
            }
        }
    }
    paths.sort();

    let kind = if branch.len() == 5 {
        KuratowskiKind::K5
    } else {
        KuratowskiKind::K33
    };
    let parts = (kind == KuratowskiKind::K33).then(|| {
        let first = branch[0];
        let across: Vec<usize> = paths
            .iter()
            .filter_map(|p| {
                let (s, t) = (p[0], p[p.len() - 1]);
                if s == first {
                    Some(t)
                } else if t == first {
                    Some(s)
                } else {
                    None
                }
            })
            .collect();
        let mut other: Vec<usize> = across;
        other.sort_unstable();
        let same: Vec<usize> = branch
            .iter()
            .copied()
            .filter(|v| !other.contains(v))
            .collect();
        (same, other)
    });
    KuratowskiWitness {
        kind,
        branch_vertices: branch,
        parts,
        paths,
    }
}
