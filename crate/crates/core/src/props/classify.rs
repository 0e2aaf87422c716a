use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::graph::SimpleGraph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphClassification {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub component_count: usize,
    pub connected: bool,
    pub complete: bool,
    pub null: bool,
    pub tree: bool,
    /// `K_{1,n}` for some `n >= 1`.
    pub star: bool,
    pub acyclic: bool,
    pub bipartite: bool,
    pub regular_degree: Option<usize>,
    pub min_degree: usize,
    pub max_degree: usize,
    /// A closed walk of odd length, listed without repeating the start.
    pub odd_cycle_witness: Option<Vec<usize>>,
    /// In the order of [`SimpleGraph::components`].
    pub diameter_per_component: Vec<usize>,
}

pub fn classify(g: &SimpleGraph) -> GraphClassification {
    let n = g.vertex_count();
    let e = g.edge_count();
    let components = g.components();
    let degrees = g.degrees();
    let min_degree = degrees.iter().copied().min().unwrap_or(0);
    let max_degree = degrees.iter().copied().max().unwrap_or(0);
    let connected = components.len() <= 1;
    let acyclic = e + components.len() == n;
    let tree = connected && acyclic && n >= 1;
    let odd_cycle_witness = odd_cycle(g);
    let diameter_per_component = components
        .iter()
        .map(|comp| {
            comp.iter()
                .map(|&v| g.distances_from(v).into_iter().flatten().max().unwrap_or(0))
                .max()
                .unwrap_or(0)
        })
        .collect();
    GraphClassification {
        vertex_count: n,
        edge_count: e,
        component_count: components.len(),
        connected,
        complete: e == n * n.saturating_sub(1) / 2,
        null: e == 0,
        tree,
        star: tree && n >= 2 && max_degree == n - 1,
        acyclic,
        bipartite: odd_cycle_witness.is_none(),
        regular_degree: (min_degree == max_degree && n > 0).then_some(min_degree),
        min_degree,
        max_degree,
        odd_cycle_witness,
        diameter_per_component,
    }
}

/// BFS 2-colouring; on a monochromatic edge `(u, v)` the tree paths to the
/// common ancestor close an odd cycle.
fn odd_cycle(g: &SimpleGraph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut depth: Vec<Option<usize>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        if depth[root].is_some() {
            continue;
        }
        depth[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let du = depth[u].unwrap_or(0);
            for v in g.neighbors(u) {
                match depth[v] {
                    None => {
                        depth[v] = Some(du + 1);
                        parent[v] = u;
                        queue.push_back(v);
                    }
                    Some(dv) if dv % 2 == du % 2 => {
                        let mut left = vec![u];
                        let mut right = vec![v];
                        let (mut a, mut b) = (u, v);
                        while a != b {
                            a = parent[a];
                            b = parent[b];
                            left.push(a);
                            right.push(b);
                        }
                        right.pop();
                        right.reverse();
                        left.extend(right);
                        // left: u .. lca .. v
                        return Some(left);
                    }
                    Some(_) => {}
                }
            }
        }
    }
    None
}
