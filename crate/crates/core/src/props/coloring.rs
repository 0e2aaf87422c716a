//! Exact chromatic number for small graphs.

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

use super::independence::clique_number;

/// Largest vertex count the exact colouring search accepts.
pub const CHROMATIC_EXACT_LIMIT: usize = 25;

/// DSATUR greedy colouring; returns the colour of each vertex.
fn dsatur(g: &SimpleGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut color: Vec<Option<usize>> = vec![None; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v].is_none())
            .max_by_key(|&v| (saturation(g, &color, v), g.degree(v), std::cmp::Reverse(v)))
            .expect("an uncoloured vertex remains");
        let used: Vec<usize> = g.neighbors(v).filter_map(|w| color[w]).collect();
        color[v] = Some((0..).find(|c| !used.contains(c)).expect("finite palette"));
    }
    color.into_iter().map(|c| c.unwrap_or(0)).collect()
}

fn saturation(g: &SimpleGraph, color: &[Option<usize>], v: usize) -> usize {
    let mut seen: Vec<usize> = g.neighbors(v).filter_map(|w| color[w]).collect();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

/// Backtracking `k`-colouring with DSATUR vertex order and new colours
/// introduced one at a time.
fn colorable(g: &SimpleGraph, k: usize, color: &mut Vec<Option<usize>>, used: usize) -> bool {
    let n = g.vertex_count();
    let next = (0..n)
        .filter(|&v| color[v].is_none())
        .max_by_key(|&v| (saturation(g, color, v), g.degree(v), std::cmp::Reverse(v)));
    let Some(v) = next else {
        return true;
    };
    let limit = (used + 1).min(k);
    for c in 0..limit {
        if g.neighbors(v).any(|w| color[w] == Some(c)) {
            continue;
        }
        color[v] = Some(c);
        if colorable(g, k, color, used.max(c + 1)) {
            return true;
        }
    }
    color[v] = None;
    false
}

/// Exact `chi(G)`, searching upward from the clique number.
pub fn chromatic_number(g: &SimpleGraph) -> Result<usize> {
    let n = g.vertex_count();
    if n > CHROMATIC_EXACT_LIMIT {
        return Err(Error::SizeLimitExceeded {
            vertices: n,
            limit: CHROMATIC_EXACT_LIMIT,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let upper = dsatur(g).into_iter().max().map_or(0, |c| c + 1);
    let (omega, _) = clique_number(g);
    for k in omega..upper {
        if colorable(g, k, &mut vec![None; n], 0) {
            return Ok(k);
        }
    }
    Ok(upper)
}
