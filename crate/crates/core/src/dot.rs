//! Graphviz export.

use std::fmt::Write as _;

use crate::graph::SimpleGraph;

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

/// One `graph` block: nodes in index order, then edges in lexicographic
/// order. The output depends only on the graph and its labels.
pub fn to_dot(g: &SimpleGraph, name: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph {name} {{");
    for v in 0..g.vertex_count() {
        let _ = writeln!(out, "  {v} [label=\"{}\"];", escape(&g.label(v)));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}
