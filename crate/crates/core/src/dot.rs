//! Graphviz DOT output. Labels are 1-based.

use std::fmt::Write as _;

use crate::graph::{EdgeColoring, Graph};
use crate::spine::{CcsNode, CcsTree};

/// The spine as a digraph, red nodes red and green nodes green.
pub fn ccs_dot(t: &CcsTree) -> String {
    let mut out = String::from("digraph ccs {\n  node [style=filled];\n");
    for (i, node) in t.nodes().iter().enumerate() {
        let (label, fill) = match *node {
            CcsNode::Red(v) => (format!("{}", v + 1), "red"),
            CcsNode::Green(u, w) => (format!("{},{}", u + 1, w + 1), "green"),
        };
        let _ = writeln!(out, "  n{i} [label=\"{label}\", fillcolor={fill}];");
    }
    for i in 1..t.len() {
        if let Some(p) = t.parent(i) {
            let _ = writeln!(out, "  n{p} -> n{i};");
        }
    }
    out.push_str("}\n");
    out
}

/// The uncoloured graph.
pub fn graph_dot(g: &Graph) -> String {
    let mut out = String::from("graph mop {\n  node [shape=circle];\n");
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "  {} -- {};", u + 1, v + 1);
    }
    out.push_str("}\n");
    out
}

/// The graph with each edge labelled by its colour.
pub fn coloring_dot(g: &Graph, c: &EdgeColoring) -> String {
    let mut out = String::from("graph coloring {\n  node [shape=circle];\n");
    for v in 0..g.n() {
        let _ = writeln!(out, "  {};", v + 1);
    }
    for (&(u, v), col) in g.edges().iter().zip(c.as_slice()) {
        let _ = writeln!(out, "  {} -- {} [label=\"{col}\"];", u + 1, v + 1);
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::lad;
    use crate::spine::build_ccs;

    #[test]
    fn ccs_nodes_are_coloured() {
        let l = lad(5).unwrap();
        let t = build_ccs(&l.graph).unwrap();
        let dot = ccs_dot(&t);
        assert!(dot.starts_with("digraph ccs {"));
        assert_eq!(
            dot.matches("fillcolor=red").count() + dot.matches("fillcolor=green").count(),
            t.len()
        );
        assert_eq!(dot.matches("->").count(), t.len() - 1);
    }

    #[test]
    fn every_edge_labelled() {
        let l = lad(3).unwrap();
        let dot = coloring_dot(l.graph.graph(), l.coloring.as_ref().unwrap());
        assert_eq!(dot.matches(" -- ").count(), 9);
        assert!(dot.contains("1 -- 2 [label=\"1\"];"));
    }
}
