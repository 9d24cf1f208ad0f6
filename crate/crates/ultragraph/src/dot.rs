//! Graphviz renderings of graphs, quotients, and duals.
//!
//! Set-valued ranges are flattened to one arrow per range member, all
//! carrying the family's label; multiplicities are shown as `[*3]` or
//! `[*inf]` suffixes.

use std::fmt::Write;

use crate::dual::{DualGraph, DualNode};
use crate::graph::{Multiplicity, Ultragraph};
use crate::quotient::{ExtendedUltragraph, QuotientUltragraph};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn label(id: &str, m: Multiplicity) -> String {
    match m {
        Multiplicity::Finite(1) => id.to_string(),
        m => format!("{id}[*{m}]"),
    }
}

/// The graph itself, vertices in declaration order.
pub fn base_dot(g: &Ultragraph) -> String {
    let mut out = String::from("digraph ultragraph {\n  rankdir=LR;\n");
    for v in g.vertices() {
        let _ = writeln!(out, "  {};", quote(g.vertex_name(v)));
    }
    for e in g.edges() {
        for x in e.range.iter() {
            let _ = writeln!(
                out,
                "  {} -> {} [label={}];",
                quote(g.vertex_name(e.source)),
                quote(g.vertex_name(crate::graph::VertexId(x))),
                quote(&label(&e.id, e.multiplicity))
            );
        }
    }
    out.push_str("}\n");
    out
}

/// The extension, with split twins named by a trailing apostrophe.
pub fn extended_dot(ext: &ExtendedUltragraph) -> String {
    base_dot(&ext.to_ultragraph())
}

/// The quotient, vertex classes in brackets.
pub fn quotient_dot(q: &QuotientUltragraph) -> String {
    let mut out = String::from("digraph quotient {\n  rankdir=LR;\n");
    for &v in q.vertices() {
        let _ = writeln!(out, "  {};", quote(&q.render_vertex(v)));
    }
    for e in q.edges() {
        let id = label(q.edge_id(e), q.edge_multiplicity(e));
        for m in e.range.members() {
            let _ = writeln!(
                out,
                "  {} -> {} [label={}];",
                quote(&q.render_vertex(e.source)),
                quote(&q.render_vertex(m)),
                quote(&id)
            );
        }
    }
    out.push_str("}\n");
    out
}

/// The dual graph of a fragment: picked vertices as boxes, patterns as
/// diamonds, picked edges as plain nodes.
pub fn dual_dot(d: &DualGraph) -> String {
    let mut out = String::from("digraph dual {\n  rankdir=LR;\n");
    for (i, node) in d.nodes().iter().enumerate() {
        let shape = match node {
            DualNode::Vertex(_) => " [shape=box]",
            DualNode::Edge(_) => "",
            DualNode::Pattern(_) => " [shape=diamond]",
        };
        let _ = writeln!(out, "  {}{};", quote(d.node_name(i)), shape);
    }
    for &(s, t) in d.edges() {
        let _ = writeln!(out, "  {} -> {};", quote(d.node_name(s)), quote(d.node_name(t)));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dual::Fragment;
    use crate::heredity::{AdmissiblePair, SatHereditary};
    use crate::set::VertexSet;
    use crate::testutil as fixtures;

    #[test]
    fn base_rendering() {
        let g = fixtures::cyc1();
        assert_eq!(
            base_dot(&g),
            "digraph ultragraph {\n  rankdir=LR;\n  \"x\";\n  \"x\" -> \"x\" [label=\"l\"];\n}\n"
        );
    }

    #[test]
    fn multiplicity_labels() {
        let g = fixtures::inf_loop_plus_sink();
        let dot = base_dot(&g);
        assert!(dot.contains("\"x\" -> \"y\" [label=\"m[*inf]\"];"));
        assert!(dot.contains("\"x\" -> \"x\" [label=\"l\"];"));
    }

    #[test]
    fn quotient_rendering() {
        let g = fixtures::ex1();
        let h1 = VertexSet::from_indices(
            ["v", "a"].iter().map(|n| g.vertex_by_name(n).unwrap().0),
        );
        let h = SatHereditary::new(&g, h1).unwrap();
        let pair = AdmissiblePair::new(&g, h, VertexSet::EMPTY).unwrap();
        let q = QuotientUltragraph::new(&g, pair);
        let dot = quotient_dot(&q);
        assert!(dot.contains("\"[w']\";"));
        assert!(dot.contains("\"[u]\" -> \"[w]\" [label=\"e\"];"));
        assert!(dot.contains("\"[u]\" -> \"[w']\" [label=\"e\"];"));
        assert!(dot.contains("\"[w]\" -> \"[u]\" [label=\"g\"];"));
        assert!(!dot.contains("label=\"f\""), "edges into the hereditary part are gone");

        let ext_dot = extended_dot(q.extended());
        assert!(ext_dot.contains("\"w'\" -> \"a\" [label=\"f\"];"));
        assert!(ext_dot.contains("\"w'\" -> \"v\" [label=\"h[*inf]\"];"));
    }

    #[test]
    fn dual_rendering() {
        let g = fixtures::ex1();
        let h1 = VertexSet::from_indices(
            ["v", "a"].iter().map(|n| g.vertex_by_name(n).unwrap().0),
        );
        let h = SatHereditary::new(&g, h1).unwrap();
        let pair = AdmissiblePair::new(&g, h, VertexSet::EMPTY).unwrap();
        let q = QuotientUltragraph::new(&g, pair);
        let f = Fragment::from_names(&q, &["w'", "e"]).unwrap();
        let dot = dual_dot(&DualGraph::new(&q, &f));
        assert_eq!(
            dot,
            "digraph dual {\n  rankdir=LR;\n  \"[w']\" [shape=box];\n  \"e\";\n  \
             \"1\" [shape=diamond];\n  \"e\" -> \"[w']\";\n  \"e\" -> \"1\";\n}\n"
        );
    }
}
