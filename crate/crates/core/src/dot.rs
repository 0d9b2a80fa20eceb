//! Graphviz export.

use std::fmt::Write;

use crate::coloring::{Coloring, EdgeSet};

/// Renders `phi` as an undirected DOT graph. Color-1 pairs are solid black,
/// color-0 pairs gray, and pairs in `highlight` bold. Vertices and edges are
/// emitted in index and colex order.
pub fn to_dot(phi: &Coloring, highlight: Option<&EdgeSet>) -> String {
    let mut out = String::from("graph coloring {\n  node [shape=circle];\n");
    for v in 0..phi.n() {
        writeln!(out, "  {v};").unwrap();
    }
    for idx in 0..phi.pair_count() {
        let (x, y) = crate::pair_from_index(idx);
        let mut attrs = if phi.bit(idx) == 1 {
            String::from("color=black")
        } else {
            String::from("color=gray")
        };
        if highlight.is_some_and(|h| h.n() == phi.n() && h.contains_index(idx)) {
            attrs.push_str(", style=bold, penwidth=3");
        }
        writeln!(out, "  {x} -- {y} [{attrs}];").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dot_is_deterministic_and_marks_edges() {
        let phi = Coloring::from_ones(3, [(0, 1)]).unwrap();
        let h = EdgeSet::from_pairs(3, [(1, 2)]).unwrap();
        let s = to_dot(&phi, Some(&h));
        assert_eq!(
            s,
            "graph coloring {\n  node [shape=circle];\n  0;\n  1;\n  2;\n  \
             0 -- 1 [color=black];\n  0 -- 2 [color=gray];\n  \
             1 -- 2 [color=gray, style=bold, penwidth=3];\n}\n"
        );
        assert_eq!(s, to_dot(&phi, Some(&h)));
    }
}
