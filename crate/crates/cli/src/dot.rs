//! Deterministic Graphviz rendering of lattices and dual spaces.
//!
//! Orders are drawn by their Hasse diagrams (bottom to top), relations
//! between carriers as dashed edges.  Quasi-orders are drawn by the covers
//! of their strict part plus undirected dotted edges between equivalent
//! points.

use std::fmt::Write as _;

use latdual_core::{DualSpace, Lattice, Relation};

/// Index pairs drawn as edges.
pub type Edges = Vec<(usize, usize)>;

/// Hasse covers of the strict part of a quasi-order, and the pairs
/// `a < b` (by index) of distinct equivalent points.
pub fn quasi_order_edges(order: &Relation) -> (Edges, Edges) {
    let n = order.left_len();
    let strict = |a: usize, b: usize| order.contains(a, b) && !order.contains(b, a);
    let mut covers = Vec::new();
    let mut equivalent = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if strict(a, b) && !(0..n).any(|c| strict(a, c) && strict(c, b)) {
                covers.push((a, b));
            }
            if a < b && order.contains(a, b) && order.contains(b, a) {
                equivalent.push((a, b));
            }
        }
    }
    (covers, equivalent)
}

fn quoted(label: &str) -> String {
    let escaped = label.replace('\\', "\\\\").replace('"', "\\\"");
    format!("\"{escaped}\"")
}

/// Incrementally built DOT text.
struct DotWriter {
    out: String,
}

impl DotWriter {
    fn new(name: &str) -> Self {
        let mut out = String::new();
        let _ = writeln!(out, "digraph {} {{", quoted(name));
        out.push_str("  rankdir=BT;\n  node [shape=ellipse];\n");
        DotWriter { out }
    }

    fn cluster(&mut self, id: &str, title: &str, prefix: &str, labels: &[String]) {
        let _ = writeln!(self.out, "  subgraph cluster_{id} {{");
        let _ = writeln!(self.out, "    label={};", quoted(title));
        for (i, l) in labels.iter().enumerate() {
            let _ = writeln!(self.out, "    {prefix}{i} [label={}];", quoted(l));
        }
        self.out.push_str("  }\n");
    }

    fn nodes(&mut self, prefix: &str, labels: &[String]) {
        for (i, l) in labels.iter().enumerate() {
            let _ = writeln!(self.out, "  {prefix}{i} [label={}];", quoted(l));
        }
    }

    fn edges(&mut self, from: &str, to: &str, pairs: &[(usize, usize)], attributes: &str) {
        for (a, b) in pairs {
            if attributes.is_empty() {
                let _ = writeln!(self.out, "  {from}{a} -> {to}{b};");
            } else {
                let _ = writeln!(self.out, "  {from}{a} -> {to}{b} [{attributes}];");
            }
        }
    }

    fn quasi_order(&mut self, prefix: &str, order: &Relation, attributes: &str) {
        let (covers, equivalent) = quasi_order_edges(order);
        self.edges(prefix, prefix, &covers, attributes);
        let joined = if attributes.is_empty() {
            "dir=none, style=dotted".to_string()
        } else {
            format!("{attributes}, dir=none, style=dotted")
        };
        self.edges(prefix, prefix, &equivalent, &joined);
    }

    fn finish(mut self) -> String {
        self.out.push_str("}\n");
        self.out
    }
}

/// The Hasse diagram of a lattice.
pub fn render_lattice(l: &Lattice) -> String {
    let mut w = DotWriter::new(l.name());
    w.nodes("x", l.labels());
    w.edges("x", "x", &l.covers(), "");
    w.finish()
}

/// A dual space: orders as Hasse diagrams, relations as dashed edges.
pub fn render_space(space: &DualSpace) -> String {
    match space {
        DualSpace::Filt(l) => render_lattice(l),
        DualSpace::Cg(c) => {
            let mut w = DotWriter::new("CG-space");
            w.nodes("x", c.labels());
            if let latdual_core::DualMorphism::Cg(identity) = space.identity() {
                w.quasi_order("x", &identity.relation, "");
            }
            w.finish()
        }
        DualSpace::Dh(d) => {
            let mut w = DotWriter::new("DH-space");
            w.cluster("x", "X", "x", d.x().labels());
            w.cluster("y", "Y", "y", d.y().labels());
            w.edges("x", "x", &d.x().covers(), "");
            w.edges("y", "y", &d.y().covers(), "");
            w.edges("x", "y", &d.relation().pairs(), "style=dashed, label=\"R\"");
            w.finish()
        }
        DualSpace::Gvg(g) => {
            let mut w = DotWriter::new("GvG-space");
            w.cluster("x", "X", "x", g.x().labels());
            w.cluster("y", "Y", "y", g.y().labels());
            w.edges("x", "x", &g.x().covers(), "");
            w.edges("y", "y", &g.y().covers(), "");
            w.edges("x", "y", &g.relation().pairs(), "style=dashed, label=\"R\"");
            w.finish()
        }
        DualSpace::Hg(h) => {
            let (on_x, on_y) = h.derived_quasi_orders();
            let mut w = DotWriter::new("Hartung space");
            w.cluster("x", "X", "x", h.x_labels());
            w.cluster("y", "Y", "y", h.y_labels());
            w.quasi_order("x", &on_x, "");
            w.quasi_order("y", &on_y, "");
            w.edges("x", "y", &h.relation().pairs(), "style=dashed, label=\"R\"");
            w.finish()
        }
        DualSpace::Urq(u) => {
            let mut w = DotWriter::new("Urquhart space");
            w.nodes("z", u.labels());
            w.quasi_order("z", u.first_order(), "label=\"1\"");
            w.quasi_order("z", u.second_order(), "label=\"2\", color=blue");
            w.finish()
        }
        DualSpace::Plo(p) => {
            let mut w = DotWriter::new("Ploščica space");
            w.nodes("z", p.labels());
            let pairs: Vec<(usize, usize)> = p
                .relation()
                .pairs()
                .into_iter()
                .filter(|(a, b)| a != b)
                .collect();
            w.edges("z", "z", &pairs, "style=dashed, label=\"R\"");
            w.finish()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use latdual_core::fixtures;
    use latdual_core::functors::dh_of;

    fn count(text: &str, needle: &str) -> usize {
        text.lines().filter(|l| l.contains(needle)).count()
    }

    #[test]
    fn diamond_has_six_hasse_edges() {
        let text = render_lattice(&fixtures::diamond(3));
        assert_eq!(count(&text, "->"), 6);
    }

    #[test]
    fn two_element_dh_dual_has_one_dashed_edge() {
        let text = render_space(&DualSpace::Dh(dh_of(&fixtures::chain(2))));
        assert_eq!(count(&text, "style=dashed"), 1);
    }

    #[test]
    fn quasi_orders_split_into_covers_and_equivalences() {
        let order = Relation::from_fn(3, 3, |a, b| a == b || (a < 2 && b < 2) || b == 2);
        let (covers, equivalent) = quasi_order_edges(&order);
        assert_eq!(covers, vec![(0, 2), (1, 2)]);
        assert_eq!(equivalent, vec![(0, 1)]);
    }

    #[test]
    fn labels_are_escaped() {
        assert_eq!(quoted("a\"b"), "\"a\\\"b\"");
    }
}
