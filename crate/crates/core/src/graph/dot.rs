use std::fmt::Write;

use super::Graph;

/// Graphviz rendering, vertices in declaration order.
pub fn to_dot(g: &Graph) -> String {
    render(g, "E", |_| None)
}

/// Shared renderer; `node_attrs` may decorate individual vertices.
pub(crate) fn render(
    g: &Graph,
    title: &str,
    node_attrs: impl Fn(super::VertexId) -> Option<&'static str>,
) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(title)).unwrap();
    for v in g.vertices() {
        match node_attrs(v) {
            Some(attrs) => writeln!(out, "  {} [{attrs}];", quote(g.vertex_name(v))).unwrap(),
            None => writeln!(out, "  {};", quote(g.vertex_name(v))).unwrap(),
        }
    }
    for e in g.edges() {
        writeln!(
            out,
            "  {} -> {} [label=\"{}\"];",
            quote(g.vertex_name(g.source(e))),
            quote(g.vertex_name(g.range(e))),
            escape(g.edge_name(e))
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

fn is_plain_id(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn quote(s: &str) -> String {
    if is_plain_id(s) {
        s.to_string()
    } else {
        format!("\"{}\"", escape(s))
    }
}
