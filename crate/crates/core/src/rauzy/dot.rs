use std::fmt::Write;

use super::RauzyGraph;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz rendering: vertices labeled by their factors, edges by the
/// length-(i+1) factor they stand for.
pub(super) fn to_dot(g: &RauzyGraph) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(&format!("Gamma_{}", g.order()))).unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for v in g.vertices() {
        writeln!(out, "  {};", quote(&v.to_string())).unwrap();
    }
    for (e, word) in g.edges().iter().enumerate() {
        writeln!(
            out,
            "  {} -> {} [label={}];",
            quote(&g.vertices()[g.source(e)].to_string()),
            quote(&g.vertices()[g.target(e)].to_string()),
            quote(&word.to_string())
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use crate::rauzy::build_rauzy_graph;
    use crate::words::Word;

    #[test]
    fn gamma_one_of_abac_cubed() {
        let g = build_rauzy_graph(&Word::parse("abacabacabac").unwrap(), 1).unwrap();
        let expected = "\
digraph \"Gamma_1\" {
  node [shape=circle];
  \"a\";
  \"b\";
  \"c\";
  \"a\" -> \"b\" [label=\"ab\"];
  \"a\" -> \"c\" [label=\"ac\"];
  \"b\" -> \"a\" [label=\"ba\"];
  \"c\" -> \"a\" [label=\"ca\"];
}
";
        assert_eq!(g.to_dot(), expected);
    }

    #[test]
    fn quotes_are_escaped() {
        let g = build_rauzy_graph(&Word::parse("a\"a").unwrap(), 1).unwrap();
        assert!(g.to_dot().contains("\"\\\"\""));
    }
}
