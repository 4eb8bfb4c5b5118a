//! DOT and JSON renderings of a commuting graph. Output is deterministic:
//! vertices in id order, edges lexicographic.

use std::fmt::Write;

use serde_json::{json, Value};

use super::CommutingGraph;

pub fn to_dot(graph: &CommutingGraph<'_>) -> String {
    let g = graph.group();
    let mut out = String::new();
    writeln!(out, "graph commuting {{").unwrap();
    for (i, &x) in graph.vertices().iter().enumerate() {
        let label = g.element(x).to_string().replace('"', "\\\"");
        writeln!(out, "  v{i} [label=\"{label}\", id=\"{x}\"];").unwrap();
    }
    for (i, j) in graph.edges() {
        writeln!(out, "  v{i} -- v{j};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// `{"vertices": [element ids], "edges": [[i, j], ..], "mode", "group_order",
/// "center_order", "vertex_count", "edge_count"}`; edge endpoints are vertex indices.
pub fn to_json(graph: &CommutingGraph<'_>) -> Value {
    let edges: Vec<[usize; 2]> = graph.edges().map(|(i, j)| [i, j]).collect();
    json!({
        "vertices": graph.vertices(),
        "edges": edges,
        "mode": graph.mode().to_string(),
        "group_order": graph.group().order(),
        "center_order": graph.group().center().len(),
        "vertex_count": graph.vertex_count(),
        "edge_count": graph.edge_count(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comgraph::Mode;
    use crate::constructions::{standard_group, StandardGroup};
    use crate::groups::DEFAULT_MAX_ORDER as CAP;

    #[test]
    fn quaternion_json() {
        let g = standard_group(StandardGroup::Quaternion8, CAP).unwrap();
        let graph = CommutingGraph::build(&g, Mode::Transversal).unwrap();
        let v = to_json(&graph);
        assert_eq!(v["vertex_count"], 3);
        assert_eq!(v["edge_count"], 0);
        assert_eq!(v["group_order"], 8);
        assert_eq!(v["center_order"], 2);
        assert_eq!(v["mode"], "transversal");
    }

    #[test]
    fn edgeless_dot_lists_vertices_only() {
        let g = standard_group(StandardGroup::Quaternion8, CAP).unwrap();
        let graph = CommutingGraph::build(&g, Mode::Transversal).unwrap();
        let dot = to_dot(&graph);
        assert_eq!(dot.lines().filter(|l| l.contains("label=")).count(), 3);
        assert!(!dot.contains("--"));
        assert!(dot.starts_with("graph commuting {"));
    }

    #[test]
    fn dot_is_deterministic() {
        let g = standard_group(StandardGroup::Symmetric(4), CAP).unwrap();
        let a = to_dot(&CommutingGraph::build(&g, Mode::Full).unwrap());
        let b = to_dot(&CommutingGraph::build(&g, Mode::Full).unwrap());
        assert_eq!(a, b);
    }
}
