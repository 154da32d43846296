//! Graph export: DOT, GraphML, and a JSON adjacency dump, optionally
//! colored by the stratification classes around a base line.

use serde_json::{json, Value};

use crate::graph::{SimplexGraph, Stratification};
use crate::LineId;

fn class_color(class: &str) -> &'static str {
    match class {
        "base" => "black",
        "adjacent" => "steelblue",
        "x3" => "darkorange",
        "x1" => "seagreen",
        "x0" => "firebrick",
        "six" => "purple",
        _ => "gray",
    }
}

/// DOT source for the graph; with a stratification, vertices carry the
/// class as a color.
pub fn to_dot(g: &SimplexGraph, strat: Option<&Stratification>) -> String {
    let mut out = String::from("graph simplex_lines {\n  node [shape=point];\n");
    for v in 0..g.vertex_count() as LineId {
        match strat {
            Some(s) => {
                let class = s.class_of(v);
                out.push_str(&format!(
                    "  {v} [class=\"{class}\", color=\"{}\"];\n",
                    class_color(class)
                ));
            }
            None => out.push_str(&format!("  {v};\n")),
        }
    }
    for a in 0..g.vertex_count() as LineId {
        for b in g.neighbors(a) {
            if b > a {
                out.push_str(&format!("  {a} -- {b};\n"));
            }
        }
    }
    out.push_str("}\n");
    out
}

/// GraphML for the graph, with a `class` node attribute when a
/// stratification is given.
pub fn to_graphml(g: &SimplexGraph, strat: Option<&Stratification>) -> String {
    let mut out = String::from(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
         <graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n\
         <key id=\"class\" for=\"node\" attr.name=\"class\" attr.type=\"string\"/>\n\
         <graph id=\"simplex_lines\" edgedefault=\"undirected\">\n",
    );
    for v in 0..g.vertex_count() as LineId {
        match strat {
            Some(s) => out.push_str(&format!(
                "  <node id=\"n{v}\"><data key=\"class\">{}</data></node>\n",
                s.class_of(v)
            )),
            None => out.push_str(&format!("  <node id=\"n{v}\"/>\n")),
        }
    }
    let mut e = 0;
    for a in 0..g.vertex_count() as LineId {
        for b in g.neighbors(a) {
            if b > a {
                out.push_str(&format!(
                    "  <edge id=\"e{e}\" source=\"n{a}\" target=\"n{b}\"/>\n"
                ));
                e += 1;
            }
        }
    }
    out.push_str("</graph>\n</graphml>\n");
    out
}

/// JSON adjacency dump: sorted neighbor lists per vertex.
pub fn adjacency_json(g: &SimplexGraph, strat: Option<&Stratification>) -> Value {
    json!({
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "adjacency": (0..g.vertex_count() as LineId)
            .map(|v| json!(g.neighbors(v).collect::<Vec<_>>()))
            .collect::<Vec<_>>(),
        "classes": strat.map(|s| {
            (0..g.vertex_count() as LineId)
                .map(|v| json!(s.class_of(v)))
                .collect::<Vec<_>>()
        }),
    })
}
