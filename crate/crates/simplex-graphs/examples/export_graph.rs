//! Write the q = 4 line graph as DOT and GraphML, colored by the
//! stratification around line 0, plus the q = 3 grid for comparison.
//!
//! Run with: cargo run --example export_graph [output-dir]

use std::path::PathBuf;

use simplex_graphs::export::{to_dot, to_graphml};
use simplex_graphs::graph::{stratify, SimplexGraph};
use simplex_graphs::simplex::SimplexUniverse;

fn main() -> simplex_graphs::Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("simplex_graphs_exports"));
    std::fs::create_dir_all(&dir)?;

    let u4 = SimplexUniverse::for_order(4)?;
    let g4 = SimplexGraph::build(&u4);
    let strat = stratify(&g4, 0)?;
    let dot = to_dot(&g4, Some(&strat));
    let xml = to_graphml(&g4, Some(&strat));
    std::fs::write(dir.join("simplex_q4.dot"), &dot)?;
    std::fs::write(dir.join("simplex_q4.graphml"), &xml)?;

    let u3 = SimplexUniverse::for_order(3)?;
    let g3 = SimplexGraph::build(&u3);
    std::fs::write(dir.join("simplex_q3.dot"), to_dot(&g3, None))?;

    println!("wrote simplex_q4.dot, simplex_q4.graphml, simplex_q3.dot to {}", dir.display());
    println!("q4 vertices/edges: {}/{}", g4.vertex_count(), g4.edge_count());
    println!("q3 vertices/edges: {}/{} (K_4,4)", g3.vertex_count(), g3.edge_count());
    Ok(())
}
