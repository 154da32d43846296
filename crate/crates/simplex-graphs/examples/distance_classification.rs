//! The distance classification of the q = 4 line graph around the reference
//! base line: the 25 adjacent lines, the 130 lines at distance 2 split by
//! how many of the six distance-3 lines they meet, and the spread.
//!
//! Run with: cargo run --example distance_classification

use simplex_graphs::graph::{stratify, verify_spread, SimplexGraph};
use simplex_graphs::simplex::SimplexUniverse;
use simplex_graphs::verify::reference_base_line;

fn main() -> simplex_graphs::Result<()> {
    let u = SimplexUniverse::for_order(4)?;
    let g = SimplexGraph::build(&u);
    let base = reference_base_line(&u)?;

    println!("base line {base}: {}", u.line_text(base)?);
    println!(
        "graph: {} vertices, {} edges, degrees all {}, diameter {:?}",
        g.vertex_count(),
        g.edge_count(),
        g.degree(0),
        g.diameter()
    );

    let s = stratify(&g, base)?;
    println!("\ndistance 1 (adjacent): {:3} lines", s.adjacent.len());
    println!("distance 2, meeting 3 of the six: {:3} lines", s.x3.len());
    println!("distance 2, meeting 1 of the six: {:3} lines", s.x1.len());
    println!("distance 2, meeting none:         {:3} lines", s.x0.len());
    println!("distance 3 (the six):             {:3} lines", s.six.len());

    println!("\nthe six:");
    for &l in &s.six {
        println!("  {l:>4}  {}", u.line_text(l)?);
    }

    let mut spread = vec![base];
    spread.extend_from_slice(&s.six);
    spread.extend_from_slice(&s.x0);
    println!(
        "\nbase + six + off-six stratum: {} lines, spread of all {} simplex points: {}",
        spread.len(),
        u.simplex_point_count(),
        verify_spread(&u, &spread)
    );

    // The same counts hold regardless of the base.
    let uniform = (0..g.vertex_count() as u32).all(|b| stratify(&g, b).is_ok());
    println!("identical stratification for all 162 bases: {uniform}");
    Ok(())
}
