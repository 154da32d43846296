//! The two ends of the supported range: for q = 3 the line graph is the
//! complete bipartite grid K_{4,4}; for q = 5 the star-clique description
//! fails, witnessed by an explicit triangle of simplex lines with three
//! distinct intersection points.
//!
//! Run with: cargo run --example small_fields

use simplex_graphs::graph::{triangle_intersections, SimplexGraph};
use simplex_graphs::projective::GfVector;
use simplex_graphs::simplex::SimplexUniverse;

fn main() -> simplex_graphs::Result<()> {
    let u3 = SimplexUniverse::for_order(3)?;
    let g3 = SimplexGraph::build(&u3);
    println!(
        "q = 3: {} points, {} lines, all degrees {}",
        u3.simplex_point_count(),
        u3.line_count(),
        g3.degree(0)
    );
    if let Some((a, b)) = g3.complete_bipartition() {
        println!("  grid: complete bipartite with parts {a:?} and {b:?}");
    }

    let u5 = SimplexUniverse::for_order(5)?;
    let g5 = SimplexGraph::build(&u5);
    println!(
        "\nq = 5: {} points, {} lines, all degrees {}",
        u5.simplex_point_count(),
        u5.line_count(),
        g5.degree(0)
    );

    let f = u5.field();
    let x = GfVector::parse("011111", f)?;
    let y = GfVector::parse("101243", f)?;
    let z = GfVector::parse("431420", f)?;
    let mut ids = Vec::new();
    for (a, b) in [(x, y), (x, z), (y, z)] {
        let span = u5.space().span_line_of_vectors(a, b)?;
        let id = u5.line_id(span.point_ids()).expect("span is simplex");
        ids.push(id);
        println!("  simplex line {id}: {}", u5.line_text(id)?);
    }
    match triangle_intersections(&u5, ids[0], ids[1], ids[2]) {
        Some(points) => {
            println!("  triangle with three distinct intersection points:");
            for p in points {
                println!("    {}", u5.space().point(p)?.text(f));
            }
            println!("  so not every maximal clique is a point star for q = 5");
        }
        None => println!("  unexpectedly concurrent"),
    }

    // The adjacency hyperplane of a point also picks up non-adjacent points
    // with a different zero coordinate once q >= 5.
    let p = u5.space().point_id(GfVector::parse("011111", f)?)?;
    let witnesses = u5.nonadjacent_in_hyperplane(p)?;
    let off = witnesses
        .iter()
        .filter(|&&t| u5.space().points()[t as usize].single_zero() != Some(0))
        .count();
    println!(
        "\n  non-adjacent simplex points on the hyperplane of <011111>: {} ({} with another zero coordinate)",
        witnesses.len(),
        off
    );
    Ok(())
}
