//! Duality with Hamming codes: each simplex line has an (n−2)-dimensional
//! dual, and two lines are adjacent exactly when their duals meet in
//! dimension n−3. Verified here over all pairs.
//!
//! Run with: cargo run --example duality

use simplex_graphs::graph::SimplexGraph;
use simplex_graphs::simplex::SimplexUniverse;
use simplex_graphs::LineId;

fn main() -> simplex_graphs::Result<()> {
    let u = SimplexUniverse::for_order(4)?;
    let g = SimplexGraph::build(&u);
    let f = u.field();

    let lid = 0 as LineId;
    println!("line {lid}: {}", u.line_text(lid)?);
    println!("dual (Hamming) code basis:");
    for v in u.dual_basis(lid)? {
        println!("  {}", v.text(f));
    }

    let n = u.line_count() as LineId;
    let mut pairs = 0u32;
    let mut agree = 0u32;
    let mut adjacent = 0u32;
    for a in 0..n {
        for b in a + 1..n {
            pairs += 1;
            let adj = g.edge(a, b);
            adjacent += adj as u32;
            let dim = u.duals_meet_in_dim(a, b)?;
            agree += (adj == (dim == u.n() - 3)) as u32;
        }
    }
    println!(
        "\n{pairs} line pairs, {adjacent} adjacent; adjacency matches dual intersection dimension on {agree} pairs"
    );
    Ok(())
}
