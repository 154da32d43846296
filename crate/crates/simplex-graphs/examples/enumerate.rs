//! Enumerate the simplex points and lines of GF(q)^(q+1) for q = 3, 4, 5.
//!
//! Run with: cargo run --example enumerate

use simplex_graphs::simplex::SimplexUniverse;
use simplex_graphs::LineId;

fn main() -> simplex_graphs::Result<()> {
    for q in [3u64, 4, 5] {
        let u = SimplexUniverse::for_order(q)?;
        println!(
            "q = {q}: {} points of PG({}, {q}), {} simplex points, {} simplex lines",
            u.space().point_count(),
            u.n() - 1,
            u.simplex_point_count(),
            u.line_count(),
        );
        for id in [0 as LineId, 1, u.line_count() as LineId - 1] {
            println!("  line {id:>4}: {}", u.line_text(id)?);
        }
        let p = u.simplex_points()[0];
        println!(
            "  first simplex point {} lies on {} lines\n",
            u.space().point(p)?.text(u.field()),
            u.lines_through(p).len()
        );
    }
    Ok(())
}
