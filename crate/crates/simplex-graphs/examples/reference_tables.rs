//! Cross-check the bundled reference line tables against enumeration from
//! scratch: the six, the 20 transversals with their incidence triples and
//! bold rows, the 20 spread lines, and the pair-join table.
//!
//! Run with: cargo run --example reference_tables

use simplex_graphs::verify::{verify_appendix, Q4Context, Report};

fn main() -> simplex_graphs::Result<()> {
    let cx = Q4Context::build()?;
    println!(
        "tables: {} six, {} transversal, {} spread lines, {} pair rows\n",
        cx.table.six.len(),
        cx.table.x3.len(),
        cx.table.x0.len(),
        cx.table.pairs.len()
    );
    let report = Report::new("appendix", verify_appendix(&cx));
    print!("{}", report.to_text(false));
    std::process::exit(if report.all_pass() { 0 } else { 1 });
}
