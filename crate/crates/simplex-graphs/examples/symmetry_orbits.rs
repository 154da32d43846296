//! The stabilizer of the reference base line inside the projective monomial
//! group: its order, the induced S5 action on the line's points, its orbits
//! on all 162 lines, and the marked stabilizer orders.
//!
//! Run with: cargo run --example symmetry_orbits

use serde_json::json;
use simplex_graphs::symmetry::{
    induced_point_permutation, is_sharply_3_transitive, setwise_stabilizer,
};
use simplex_graphs::verify::{GroupContext, Q4Context};

fn main() -> simplex_graphs::Result<()> {
    let cx = Q4Context::build()?;
    let u = &cx.universe;
    let gx = GroupContext::build(u, cx.base)?;

    println!(
        "projective monomial group: {} elements; stabilizer of the base line: {}",
        gx.full_group.len(),
        gx.stabilizer.len()
    );

    let sample = &gx.stabilizer[1];
    println!(
        "sample element: {}\n  acts on the base points as {}",
        sample.text(u.field()),
        induced_point_permutation(u, sample, cx.base)?.text()
    );

    let orbits = gx.action.orbits();
    let sizes: Vec<usize> = orbits.iter().map(Vec::len).collect();
    println!("\norbit sizes on the 162 lines: {sizes:?}");
    println!(
        "orbit partition as JSON id lists:\n{}",
        json!(orbits
            .iter()
            .map(|o| json!({ "size": o.len(), "lines": o }))
            .collect::<Vec<_>>())
    );

    println!(
        "\nsharply 3-transitive on the six: {}",
        is_sharply_3_transitive(&gx.action, &cx.strat.six)
    );

    let l136 = cx
        .resolve(cx.table.x3_by_name("L_136").expect("table entry"))
        .expect("resolves");
    let l245 = cx
        .resolve(cx.table.x3_by_name("L_245").expect("table entry"))
        .expect("resolves");
    let single = setwise_stabilizer(u, &gx.stabilizer, &[l136])?;
    let pair = setwise_stabilizer(u, &gx.stabilizer, &[l136, l245])?;
    println!(
        "stabilizer of the marked transversal: {} elements; of the marked pair: {}",
        single.len(),
        pair.len()
    );
    Ok(())
}
