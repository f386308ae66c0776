//! Tree decomposition of a 2-connected graph along its hinges, then
//! recomposition by 2-sums.
//!
//! Run with `cargo run --example tutte_decompose`.

use entangle::generators::fig1;
use entangle::tutte::{build_tutte_tree, hinges, recompose, validate_tree_decomposition};

fn main() -> entangle::Result<()> {
    let g = fig1();
    for h in hinges(&g)? {
        println!("hinge {:?}", h.pair());
    }
    let t = build_tutte_tree(&g)?;
    for (i, node) in t.nodes.iter().enumerate() {
        println!("t{i} {} {:?}", node.kind, node.bag);
    }
    for e in &t.edges {
        println!("t{} -- t{} at {:?}", e.a, e.b, e.hinge);
    }
    println!("valid: {}", validate_tree_decomposition(&g, &t).is_valid());
    println!("recomposes: {}", recompose(&t)? == g.without_labels());
    Ok(())
}
