//! Graph families and the text formats: edge list, JSON and DOT.
//!
//! Run with `cargo run --example generators_io`.

use entangle::generators::{random_two_connected, star};
use entangle::io::{emit_dot, emit_edge_list, emit_json, parse_graph};
use rand::rngs::StdRng;
use rand::SeedableRng;

fn main() -> entangle::Result<()> {
    let mut rng = StdRng::seed_from_u64(7);
    let g = random_two_connected(8, 3, &mut rng)?;
    let text = emit_edge_list(&g);
    print!("{text}");
    assert_eq!(parse_graph(&text)?, g);
    let json = emit_json(&g.clone().with_labels((0..g.n()).map(|i| format!("v{}", i + 1))));
    println!("{json}");
    assert_eq!(parse_graph(&json)?.without_labels(), g);
    print!("{}", emit_dot(&star(3), "star"));
    Ok(())
}
