//! Vertex connectivity, disjoint paths and the block-cut tree.
//!
//! Run with `cargo run --example connectivity_blocks`.

use entangle::connectivity::{block_cut_tree, connectivity, vertex_disjoint_paths};
use entangle::generators::{complete, cycle};
use entangle::Graph;

fn main() -> entangle::Result<()> {
    // two triangles sharing vertex 2, plus a pendant
    let bowtie = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5)])?;
    for (name, g) in [("C7", cycle(7)), ("K5", complete(5)), ("bowtie", bowtie.clone())] {
        let c = connectivity(&g, true);
        println!("{name}: connectivity {:?} (clique convention used: {})", c.value, c.convention_applied);
    }
    let paths = vertex_disjoint_paths(&cycle(7), 0, 3)?;
    println!("C7, 0 to 3: {paths:?}");
    let bct = block_cut_tree(&bowtie);
    println!("bowtie articulation points {:?}", bct.articulation_points);
    for (i, b) in bct.blocks.iter().enumerate() {
        println!("  block {i}: {b:?}");
    }
    Ok(())
}
