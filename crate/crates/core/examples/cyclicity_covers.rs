//! Minimum covers and how they bound entanglement from above.
//!
//! Run with `cargo run --example cyclicity_covers`.

use entangle::analysis::domino;
use entangle::cyclicity::cyclicity_undirected;
use entangle::game::entanglement_value;
use entangle::generators::{complete_bipartite, cycle, fig1};

fn main() -> entangle::Result<()> {
    let named = [
        ("C6", cycle(6)),
        ("K3,3", complete_bipartite(3, 3)),
        ("D4", domino(4)),
        ("fig1", fig1()),
    ];
    for (name, g) in named {
        let sol = cyclicity_undirected(&g)?;
        let ent = entanglement_value(&g)?;
        println!("{name}: cyclicity {} >= entanglement {ent}", sol.size);
        for w in sol.witnesses.iter().take(3) {
            println!("  cover {w:?}");
        }
        if sol.witnesses.len() > 3 {
            println!("  ... {} optimal covers in all", sol.witnesses.len());
        }
    }
    Ok(())
}
