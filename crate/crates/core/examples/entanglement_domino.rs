//! Entanglement of dominoes, with the strategy checked and Thief's orbit shown.
//!
//! Run with `cargo run --example entanglement_domino`.

use entangle::analysis::domino;
use entangle::game::{cycle_vertices, entanglement, thief_cycle, verify_strategy, CopsPolicy, Rules};

fn main() -> entangle::Result<()> {
    for n in [2, 6, 14] {
        let g = domino(n);
        let res = entanglement(&g, Rules::Standard)?;
        println!("D{n}: {} vertices, entanglement {}", g.n(), res.value);
        let d = g.to_digraph();
        for (k, sol) in &res.certificates {
            verify_strategy(&d, *k, Rules::Standard, sol).expect("strategy holds");
            println!("  k={k}: {:?} wins, strategy verified", sol.winner());
            if let Some(cyc) = thief_cycle(&d, sol, CopsPolicy::Chase) {
                println!("  thief orbit against chasing cops: {:?}", cycle_vertices(&cyc));
            }
        }
    }
    Ok(())
}
