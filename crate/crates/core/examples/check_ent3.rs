//! Structural check for entanglement three on a 2-connected graph: molecule
//! torsos, interfaces inside bases, and the diameter bound.
//!
//! Run with `cargo run --example check_ent3`.

use entangle::analysis::{check_ent3, cover_avoiding_family, twosum_chain};
use entangle::game::entanglement_value;
use entangle::generators::{complete, cycle, fig1};

fn main() -> entangle::Result<()> {
    let g = fig1();
    let r = check_ent3(&g)?;
    println!("fig1: {:?}, entanglement {}", r.verdict, entanglement_value(&g)?);

    let chain = twosum_chain(&[complete(4), cycle(5), complete(4)])?;
    println!("K4 + C5 + K4: {:?}", check_ent3(&chain)?.verdict);

    // gluing a triangle onto an edge no minimum cover avoids breaks the check
    for (spec, e, sum) in cover_avoiding_family(4)?.into_iter().take(3) {
        let r = check_ent3(&sum)?;
        println!(
            "k={} h={} triangle on {e:?}: interfaces ok {}, entanglement {}",
            spec.k,
            spec.h,
            r.interfaces_ok(),
            entanglement_value(&sum)?
        );
    }
    Ok(())
}
