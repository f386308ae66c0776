//! Building k-molecules, recognising them again, and the ambiguity classes.
//!
//! Run with `cargo run --example molecules`.

use entangle::molecules::{all_witnesses, classify_ambiguity_3, make_molecule, MoleculeSpec};

fn main() -> entangle::Result<()> {
    let specs = [
        MoleculeSpec::new(3, vec![], 3),
        MoleculeSpec::new(3, vec![(0, 1)], 3),
        MoleculeSpec::new(3, vec![(0, 1), (1, 2)], 2),
        MoleculeSpec::new(3, vec![(0, 1), (1, 2), (0, 2)], 1),
        MoleculeSpec::new(4, vec![(0, 1), (2, 3)], 4),
    ];
    for spec in specs {
        let g = make_molecule(&spec)?;
        let bases: Vec<_> = all_witnesses(&g).into_iter().map(|w| w.base).collect();
        print!("k={} base edges {:?} h={}: {} vertices, bases {bases:?}", spec.k, spec.base_edges, spec.h, g.n());
        if spec.k == 3 {
            print!(", {:?}", classify_ambiguity_3(&g)?);
        }
        println!();
    }
    Ok(())
}
