//! Direct images along P(E) → X of ∧^i Q_W^* ⊗ G for G = O, Q_W^*, Ω_rel.

use odl::bott::relative::{format_entries, relative_pushforward, FiberBundle};
use odl::bott::tables78_check;

fn main() {
    for g in [FiberBundle::Trivial, FiberBundle::QwDual, FiberBundle::OmegaRel] {
        println!("{g:?}");
        for i in 0..=10 {
            let es = relative_pushforward(i, g);
            if !es.is_empty() {
                println!("  i = {i:2}: {}", format_entries(&es));
            }
        }
    }
    let r = tables78_check();
    println!(
        "{} cells, {}/{} printed partitions regenerated",
        r.cells.len(),
        r.partitions_matched,
        r.partitions_expected
    );
}
