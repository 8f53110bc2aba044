//! The catalog of Richardson orbits, and which ambients could host a
//! Calabi–Yau or Fano locus of a given dimension.

use odl::nilpotent::{feasibility, orbit_catalog, Target};

fn main() {
    for o in orbit_catalog() {
        let part = o.partition().map_or("-".to_string(), |p| p.to_string());
        println!(
            "({:2}) {:14} {:5} dim G/P {:2}  ℓ_P {:2}  codim Sing {}  δ {}  partition {part}",
            o.id,
            o.space,
            o.group.to_string(),
            o.dim_gp,
            o.ell_p(),
            o.codim_sing,
            o.delta
        );
    }
    for o in orbit_catalog().iter().filter(|o| o.computable()) {
        for (d, t) in [(3, Target::CalabiYau), (3, Target::Fano), (4, Target::Fano)] {
            println!("({}) d = {d} {t:?}: {}", o.id, feasibility(o, d, t));
        }
    }
}
