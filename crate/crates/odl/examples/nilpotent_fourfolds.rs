//! Fourfolds with trivial canonical class on Gr(2,5) and Gr(2,6).

use odl::nilpotent::catalog::fourfold_catalog;
use odl::nilpotent::invariants;

fn main() {
    for row in fourfold_catalog() {
        let r = invariants(row.config.as_ref().unwrap()).unwrap();
        let chis: Vec<String> = r.chi_omega.iter().map(|c| c.to_string()).collect();
        println!("{:28} {:3} χ(Ω^p) = [{}]", row.label, r.condition, chis.join(", "));
    }
}
