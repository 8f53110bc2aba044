//! The subregular orbit of sp_4 on P^7. With E = 2O ⊕ 2O(1) the resolution
//! has χ(O) = 2, which suggests two components.

use odl::nilpotent::catalog::symplectic_rows;
use odl::nilpotent::invariants;

fn main() {
    for row in symplectic_rows() {
        let r = invariants(row.config.as_ref().unwrap()).unwrap();
        let deg = r.anticanonical_degree.map_or("-".into(), |d| d.to_string());
        println!("{}: (-K)^3 = {deg}, χ(O) = {}", row.label, r.chi_o);
        for n in &r.notes {
            println!("  {n}");
        }
    }
}
