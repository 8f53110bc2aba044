//! Almost Fano threefolds from the full cones of sl_2 and sl_3.

use odl::nilpotent::catalog::table5;
use odl::nilpotent::invariants;

fn main() {
    for row in table5() {
        match &row.config {
            None => println!("{:40} SKIPPED ({})", row.label, row.skipped.as_deref().unwrap_or("")),
            Some(cfg) => {
                let r = invariants(cfg).unwrap();
                let deg = r.anticanonical_degree.map_or("-".into(), |d| d.to_string());
                println!("{:40} {:12} (-K)^3 = {deg:3}  χ(O) = {}", row.label, r.condition, r.chi_o);
            }
        }
    }
}
