//! Admissible Grassmann bundles Gr(k, F) → Z carrying a rank-6 bundle whose
//! three-form locus is a fourfold with trivial canonical class.

use odl::forms::grassmann_bundle_catalog;

fn main() {
    for row in grassmann_bundle_catalog().iter().take(8) {
        let chi = row.config.x.euler_characteristic(&row.config.x.trivial(1)).unwrap();
        println!(
            "{:5} Z = {:22} F = {:14} k = {}  {:?}  dim {}  χ(O_base) = {chi}",
            row.label, row.base, row.f, row.k, row.condition, row.dim
        );
    }
}
