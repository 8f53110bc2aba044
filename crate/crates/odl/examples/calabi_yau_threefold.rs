//! A threefold with trivial canonical class in a linear section of
//! Gr(2,7), with Hodge numbers from the Koszul/Bott pipeline.

use odl::chow::grassmannian;
use odl::forms::{check_conditions, hodge_numbers, invariants, FormsLocus};

fn main() {
    let g = grassmannian(2, 7).unwrap();
    for e in ["dual(U) + 4*O", "Q + O"] {
        let cfg = FormsLocus::homogeneous(e, &g, &["O(1)", "O(1)"], e).unwrap();
        println!("Gr(2,7) ∩ 2H, E = {e}");
        println!("  condition: {}", check_conditions(&cfg).label());
        let r = invariants(&cfg).unwrap();
        println!("  χ(O) = {}, χ(Ω¹) = {}", r.chi_o, r.chi_omega[1]);
        let h = hodge_numbers(&cfg).unwrap();
        println!("  h11 ∈ {}, h21 ∈ {}, candidates {:?}", h.h11, h.h21, h.candidates);
    }
}
