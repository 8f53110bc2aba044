//! The fourfold cut out of P^9 by a general section of ∧³(2O(1) ⊕ 4O).

use odl::chow::projective_space;
use odl::forms::{fundamental_class, invariants, FormsLocus};

fn main() {
    let p9 = projective_space(9).unwrap();
    let e = p9.line(&[1]).unwrap().scale(2).add(&p9.trivial(4));
    let cfg = FormsLocus::new("P9, 2O(1)+4O", p9, e, None).unwrap();
    let fc = fundamental_class(&cfg).unwrap();
    println!("[D] = {}", fc.class);
    let r = invariants(&cfg).unwrap();
    println!("dim {}, condition {}", r.dim, r.condition);
    let chis: Vec<String> = r.chi_omega.iter().map(|c| c.to_string()).collect();
    println!("χ(Ω^p) = [{}]", chis.join(", "));
}
