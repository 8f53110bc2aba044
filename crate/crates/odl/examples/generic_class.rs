//! The universal class of the three-form locus over a generic base, its
//! Schur expansion, and the Todd polynomial integrating to χ(O) on ninefolds.

use odl::chow::generic_base;
use odl::forms::generic::{generic_checks, h_expansion, todd_polynomial};
use odl::forms::{closed_form_class, closed_form_schur_cofactor, FormsLocus};

fn main() {
    let g = generic_base(5, &[("E", 6)]).unwrap();
    let cfg = FormsLocus::new("generic", g.clone(), g.taut["E"].clone(), None).unwrap();
    let res = cfg.resolution().unwrap();
    let pushed = res.pe.pushforward(&res.qw.c_top().unwrap()).unwrap();
    println!("θ_*(c_top(∧³Q)) = {pushed}");
    println!("closed form      = {}", closed_form_class());
    println!("[D]/e1           = {}", closed_form_schur_cofactor());

    let (_, coeffs) = h_expansion();
    for (k, c) in coeffs.iter().enumerate() {
        println!("H^{}: {c}", 5 - k);
    }
    let (_, todd) = todd_polynomial();
    println!("td(D) pushed forward, degree 9:\n{todd}");

    let report = generic_checks();
    println!("all coefficients as printed: {}", report.passed());
}
