//! Fano fourfolds from three-forms and from nilpotent orbits.

use odl::forms::catalog::table6_forms;
use odl::nilpotent::catalog::table6_nilpotent;
use odl::report::LocusReport;

fn show(r: &LocusReport) {
    let s = |x: Option<&odl::Rat>| x.map_or("-".into(), |v| v.to_string());
    println!(
        "{:36} {:18} (-K)^4 = {:3}  χ(Ω¹) = {:4}  χ(Ω²) = {:4}  h0(-K) = {}",
        r.label,
        r.condition,
        s(r.anticanonical_degree.as_ref()),
        s(r.chi_omega.get(1)),
        s(r.chi_omega.get(2)),
        s(r.h0_anticanonical.as_ref())
    );
}

fn main() {
    for row in table6_forms() {
        show(&odl::forms::invariants(row.config.as_ref().unwrap()).unwrap());
    }
    for row in table6_nilpotent() {
        show(&odl::nilpotent::invariants(row.config.as_ref().unwrap()).unwrap());
    }
}
