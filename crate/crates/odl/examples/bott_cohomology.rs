//! Borel–Weil–Bott on Grassmannians, and cohomology on a complete
//! intersection through its Koszul complex.

use odl::bott::{
    bott_cohomology, cohomology_on_ambient, format_weight, module_dim, parse_bundle, parse_flag, HomogeneousAmbient,
};

fn main() {
    let p5 = parse_flag("P5").unwrap();
    for w in [vec![-6, 0, 0, 0, 0, 0], vec![-3, 0, 0, 0, 0, 0], vec![2, 0, 0, 0, 0, 0]] {
        match bott_cohomology(&p5, &w).unwrap() {
            Some((deg, l)) => println!("P5 ({}): H^{deg} of dimension {}", format_weight(&p5, &w), module_dim(&p5, &l)),
            None => println!("P5 ({}): acyclic", format_weight(&p5, &w)),
        }
    }

    let gr = parse_flag("Gr(2,5)").unwrap();
    let w = vec![1, 1, 0, 0, 0];
    let (deg, l) = bott_cohomology(&gr, &w).unwrap().unwrap();
    println!("Gr(2,5) ({}): H^{deg} of dimension {}", format_weight(&gr, &w), module_dim(&gr, &l));

    // the quintic threefold
    let amb = HomogeneousAmbient::new(parse_flag("P4").unwrap(), vec![parse_bundle("O(5)").unwrap()]).unwrap();
    let t = cohomology_on_ambient(&amb, &parse_bundle("O").unwrap()).unwrap();
    println!("quintic: h^i(O) candidates {:?}", t.candidates());
}
