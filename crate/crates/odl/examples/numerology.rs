//! The integers N(k, l, d, r): the rank locus is crepant exactly when N = d.

use odl::symfun::n_value;

fn main() {
    for (k, l, d, r) in [(3, 0, 10, 6), (1, 2, 10, 4), (1, 2, 6, 1), (2, 1, 8, 3)] {
        match n_value(k, l, d, r) {
            Ok(n) => println!("N({k},{l},{d},{r}) = {n}"),
            Err(e) => println!("N({k},{l},{d},{r}): {e}"),
        }
    }
}
