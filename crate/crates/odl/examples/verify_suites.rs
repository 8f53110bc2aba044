//! Runs every built-in verification suite and prints a summary line each.

use odl::verify::{run_suite, SUITES};

fn main() {
    let mut failed = 0;
    for name in SUITES {
        let r = run_suite(name).unwrap();
        failed += r.failed;
        println!("{:12} {:3} passed {:2} failed {:2} skipped", r.suite, r.passed, r.failed, r.skipped);
    }
    std::process::exit(if failed == 0 { 0 } else { 1 });
}
