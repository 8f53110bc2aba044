//! Parses a configuration, computes the report and prints it as JSON.
//!
//! Pass a path, or run without arguments for a built-in example.

use odl::cli::{compute, to_json};

const DEFAULT: &str = r#"
[variety]
ambient = "Gr(2,5)"

[bundle]
E = "U + O"

[locus]
kind = "richardson"
orbit = 6
"#;

fn main() {
    let text = match std::env::args().nth(1) {
        Some(p) => std::fs::read_to_string(p).expect("readable config"),
        None => DEFAULT.to_string(),
    };
    match compute(&text, false) {
        Ok(r) => print!("{}", to_json(&r)),
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(e.exit_code());
        }
    }
}
