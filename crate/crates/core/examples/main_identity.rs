//! Verifies the generating-function identity for the Theta-tilde family at a chosen bound.

use qtsym::identities::{run_check_named, Bounds, Status};

fn main() {
    let n: u32 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    for name in ["main-identity", "theta-reciprocity", "tesler"] {
        let r = run_check_named(name, &Bounds::new(n, 8), 4).unwrap();
        println!("{name:20} {} ({} instances, {} ms)", r.status, r.instances, r.ms);
        if r.status != Status::Pass {
            println!("  counterexample: {:?}", r.counterexample);
        }
    }
}
