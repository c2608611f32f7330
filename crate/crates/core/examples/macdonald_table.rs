//! Modified Macdonald polynomials in the Schur basis, with their box statistics.

use qtsym::macdonald::{modified_h, stats};
use qtsym::symfunc::{render_basis, Basis, Partition};

fn main() {
    let n: u32 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    for mu in Partition::all(n) {
        let st = stats(&mu);
        println!("H[{mu}]   B = {}   T = {}", st.b, st.t);
        println!("{}\n", render_basis(&modified_h(&mu).unwrap(), Basis::S));
    }
}
