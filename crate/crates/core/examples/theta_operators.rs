//! Diagonal operators (nabla, Delta) and the Theta operators acting on symmetric functions.

use qtsym::operators::{delta, nabla, op_from_word, theta};
use qtsym::symfunc::{e, render_basis, Basis};

fn main() {
    for n in 1..=3 {
        println!("nabla e{n} =\n{}\n", render_basis(&nabla(&e(n), false).unwrap(), Basis::S));
    }
    println!("Delta'_e1 e3 =\n{}\n", render_basis(&delta(&e(1), &e(3), true).unwrap(), Basis::S));
    println!("Theta_e2 e1 = {}", theta(&e(2), &e(1)).unwrap());
    let word = op_from_word(&["skew(h1)", "theta(e2)", "nabla"]).unwrap();
    println!("{word} applied to e2 =\n{}", render_basis(&word.apply(&e(2)).unwrap(), Basis::S));
}
