//! Symmetric functions: basis changes, scalar products and plethystic substitution.

use qtsym::qfield::{qint, Rat};
use qtsym::symfunc::{e, h, hall, perp, plethysm, render_basis, s, star, Alphabet, Basis, Partition};

fn main() {
    let f = e(2).mul(&h(1));
    println!("e2 h1 in the Schur basis:\n{}\n", render_basis(&f, Basis::S));
    println!("h2^perp e2 h1 = {}", render_basis(&perp(&h(2), &f), Basis::S));
    println!("<s21, s21> = {}", hall(&s(&Partition::new(&[2, 1])), &s(&Partition::new(&[2, 1]))));
    println!("<e2, e2>_* = {}\n", star(&e(2), &e(2)));

    let g = plethysm(&h(2), &Alphabet::scalar(qint(3)));
    println!("h2[[3]_q] = {}", render_basis(&g, Basis::S));
    let one_minus_q = Alphabet::x_times(Rat::one() - Rat::q());
    println!("e2[X(1-q)] in the monomial basis:\n{}", render_basis(&plethysm(&e(2), &one_minus_q), Basis::M));
}
