//! Exact rational functions in q and t: q-integers, q-binomials and substitutions.

use qtsym::qfield::{parse_rat, qbinom, qint, qrising, Rat};

fn main() {
    for n in 0..=4 {
        println!("[{n}]_q = {}", qint(n));
    }
    println!("[5 choose 2]_q = {}", qbinom(5, 2));
    println!("(q;q)_3 = {}", qrising(&Rat::q(), 3));

    let m = parse_rat("(1-q)*(1-t)").unwrap();
    let f = parse_rat("(1-q^3)/(1-q)").unwrap();
    println!("M = {m}");
    println!("(1-q^3)/(1-q) reduces to {f}");
    println!("1/M = {}", Rat::one() / m.clone());
    println!("M with q,t -> 1/q,1/t: {}", m.invert_qt());
    println!("M with every variable squared: {}", m.substitute_powers(2));
}
