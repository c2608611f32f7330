//! Exact arithmetic in `Q(q, t)` and its extensions by auxiliary variables.

mod gcd;
mod int;
mod parse;
mod poly;
mod qcomb;
mod rat;

pub use gcd::{content_in, gcd, gcd_many};
pub use int::Int;
pub use parse::parse_rat;
pub use poly::{Mono, Poly, Var, NVARS};
pub use qcomb::{choose2, qbinom, qbinom_in, qbinom_poly_in, qfactorial, qint, qint_in, qint_poly_in, qrising};
pub use rat::Rat;

/// Alias used throughout the crate for field elements.
pub type RatQT = Rat;
