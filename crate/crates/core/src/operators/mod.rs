//! The operator calculus on symmetric functions.

mod diagonal;
mod expr;
mod mutation;
mod word;

pub use diagonal::{
    delta, delta_eigenvalue, delta_inverse, delta_v_series, nabla, nabla_eigenvalue, pi_op, theta, theta_tilde,
    theta_tilde_at_one,
};
pub use expr::{parse_alphabet, parse_sym};
pub use mutation::{mutation, set_mutation, Mutation};
pub use word::{op_from_word, parse_applied, Arg, Atom, LinearOp};
