//! The ring of symmetric functions over the coefficient field.

mod alphabet;
mod partition;
mod products;
mod series;
mod sf;
mod tensor;
mod transition;

pub use alphabet::{eval_scalar, plethysm, star_of, translate, AlphaTerm, Alphabet};
pub use partition::Partition;
pub use products::{hall, m_weight, perp, star, star_mod, star_weight};
pub use series::{exp_pleth, mult_series};
pub use sf::SymFunc;
pub use tensor::SymTensor;
pub use transition::{basis_element, e, from_basis, h, m, p, render_basis, s, tables, to_basis, to_schur, Basis, DegreeTables};
