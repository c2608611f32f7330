//! Exact symmetric function algebra over `Q(q, t)`.
//!
//! Modified Macdonald polynomials, the diagonal operators built on them
//! (`nabla`, `Delta`, `Pi`, `Theta`) and a harness that verifies a catalog of
//! identities between them by exact computation.

pub mod error;
pub mod qfield;
pub mod symfunc;
pub mod macdonald;
pub mod operators;
pub mod identities;
pub mod cli;

pub use error::{Error, Result};
