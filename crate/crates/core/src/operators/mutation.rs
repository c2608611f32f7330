//! Deliberate defects used to confirm that the identity checks are not vacuous.

use std::sync::atomic::{AtomicU8, Ordering};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mutation {
    None,
    /// `∇` uses eigenvalue `T_μ` instead of `(-1)^{|μ|} T_μ`.
    FlipNablaSign,
    /// The `v → 1` limit of `Θ̃` loses the factor `(1-v)` of the corner cell.
    DropOneMinusV,
}

static ACTIVE: AtomicU8 = AtomicU8::new(0);

/// Activates a mutation process-wide. Intended for tests only.
pub fn set_mutation(m: Mutation) {
    let code = match m {
        Mutation::None => 0,
        Mutation::FlipNablaSign => 1,
        Mutation::DropOneMinusV => 2,
    };
    ACTIVE.store(code, Ordering::SeqCst);
}

pub fn mutation() -> Mutation {
    match ACTIVE.load(Ordering::SeqCst) {
        1 => Mutation::FlipNablaSign,
        2 => Mutation::DropOneMinusV,
        _ => Mutation::None,
    }
}
