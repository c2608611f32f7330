//! Operators diagonal on the modified Macdonald basis, and `Θ_f`.

use super::mutation::{mutation, Mutation};
use crate::error::{Error, Result};
use crate::macdonald::{apply_diagonal, one_minus_v_product, stats};
use crate::qfield::{Poly, Rat, Var};
use crate::symfunc::{eval_scalar, star_of, Alphabet, Partition, SymFunc};

fn invert(x: Rat, what: &str, mu: &Partition) -> Result<Rat> {
    x.inv().map_err(|_| Error::NotInvertible(format!("{what} has zero eigenvalue on H[{}]", mu.join(","))))
}

/// `(-1)^{|μ|} T_μ`.
pub fn nabla_eigenvalue(mu: &Partition) -> Rat {
    let t = stats(mu).t;
    if mutation() != Mutation::FlipNablaSign && mu.size() % 2 == 1 {
        t.neg()
    } else {
        t
    }
}

pub fn nabla(f: &SymFunc, inverse: bool) -> Result<SymFunc> {
    apply_diagonal(f, |mu| {
        let x = nabla_eigenvalue(mu);
        if inverse {
            invert(x, "nabla", mu)
        } else {
            Ok(x)
        }
    })
}

/// `f[B_μ]`, or `f[B_μ - 1]` when primed.
pub fn delta_eigenvalue(f: &SymFunc, mu: &Partition, primed: bool) -> Rat {
    let mut b = stats(mu).b;
    if primed {
        b = b - Rat::one();
    }
    eval_scalar(f, &Alphabet::scalar(b))
}

/// `Δ_f F` or `Δ'_f F`.
pub fn delta(f: &SymFunc, big_f: &SymFunc, primed: bool) -> Result<SymFunc> {
    apply_diagonal(big_f, |mu| Ok(delta_eigenvalue(f, mu, primed)))
}

/// `Δ_f^{-1} F`; fails if some eigenvalue on the support of `F` vanishes.
pub fn delta_inverse(f: &SymFunc, big_f: &SymFunc, primed: bool) -> Result<SymFunc> {
    apply_diagonal(big_f, |mu| invert(delta_eigenvalue(f, mu, primed), "delta", mu))
}

/// `Π F`, or `Π^{-1} F` (which requires `F` without constant term).
pub fn pi_op(big_f: &SymFunc, inverse: bool) -> Result<SymFunc> {
    if inverse && !big_f.constant_term().is_zero() {
        return Err(Error::NotInvertible("inverse of Pi applied to a function with a constant term".into()));
    }
    apply_diagonal(big_f, |mu| {
        let x = stats(mu).pi;
        if inverse {
            invert(x, "Pi", mu)
        } else {
            Ok(x)
        }
    })
}

/// `Θ_f F`, extended linearly over the constant parts of `f` and `F`.
pub fn theta(f: &SymFunc, big_f: &SymFunc) -> Result<SymFunc> {
    let f0 = f.constant_term();
    let f_plus = f.sub(&SymFunc::scalar(f0.clone()));
    let big_plus = big_f.sub(&SymFunc::scalar(big_f.constant_term()));
    let mut out = big_f.scale(&f0);
    if !f_plus.is_zero() && !big_plus.is_zero() {
        let inner = star_of(&f_plus).mul(&pi_op(&big_plus, true)?);
        out = out.add(&pi_op(&inner, false)?);
    }
    Ok(out)
}

/// `∏_{c ∈ μ} (1 - v q^{a'} t^{l'})`; the mutation hook drops the corner factor.
fn delta_v_eigenvalue(mu: &Partition) -> Rat {
    let full = one_minus_v_product(mu);
    if mutation() == Mutation::DropOneMinusV && !mu.is_empty() {
        let corner = Rat::from_poly(Poly::one().sub(&Poly::var(Var::V)));
        return full / corner;
    }
    full
}

/// `Δ_v F = Σ (-v)^n Δ_{e_n} F`, or `Δ_v^{-1} F = Σ v^n Δ_{h_n} F`.
pub fn delta_v_series(big_f: &SymFunc, inverse: bool) -> Result<SymFunc> {
    apply_diagonal(big_f, |mu| {
        let x = delta_v_eigenvalue(mu);
        if inverse {
            invert(x, "Delta_v", mu)
        } else {
            Ok(x)
        }
    })
}

/// Coefficient of `z^k` in `Θ̃(z,v) F = Δ_v P_{-z/M} Δ_v^{-1} F`, namely
/// `(-1)^k Δ_v e_k^* Δ_v^{-1} F`; with `inverse` the `P_{z/M}` variant `Δ_v h_k^* Δ_v^{-1} F`.
pub fn theta_tilde(big_f: &SymFunc, k: u32, inverse: bool) -> Result<SymFunc> {
    if k == 0 {
        return Ok(big_f.clone());
    }
    let g = if inverse {
        star_of(&crate::symfunc::h(k as i64))
    } else {
        let e = star_of(&crate::symfunc::e(k as i64));
        if k % 2 == 1 {
            e.neg()
        } else {
            e
        }
    };
    let inner = g.mul(&delta_v_series(big_f, true)?);
    delta_v_series(&inner, false)
}

/// The `v → 1` limit of [`theta_tilde`]; a residual pole at `v = 1` is an error.
pub fn theta_tilde_at_one(big_f: &SymFunc, k: u32, inverse: bool) -> Result<SymFunc> {
    theta_tilde(big_f, k, inverse)?
        .eval_var(Var::V, 1)
        .map_err(|e| Error::Pole(format!("theta_tilde at v=1 did not cancel: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::macdonald::modified_h;
    use crate::symfunc::{e, h};

    #[test]
    fn nabla_examples() {
        assert_eq!(nabla(&e(1), false).unwrap(), e(1).neg());
        let h2 = modified_h(&Partition::row(2)).unwrap();
        assert_eq!(nabla(&h2, false).unwrap(), h2.scale(&Rat::q()));
        assert_eq!(nabla(&nabla(&h2, false).unwrap(), true).unwrap(), h2);
    }

    #[test]
    fn theta_examples() {
        for n in 1..=3 {
            assert_eq!(theta(&e(n), &e(1)).unwrap(), e(n + 1));
        }
        assert!(theta(&e(2), &SymFunc::one()).unwrap().is_zero());
        assert_eq!(theta(&SymFunc::one(), &SymFunc::one()).unwrap(), SymFunc::one());
        assert!(pi_op(&SymFunc::one(), true).is_err());
    }

    #[test]
    fn theta_tilde_limit() {
        for k in 1..=2u32 {
            let lhs = theta_tilde_at_one(&e(1), k, false).unwrap();
            let expect = theta(&e(k as i64), &e(1)).unwrap();
            let expect = if k % 2 == 1 { expect.neg() } else { expect };
            assert_eq!(lhs, expect);
        }
        assert_eq!(delta_v_series(&delta_v_series(&h(2), true).unwrap(), false).unwrap(), h(2));
    }
}
