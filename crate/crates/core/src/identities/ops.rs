//! Shorthands for the operators and families appearing in the catalog.
//! Negative indices give zero, matching `e_{-k} = h_{-k} = 0`.

use crate::error::Result;
use crate::macdonald::{enk_unchecked, modified_h};
use crate::operators::{delta, theta, theta_tilde};
use crate::qfield::{choose2, qbinom, qint, qint_in, Rat, Var};
use crate::symfunc::{e, eval_scalar, h, perp, plethysm, star_of, Alphabet, Partition, SymFunc};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn zero() -> SymFunc {
    SymFunc::zero()
}

pub fn qp(k: i64) -> Rat {
    Rat::var_pow(Var::Q, k)
}

pub fn tp(k: i64) -> Rat {
    Rat::var_pow(Var::T, k)
}

pub fn sign(k: i64) -> Rat {
    if k.rem_euclid(2) == 0 {
        Rat::one()
    } else {
        Rat::int(-1)
    }
}

pub fn qb(n: i64, k: i64) -> Rat {
    qbinom(n, k)
}

pub fn c2(n: i64) -> i64 {
    choose2(n)
}

/// `M = (1-q)(1-t)`.
pub fn m() -> Rat {
    Alphabet::m()
}

pub fn lin(items: Vec<(Rat, SymFunc)>) -> SymFunc {
    SymFunc::lincomb(items.iter().map(|(c, f)| (c.clone(), f)))
}

pub fn mac(mu: &Partition) -> Result<SymFunc> {
    modified_h(mu)
}

/// `H̃_{(n)}`, with `H̃_{(0)} = 1`.
pub fn mac_row(n: i64) -> Result<SymFunc> {
    if n < 0 {
        return Ok(zero());
    }
    modified_h(&Partition::row(n as u32))
}

pub fn hperp(j: i64, f: &SymFunc) -> SymFunc {
    if j < 0 {
        zero()
    } else {
        perp(&h(j), f)
    }
}

pub fn eperp(j: i64, f: &SymFunc) -> SymFunc {
    if j < 0 {
        zero()
    } else {
        perp(&e(j), f)
    }
}

pub fn th_e(k: i64, f: &SymFunc) -> Result<SymFunc> {
    if k < 0 {
        return Ok(zero());
    }
    theta(&e(k), f)
}

pub fn th_h(k: i64, f: &SymFunc) -> Result<SymFunc> {
    if k < 0 {
        return Ok(zero());
    }
    theta(&h(k), f)
}

pub fn d_e(k: i64, f: &SymFunc) -> Result<SymFunc> {
    if k < 0 {
        return Ok(zero());
    }
    delta(&e(k), f, false)
}

pub fn d_h(k: i64, f: &SymFunc) -> Result<SymFunc> {
    if k < 0 {
        return Ok(zero());
    }
    delta(&h(k), f, false)
}

/// `Δ'_{e_k}`.
pub fn dp_e(k: i64, f: &SymFunc) -> Result<SymFunc> {
    if k < 0 {
        return Ok(zero());
    }
    delta(&e(k), f, true)
}

pub fn estar(n: i64) -> SymFunc {
    star_of(&e(n))
}

pub fn hstar(n: i64) -> SymFunc {
    star_of(&h(n))
}

/// `e_m[X [k]_q]`.
pub fn e_qint(m: i64, k: i64) -> SymFunc {
    plethysm(&e(m), &Alphabet::x_times(qint(k)))
}

/// `α_n p_n` with `α_n = (-1)^{n-1} / ([n]_q [n]_t)`.
pub fn alpha_p(n: i64) -> SymFunc {
    if n < 1 {
        return zero();
    }
    let c = sign(n - 1) / (qint(n) * qint_in(Var::T, n));
    SymFunc::p_n(n as u32).scale(&c)
}

/// `E_{n,k}`, zero for negative indices.
pub fn enk(n: i64, k: i64) -> SymFunc {
    if n < 0 || k < 0 {
        return zero();
    }
    enk_unchecked(n as u32, k as u32)
}

/// `f[a]` for a scalar `a`.
pub fn at(f: &SymFunc, a: Rat) -> Rat {
    eval_scalar(f, &Alphabet::scalar(a))
}

/// `f[c X]`.
pub fn at_x(f: &SymFunc, c: Rat) -> SymFunc {
    plethysm(f, &Alphabet::x_times(c))
}

/// Partitions of every size in `lo..=hi`.
pub fn partitions(lo: u32, hi: u32) -> Vec<Partition> {
    (lo..=hi).flat_map(Partition::all).collect()
}

/// An input on which operator identities are evaluated.
#[derive(Clone, Debug)]
pub enum Operand {
    Mac(Partition),
    Elementary(u32),
    Random(u32),
}

impl Operand {
    pub fn label(&self) -> String {
        match self {
            Operand::Mac(mu) => format!("F=H{mu}"),
            Operand::Elementary(d) => format!("F=e{d}"),
            Operand::Random(d) => format!("F=rand{d}"),
        }
    }

    pub fn get(&self) -> Result<SymFunc> {
        Ok(match self {
            Operand::Mac(mu) => modified_h(mu)?,
            Operand::Elementary(d) => e(*d as i64),
            Operand::Random(d) => random_power_sum(*d, 0x5eed ^ *d as u64),
        })
    }
}

/// A spanning set of `Λ^{(d)}` (every `H̃_μ`, `μ ⊢ d`) followed by the spot
/// checks `e_d` and a seeded random combination of power sums.
pub fn operands(d: u32) -> Vec<Operand> {
    let mut out: Vec<Operand> = Partition::all(d).into_iter().map(Operand::Mac).collect();
    if d >= 2 {
        out.push(Operand::Elementary(d));
        out.push(Operand::Random(d));
    }
    out
}

/// `Σ_λ c_λ p_λ` over `λ ⊢ d` with seeded integer coefficients in `[-3, 3]`.
pub fn random_power_sum(d: u32, seed: u64) -> SymFunc {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let items: Vec<(Rat, SymFunc)> =
        Partition::all(d).iter().map(|l| (Rat::int(rng.gen_range(-3..=3)), SymFunc::p(l))).collect();
    lin(items)
}

/// The Schur basis of `Λ^{(d)}`, labelled.
pub fn schurs(d: u32) -> Vec<(Partition, SymFunc)> {
    Partition::all(d).into_iter().map(|l| {
        let f = crate::symfunc::s(&l);
        (l, f)
    }).collect()
}

pub fn total(items: Vec<SymFunc>) -> SymFunc {
    SymFunc::sum(items.iter())
}

/// Coefficient of `z^b` in `Θ̃(z,v) F`.
pub fn tt(b: i64, f: &SymFunc) -> Result<SymFunc> {
    if b < 0 {
        return Ok(zero());
    }
    theta_tilde(f, b as u32, false)
}

/// Coefficient of `z^a` in `Θ̃(z,v)^{-1} F`.
pub fn tt_inv(a: i64, f: &SymFunc) -> Result<SymFunc> {
    if a < 0 {
        return Ok(zero());
    }
    theta_tilde(f, a as u32, true)
}

/// `h_n[c/M]`, the coefficient of `(uz)^n` in `Exp[uzc/M]`.
pub fn exp_coeff(n: i64, c: &Rat) -> Rat {
    if n < 0 {
        return Rat::zero();
    }
    at(&h(n), c / &m())
}

/// `F|_{v=1}`.
pub fn at_v1(f: &SymFunc) -> Result<SymFunc> {
    f.eval_var(Var::V, 1)
}
