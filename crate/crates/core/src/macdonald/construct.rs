//! Constructions of `H̃_μ`.
//!
//! The primary route orthogonalizes the monomial basis under the `(q,t)` Hall
//! form to get `P_μ`, rescales to the integral form `J_μ`, and then applies
//! `H̃_μ = t^{n(μ)} J_μ[X/(1-1/t); q, 1/t]`. A second, independent route
//! solves the two triangularity conditions plus the normalization directly.

use crate::qfield::{Mono, Poly, Rat, Var};
use crate::symfunc::{m as mono_basis, tables, Partition, SymFunc};
use std::collections::BTreeMap;

fn one_minus(v: Var, k: u16) -> Poly {
    Poly::one().sub(&Poly::var_pow(v, k))
}

/// `z_λ ∏ (1-q^{λ_i})/(1-t^{λ_i})`.
fn qt_weight(l: &Partition) -> Rat {
    let mut num = Poly::constant(l.z());
    let mut den = Poly::one();
    for k in l.parts() {
        num = num.mul(&one_minus(Var::Q, k as u16));
        den = den.mul(&one_minus(Var::T, k as u16));
    }
    Rat::new(num, den).unwrap()
}

fn qt_pairing(f: &SymFunc, g: &SymFunc, w: &BTreeMap<Partition, Rat>) -> Rat {
    let v: Vec<Rat> = f
        .terms()
        .filter_map(|(l, a)| {
            let b = g.coeff(l);
            (!b.is_zero()).then(|| &(a * &b) * &w[l])
        })
        .collect();
    Rat::sum(&v)
}

/// Macdonald `P_μ` for all `μ ⊢ n`, orthogonalizing in the given order
/// (which must be a linear extension of dominance, lowest first).
pub fn macdonald_p_all(order: &[Partition]) -> BTreeMap<Partition, SymFunc> {
    let n = order.first().map(|p| p.size()).unwrap_or(0);
    let w: BTreeMap<Partition, Rat> = Partition::all(n).into_iter().map(|l| {
        let x = qt_weight(&l);
        (l, x)
    }).collect();
    let mut done: Vec<(Partition, SymFunc, Rat)> = Vec::new();
    for mu in order {
        let m = mono_basis(mu);
        let mut items: Vec<(Rat, &SymFunc)> = vec![(Rat::one(), &m)];
        let coeffs: Vec<Rat> = done
            .iter()
            .map(|(nu, p, norm)| if mu.dominates(nu) { (qt_pairing(&m, p, &w) / norm.clone()).neg() } else { Rat::zero() })
            .collect();
        for ((_, p, _), c) in done.iter().zip(coeffs) {
            items.push((c, p));
        }
        let p = SymFunc::lincomb(items);
        let norm = qt_pairing(&p, &p, &w);
        done.push((mu.clone(), p, norm));
    }
    done.into_iter().map(|(mu, p, _)| (mu, p)).collect()
}

/// `c_μ = ∏_{cells} (1 - q^a t^{l+1})`, so that `J_μ = c_μ P_μ`.
fn integral_factor(mu: &Partition) -> Poly {
    let mut acc = Poly::one();
    for (i, j) in mu.cells() {
        let mut e = [0u16; crate::qfield::NVARS];
        e[Var::Q.idx()] = mu.arm(i, j) as u16;
        e[Var::T.idx()] = (mu.leg(i, j) + 1) as u16;
        acc = acc.mul(&Poly::one().sub(&Poly::monomial(Mono::from_exps(e), crate::qfield::Int::ONE)));
    }
    acc
}

/// `H̃_μ` from `P_μ`.
pub fn h_from_p(mu: &Partition, p: &SymFunc) -> SymFunc {
    let c = Rat::from_poly(integral_factor(mu));
    let tn = Rat::var_pow(Var::T, mu.n_stat() as i64);
    p.map_coeffs(|l, a| {
        let mut den = Poly::one();
        for k in l.parts() {
            den = den.mul(&one_minus(Var::T, k as u16));
        }
        let x = &(a * &c) / &Rat::from_poly(den);
        &x.invert_vars(&[Var::T]) * &tn
    })
}

/// Partitions of `n` in the default processing order: lexicographic, lowest first.
pub fn default_order(n: u32) -> Vec<Partition> {
    Partition::all(n)
}

/// A second linear extension of dominance: conjugates in decreasing lexicographic order.
pub fn alternate_order(n: u32) -> Vec<Partition> {
    let mut v = Partition::all(n);
    v.sort_by_key(|a| std::cmp::Reverse(a.conjugate()));
    v
}

/// All `H̃_μ`, `μ ⊢ n`, via orthogonalization in the given order.
pub fn modified_h_gram_schmidt(order: &[Partition]) -> BTreeMap<Partition, SymFunc> {
    macdonald_p_all(order).into_iter().map(|(mu, p)| {
        let h = h_from_p(&mu, &p);
        (mu, h)
    }).collect()
}

/// `⟨s_κ[X(1-x)], s_λ⟩ = Σ_ρ χ^κ_ρ χ^λ_ρ ∏(1-x^{ρ_i}) / z_ρ`.
fn schur_matrix(n: u32, x: Var) -> Vec<Vec<Rat>> {
    let t = tables(n);
    let parts = &t.parts;
    let wts: Vec<Rat> = parts
        .iter()
        .map(|r| {
            let p = r.parts().fold(Poly::one(), |a, k| a.mul(&one_minus(x, k as u16)));
            Rat::from_poly(p) / Rat::from_int(r.z())
        })
        .collect();
    parts
        .iter()
        .map(|l| {
            parts
                .iter()
                .map(|k| {
                    let v: Vec<Rat> = parts
                        .iter()
                        .enumerate()
                        .map(|(ri, r)| wts[ri].mul_int(&crate::qfield::Int::from(t.chi(k, r) * t.chi(l, r))))
                        .collect();
                    Rat::sum(&v)
                })
                .collect()
        })
        .collect()
}

/// Solves `A c = b` by Gaussian elimination; rows may be redundant but must be consistent.
fn solve(mut rows: Vec<(Vec<Rat>, Rat)>, nvars: usize) -> Option<Vec<Rat>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..nvars {
        let Some(piv) = (r..rows.len()).find(|&i| !rows[i].0[col].is_zero()) else { continue };
        rows.swap(r, piv);
        let inv = rows[r].0[col].inv().unwrap();
        let (row, rhs) = rows[r].clone();
        let row: Vec<Rat> = row.iter().map(|x| x * &inv).collect();
        let rhs = &rhs * &inv;
        rows[r] = (row.clone(), rhs.clone());
        for (i, (other, b)) in rows.iter_mut().enumerate() {
            if i != r && !other[col].is_zero() {
                let f = other[col].clone();
                for (x, y) in other.iter_mut().zip(&row) {
                    *x = &*x - &(&f * y);
                }
                *b = &*b - &(&f * &rhs);
            }
        }
        pivots.push(col);
        r += 1;
    }
    if pivots.len() < nvars || rows[r..].iter().any(|(_, b)| !b.is_zero()) {
        return None;
    }
    Some((0..nvars).map(|i| rows[i].1.clone()).collect())
}

/// `H̃_μ` from the triangularity axioms:
/// `H̃_μ[X(1-q)] ∈ span{s_λ : λ ≥ μ}`, `H̃_μ[X(1-t)] ∈ span{s_λ : λ ≥ μ'}`, `⟨H̃_μ, s_(n)⟩ = 1`.
pub fn modified_h_axioms(mu: &Partition) -> Option<SymFunc> {
    let n = mu.size();
    if n == 0 {
        return Some(SymFunc::one());
    }
    let t = tables(n);
    let parts = t.parts.clone();
    let aq = schur_matrix(n, Var::Q);
    let at = schur_matrix(n, Var::T);
    let conj = mu.conjugate();
    let mut rows = Vec::new();
    for (li, l) in parts.iter().enumerate() {
        if !l.dominates(mu) {
            rows.push((aq[li].clone(), Rat::zero()));
        }
        if !l.dominates(&conj) {
            rows.push((at[li].clone(), Rat::zero()));
        }
    }
    let top = parts.iter().position(|l| *l == Partition::row(n)).unwrap();
    let mut norm = vec![Rat::zero(); parts.len()];
    norm[top] = Rat::one();
    rows.push((norm, Rat::one()));
    let c = solve(rows, parts.len())?;
    let coeffs: BTreeMap<Partition, Rat> = parts.into_iter().zip(c).collect();
    Some(crate::symfunc::from_basis(crate::symfunc::Basis::S, &coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::{s, to_schur};

    #[test]
    fn degree_two() {
        let hs = modified_h_gram_schmidt(&default_order(2));
        let h2 = &hs[&Partition::row(2)];
        let expect = s(&Partition::row(2)).add(&s(&Partition::column(2)).scale(&Rat::q()));
        assert_eq!(h2, &expect);
        assert_eq!(hs[&Partition::row(1).union(&Partition::row(1))], s(&Partition::row(2)).add(&s(&Partition::column(2)).scale(&Rat::t())));
    }

    #[test]
    fn axioms_agree_degree_three() {
        let hs = modified_h_gram_schmidt(&default_order(3));
        for (mu, h) in &hs {
            assert_eq!(&modified_h_axioms(mu).unwrap(), h, "{mu}");
        }
        let sc = to_schur(&hs[&Partition::new(&[2, 1])]);
        assert_eq!(sc[&Partition::new(&[2, 1])], Rat::q() + Rat::t());
    }
}
