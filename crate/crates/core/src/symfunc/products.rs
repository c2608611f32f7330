//! Scalar products and skewing.

use super::partition::Partition;
use super::sf::SymFunc;
use crate::qfield::{Int, Poly, Rat, Var};
use std::collections::BTreeMap;

/// `∏ (1 - q^{λ_i})(1 - t^{λ_i})`, i.e. `p_λ[MX] / p_λ`.
pub fn m_weight(l: &Partition) -> Poly {
    let mut acc = Poly::one();
    for k in l.parts() {
        let k = k as u16;
        acc = acc.mul(&Poly::one().sub(&Poly::var_pow(Var::Q, k)));
        acc = acc.mul(&Poly::one().sub(&Poly::var_pow(Var::T, k)));
    }
    acc
}

fn diag_pairing(f: &SymFunc, g: &SymFunc, w: impl Fn(&Partition) -> Rat) -> Rat {
    let (small, big) = if f.len() <= g.len() { (f, g) } else { (g, f) };
    let v: Vec<Rat> = small
        .terms()
        .filter_map(|(l, a)| {
            let b = big.coeff(l);
            (!b.is_zero()).then(|| &(a * &b) * &w(l))
        })
        .collect();
    Rat::sum(&v)
}

/// Hall scalar product, `⟨p_λ, p_μ⟩ = z_λ δ`.
pub fn hall(f: &SymFunc, g: &SymFunc) -> Rat {
    diag_pairing(f, g, |l| Rat::from_int(l.z()))
}

/// Star weight `(-1)^{|λ|-ℓ} z_λ ∏ (1-q^{λ_i})(1-t^{λ_i})`.
pub fn star_weight(l: &Partition) -> Rat {
    Rat::from_poly(m_weight(l).scale(&l.z().mul(&Int::from(l.sign()))))
}

pub fn star(f: &SymFunc, g: &SymFunc) -> Rat {
    diag_pairing(f, g, star_weight)
}

/// `⟨f[-MX], g⟩`.
pub fn star_mod(f: &SymFunc, g: &SymFunc) -> Rat {
    diag_pairing(f, g, |l| {
        let s = if l.len() % 2 == 0 { 1 } else { -1 };
        Rat::from_poly(m_weight(l).scale(&l.z().mul(&Int::from(s))))
    })
}

/// `f^⊥ g`, with `p_k^⊥ = k ∂/∂p_k`.
pub fn perp(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let mut acc: BTreeMap<Partition, Vec<Rat>> = BTreeMap::new();
    for (l, a) in f.terms() {
        let ml = l.multiplicities();
        for (m, b) in g.terms() {
            let Some(rest) = m.minus(l) else { continue };
            let mm = m.multiplicities();
            let mut c = Int::ONE;
            for (k, &cnt) in ml.iter().enumerate().skip(1) {
                let have = mm[k];
                for i in 0..cnt {
                    c = c.mul(&Int::from(k as i64 * (have - i) as i64));
                }
            }
            acc.entry(rest).or_default().push((a * b).mul_int(&c));
        }
    }
    SymFunc::from_groups(acc)
}

#[cfg(test)]
mod tests {
    use super::super::transition::{e, h, s};
    use super::*;

    fn pt(x: &[u32]) -> Partition {
        Partition::new(x)
    }

    #[test]
    fn hall_examples() {
        assert_eq!(hall(&SymFunc::p_n(2), &SymFunc::p_n(2)), Rat::int(2));
        assert_eq!(hall(&SymFunc::p_n(2), &SymFunc::p(&pt(&[1, 1]))), Rat::zero());
        assert_eq!(hall(&s(&pt(&[2, 1])), &s(&pt(&[2, 1]))), Rat::one());
    }

    #[test]
    fn star_examples() {
        let m = (Rat::one() - Rat::q()) * (Rat::one() - Rat::t());
        assert_eq!(star(&SymFunc::p_n(1), &SymFunc::p_n(1)), m);
        assert_eq!(star(&SymFunc::p_n(1), &SymFunc::p_n(2)), Rat::zero());
    }

    #[test]
    fn perp_examples() {
        assert_eq!(perp(&h(1), &SymFunc::p_n(1)), SymFunc::one());
        for r in 2..=4 {
            for n in 1..=4 {
                let expect = if r == n { SymFunc::one() } else { SymFunc::zero() };
                assert_eq!(perp(&h(r), &SymFunc::p_n(n as u32)), expect);
            }
        }
        assert_eq!(perp(&h(1), &e(3)), e(2));
    }

    #[test]
    fn perp_is_hall_adjoint() {
        let f = s(&pt(&[2, 1]));
        let g = e(2).mul(&h(3));
        let k = h(2);
        for l in Partition::all(3) {
            let x = s(&l);
            assert_eq!(hall(&perp(&k, &g), &x), hall(&g, &k.mul(&x)));
        }
        assert_eq!(hall(&perp(&f, &g), &h(2)), hall(&g, &f.mul(&h(2))));
    }
}
