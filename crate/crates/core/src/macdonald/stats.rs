//! Partition statistics `B, D, T, Π, w, n`.

use crate::qfield::{Int, Mono, Poly, Rat, Var};
use crate::symfunc::Partition;

/// Statistics of a partition `μ` used throughout the operator calculus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionStats {
    /// `B_μ = Σ q^{a'} t^{l'}`.
    pub b: Rat,
    /// `D_μ = M B_μ - 1`.
    pub d: Rat,
    /// `T_μ = ∏ q^{a'} t^{l'}`.
    pub t: Rat,
    /// `Π_μ = ∏_{c ≠ (0,0)} (1 - q^{a'} t^{l'})`.
    pub pi: Rat,
    /// `w_μ = ∏ (q^a - t^{l+1})(t^l - q^{a+1})`.
    pub w: Rat,
    /// `n(μ) = Σ (i-1) μ_i`.
    pub n: u32,
}

fn qt(a: u32, b: u32) -> Poly {
    let mut e = [0u16; crate::qfield::NVARS];
    e[Var::Q.idx()] = a as u16;
    e[Var::T.idx()] = b as u16;
    Poly::monomial(Mono::from_exps(e), Int::ONE)
}

/// Weights `q^{a'} t^{l'}` of the cells.
pub fn cell_weights(mu: &Partition) -> Vec<Poly> {
    mu.cells().map(|(i, j)| qt(mu.coarm(i, j), mu.coleg(i, j))).collect()
}

pub fn stats(mu: &Partition) -> PartitionStats {
    let weights = cell_weights(mu);
    let b = weights.iter().fold(Poly::zero(), |a, w| a.add(w));
    let t = weights.iter().fold(Poly::one(), |a, w| a.mul(w));
    let pi = weights.iter().filter(|w| !w.is_one()).fold(Poly::one(), |a, w| a.mul(&Poly::one().sub(w)));
    let mut w = Poly::one();
    for (i, j) in mu.cells() {
        let a = mu.arm(i, j);
        let l = mu.leg(i, j);
        w = w.mul(&qt(a, 0).sub(&qt(0, l + 1)));
        w = w.mul(&qt(0, l).sub(&qt(a + 1, 0)));
    }
    let m = Poly::one().sub(&qt(1, 0)).mul(&Poly::one().sub(&qt(0, 1)));
    let d = m.mul(&b).sub(&Poly::one());
    PartitionStats {
        b: Rat::from_poly(b),
        d: Rat::from_poly(d),
        t: Rat::from_poly(t),
        pi: Rat::from_poly(pi),
        w: Rat::from_poly(w),
        n: mu.n_stat(),
    }
}

/// `∏_{cells} (1 - v q^{a'} t^{l'})`.
pub fn one_minus_v_product(mu: &Partition) -> Rat {
    let v = Poly::var(Var::V);
    let p = cell_weights(mu).iter().fold(Poly::one(), |a, w| a.mul(&Poly::one().sub(&v.mul(w))));
    Rat::from_poly(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qfield::{qint, choose2};

    #[test]
    fn row_shapes() {
        for n in 1..=6u32 {
            let s = stats(&Partition::row(n));
            assert_eq!(s.b, qint(n as i64));
            assert_eq!(s.t, Rat::var_pow(Var::Q, choose2(n as i64)));
        }
    }

    #[test]
    fn small_cases() {
        let s = stats(&Partition::new(&[2, 1]));
        assert_eq!(s.b, Rat::one() + Rat::q() + Rat::t());
        let m = (Rat::one() - Rat::q()) * (Rat::one() - Rat::t());
        assert_eq!(stats(&Partition::new(&[1])).w, m);
        let e = stats(&Partition::empty());
        assert_eq!((e.b, e.t, e.pi, e.w, e.d), (Rat::zero(), Rat::one(), Rat::one(), Rat::one(), Rat::int(-1)));
    }
}
