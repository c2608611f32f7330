//! q-integers, q-binomials and q-Pochhammer symbols.

use super::int::Int;
use super::poly::{Mono, Poly, Var};
use super::rat::Rat;

fn one_minus_pow(v: Var, k: u16) -> Poly {
    Poly::one().sub(&Poly::var_pow(v, k))
}

/// `[n]_v = 1 + v + ... + v^(n-1)` for `n >= 0`.
pub fn qint_poly_in(v: Var, n: u32) -> Poly {
    Poly::from_terms((0..n).map(|i| (Mono::var(v, i as u16), Int::ONE)).collect())
}

/// `[n]_v = (1 - v^n)/(1 - v)` for any integer `n`.
pub fn qint_in(v: Var, n: i64) -> Rat {
    if n >= 0 {
        Rat::from_poly(qint_poly_in(v, n as u32))
    } else {
        -(Rat::var_pow(v, n) * Rat::from_poly(qint_poly_in(v, (-n) as u32)))
    }
}

pub fn qint(n: i64) -> Rat {
    qint_in(Var::Q, n)
}

/// Gaussian binomial in `v`; zero when `k < 0`, `n < 0` or `k > n`.
pub fn qbinom_poly_in(v: Var, n: i64, k: i64) -> Poly {
    if n < 0 || k < 0 || k > n {
        return Poly::zero();
    }
    let k = k.min(n - k);
    let mut acc = Poly::one();
    for i in 1..=k {
        acc = acc.mul(&one_minus_pow(v, (n - k + i) as u16));
        acc = acc.div_exact(&one_minus_pow(v, i as u16)).expect("q-binomial is a polynomial");
    }
    acc
}

pub fn qbinom_in(v: Var, n: i64, k: i64) -> Rat {
    Rat::from_poly(qbinom_poly_in(v, n, k))
}

pub fn qbinom(n: i64, k: i64) -> Rat {
    qbinom_in(Var::Q, n, k)
}

/// `[n]_q!`.
pub fn qfactorial(n: u32) -> Rat {
    let mut acc = Poly::one();
    for i in 1..=n {
        acc = acc.mul(&qint_poly_in(Var::Q, i));
    }
    Rat::from_poly(acc)
}

/// `(a; q)_n = (1 - a)(1 - a q) ... (1 - a q^(n-1))`.
pub fn qrising(a: &Rat, n: u32) -> Rat {
    let mut acc = Rat::one();
    for i in 0..n {
        acc = acc * (Rat::one() - a * &Rat::var_pow(Var::Q, i as i64));
    }
    acc
}

/// `binom(n, 2)` extended to all integers as `n(n-1)/2`.
pub fn choose2(n: i64) -> i64 {
    n * (n - 1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(qbinom(4, 2).to_string(), "1 + q + 2*q^2 + q^3 + q^4");
        assert_eq!(qint(3).to_string(), "1 + q + q^2");
        assert_eq!(qbinom(2, 3), Rat::zero());
        assert_eq!(qbinom(-1, 0), Rat::zero());
        assert_eq!(qbinom(0, 0), Rat::one());
        assert_eq!(qint(-2), -(Rat::var_pow(Var::Q, -2) * qint(2)));
    }

    #[test]
    fn factorial_ratio() {
        let r = qfactorial(5) / (qfactorial(2) * qfactorial(3));
        assert_eq!(r, qbinom(5, 2));
    }
}
