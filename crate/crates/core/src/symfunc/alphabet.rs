//! Plethystic alphabets and plethysm.

use super::partition::Partition;
use super::sf::SymFunc;
use crate::qfield::{Rat, Var};
use std::collections::BTreeMap;

/// One summand `± scalar · (X or 1)` of an alphabet, with an optional `ε`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaTerm {
    pub scalar: Rat,
    pub uses_x: bool,
    pub eps: bool,
}

/// A formal sum of alphabet terms; `p_k[A] = Σ (-1)^{k·eps} scalar(x→x^k) (p_k or 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Alphabet {
    pub terms: Vec<AlphaTerm>,
}

impl Alphabet {
    pub fn empty() -> Alphabet {
        Alphabet { terms: Vec::new() }
    }

    /// The alphabet `X`.
    pub fn x() -> Alphabet {
        Alphabet::x_times(Rat::one())
    }

    /// `c·X`.
    pub fn x_times(c: Rat) -> Alphabet {
        Alphabet { terms: vec![AlphaTerm { scalar: c, uses_x: true, eps: false }] }
    }

    /// A scalar alphabet (no `X`).
    pub fn scalar(c: Rat) -> Alphabet {
        Alphabet { terms: vec![AlphaTerm { scalar: c, uses_x: false, eps: false }] }
    }

    pub fn var(v: Var) -> Alphabet {
        Alphabet::scalar(Rat::var(v))
    }

    /// `εX`.
    pub fn eps_x() -> Alphabet {
        Alphabet { terms: vec![AlphaTerm { scalar: Rat::one(), uses_x: true, eps: true }] }
    }

    /// `M = (1-q)(1-t)`.
    pub fn m() -> Rat {
        (Rat::one() - Rat::q()) * (Rat::one() - Rat::t())
    }

    /// `X/M`, the alphabet of `f ↦ f^*`.
    pub fn star() -> Alphabet {
        Alphabet::x_times(Rat::one() / Alphabet::m())
    }

    /// `MX`.
    pub fn phi() -> Alphabet {
        Alphabet::x_times(Alphabet::m())
    }

    pub fn plus(&self, o: &Alphabet) -> Alphabet {
        let mut terms = self.terms.clone();
        terms.extend(o.terms.iter().cloned());
        Alphabet { terms }
    }

    pub fn minus(&self, o: &Alphabet) -> Alphabet {
        self.plus(&o.neg())
    }

    pub fn neg(&self) -> Alphabet {
        self.scale(&Rat::int(-1))
    }

    /// Multiplies every term by a scalar `c` (the alphabet `c·A`).
    pub fn scale(&self, c: &Rat) -> Alphabet {
        Alphabet { terms: self.terms.iter().map(|t| AlphaTerm { scalar: &t.scalar * c, ..t.clone() }).collect() }
    }

    /// Product of alphabets; at most one factor may involve `X`.
    pub fn times(&self, o: &Alphabet) -> Alphabet {
        let mut terms = Vec::new();
        for a in &self.terms {
            for b in &o.terms {
                assert!(!(a.uses_x && b.uses_x), "alphabet product with X in both factors");
                terms.push(AlphaTerm { scalar: &a.scalar * &b.scalar, uses_x: a.uses_x || b.uses_x, eps: a.eps ^ b.eps });
            }
        }
        Alphabet { terms }
    }

    pub fn uses_x(&self) -> bool {
        self.terms.iter().any(|t| t.uses_x)
    }

    /// `(α_k, β_k)` with `p_k[A] = α_k p_k + β_k`.
    pub fn pk(&self, k: u32) -> (Rat, Rat) {
        let mut a = Vec::new();
        let mut b = Vec::new();
        for t in &self.terms {
            let mut s = t.scalar.substitute_powers(k as u16);
            if t.eps && k % 2 == 1 {
                s = s.neg();
            }
            if t.uses_x {
                a.push(s);
            } else {
                b.push(s);
            }
        }
        (Rat::sum(&a), Rat::sum(&b))
    }
}

/// `f[A]`.
pub fn plethysm(f: &SymFunc, a: &Alphabet) -> SymFunc {
    let maxk = f.terms().map(|(l, _)| l.part(0)).max().unwrap_or(0);
    let images: Vec<(Rat, Rat)> = (0..=maxk).map(|k| if k == 0 { (Rat::zero(), Rat::one()) } else { a.pk(k) }).collect();
    let mut acc: BTreeMap<Partition, Vec<Rat>> = BTreeMap::new();
    for (l, c) in f.terms() {
        // Expand ∏_i (α p_{λ_i} + β) as a sum over subsets choosing α.
        let mut partial: Vec<(Vec<u32>, Rat)> = vec![(Vec::new(), c.clone())];
        for k in l.parts() {
            let (al, be) = &images[k as usize];
            let mut next = Vec::with_capacity(partial.len() * 2);
            for (ps, x) in &partial {
                if !al.is_zero() {
                    let mut p2 = ps.clone();
                    p2.push(k);
                    next.push((p2, x * al));
                }
                if !be.is_zero() {
                    next.push((ps.clone(), x * be));
                }
            }
            partial = next;
        }
        for (ps, x) in partial {
            acc.entry(Partition::new(&ps)).or_default().push(x);
        }
    }
    SymFunc::from_groups(acc)
}

/// `f^* = f[X/M]`.
pub fn star_of(f: &SymFunc) -> SymFunc {
    plethysm(f, &Alphabet::star())
}

/// Evaluation of `f` at a scalar alphabet (the constant `f[A]`).
pub fn eval_scalar(f: &SymFunc, a: &Alphabet) -> Rat {
    debug_assert!(!a.uses_x());
    plethysm(f, a).constant_term()
}

/// `F[X+Y]` for a scalar alphabet `Y`.
pub fn translate(f: &SymFunc, y: &Alphabet) -> SymFunc {
    plethysm(f, &Alphabet::x().plus(y))
}

#[cfg(test)]
mod tests {
    use super::super::transition::{e, h};
    use super::*;
    use crate::qfield::{qbinom, qint, qrising, Rat};

    #[test]
    fn minus_eps_is_omega() {
        let a = Alphabet::eps_x().neg();
        for n in 1..=5 {
            assert_eq!(plethysm(&e(n), &a), h(n));
        }
    }

    #[test]
    fn principal_specializations() {
        for n in 1..=4 {
            for k in 0..=4 {
                let v = eval_scalar(&h(k), &Alphabet::scalar(qint(n)));
                assert_eq!(v, qbinom(n + k - 1, k), "h_{k}[[{n}]_q]");
            }
        }
        let a = Alphabet::scalar(Rat::one() / (Rat::one() - Rat::q()));
        for k in 0..=5i64 {
            let expect = Rat::var_pow(Var::Q, k * (k - 1) / 2) / qrising(&Rat::q(), k as u32);
            assert_eq!(eval_scalar(&e(k), &a), expect);
        }
    }

    #[test]
    fn translation_by_one() {
        let lhs = translate(&e(2), &Alphabet::scalar(Rat::one()));
        assert_eq!(lhs, e(2).add(&e(1)));
    }
}
