//! Two-alphabet symmetric functions `Σ c p_λ[X] p_μ[Y]`.

use super::partition::Partition;
use super::sf::SymFunc;
use crate::qfield::Rat;
use std::collections::BTreeMap;

#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct SymTensor {
    c: BTreeMap<(Partition, Partition), Rat>,
}

impl SymTensor {
    pub fn zero() -> SymTensor {
        SymTensor::default()
    }

    fn from_groups(acc: BTreeMap<(Partition, Partition), Vec<Rat>>) -> SymTensor {
        let c = acc
            .into_iter()
            .filter_map(|(k, v)| {
                let s = Rat::sum(&v);
                (!s.is_zero()).then_some((k, s))
            })
            .collect();
        SymTensor { c }
    }

    /// `Σ_i f_i[X] g_i[Y]`.
    pub fn sum_of_products<'a>(items: impl IntoIterator<Item = (&'a SymFunc, &'a SymFunc)>) -> SymTensor {
        let mut acc: BTreeMap<(Partition, Partition), Vec<Rat>> = BTreeMap::new();
        for (f, g) in items {
            for (a, x) in f.terms() {
                for (b, y) in g.terms() {
                    acc.entry((a.clone(), b.clone())).or_default().push(x * y);
                }
            }
        }
        SymTensor::from_groups(acc)
    }

    pub fn product(f: &SymFunc, g: &SymFunc) -> SymTensor {
        SymTensor::sum_of_products([(f, g)])
    }

    /// `f[c·X·Y]`, using `p_k[cXY] = c(x→x^k) p_k[X] p_k[Y]`.
    pub fn pleth_xy(f: &SymFunc, c: &Rat) -> SymTensor {
        let mut acc: BTreeMap<(Partition, Partition), Vec<Rat>> = BTreeMap::new();
        for (l, a) in f.terms() {
            let mut x = a.clone();
            for k in l.parts() {
                x = &x * &c.substitute_powers(k as u16);
            }
            acc.entry((l.clone(), l.clone())).or_default().push(x);
        }
        SymTensor::from_groups(acc)
    }

    /// `f[X+Y]`.
    pub fn translate_xy(f: &SymFunc) -> SymTensor {
        let mut acc: BTreeMap<(Partition, Partition), Vec<Rat>> = BTreeMap::new();
        for (l, a) in f.terms() {
            let parts: Vec<u32> = l.parts().collect();
            let n = parts.len();
            for mask in 0u32..(1 << n) {
                let left: Vec<u32> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| parts[i]).collect();
                let right: Vec<u32> = (0..n).filter(|i| mask & (1 << i) == 0).map(|i| parts[i]).collect();
                acc.entry((Partition::new(&left), Partition::new(&right))).or_default().push(a.clone());
            }
        }
        SymTensor::from_groups(acc)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Partition, Partition), &Rat)> {
        self.c.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn sub(&self, o: &SymTensor) -> SymTensor {
        let mut acc: BTreeMap<(Partition, Partition), Vec<Rat>> = BTreeMap::new();
        for (k, v) in &self.c {
            acc.entry(k.clone()).or_default().push(v.clone());
        }
        for (k, v) in &o.c {
            acc.entry(k.clone()).or_default().push(v.neg());
        }
        SymTensor::from_groups(acc)
    }

    /// The `Y`-side coefficient functions: `T = Σ_μ F_μ[X] p_μ[Y]`.
    pub fn right_slices(&self) -> BTreeMap<Partition, SymFunc> {
        let mut m: BTreeMap<Partition, BTreeMap<Partition, Rat>> = BTreeMap::new();
        for ((a, b), x) in &self.c {
            m.entry(b.clone()).or_default().insert(a.clone(), x.clone());
        }
        m.into_iter().map(|(b, c)| (b, SymFunc::from_map(c))).collect()
    }

    /// Pairs the `Y` side against `g` with a diagonal pairing on power sums.
    pub fn pair_right(&self, g: &SymFunc, weight: impl Fn(&Partition) -> Rat) -> SymFunc {
        let items: Vec<(Rat, SymFunc)> = self
            .right_slices()
            .into_iter()
            .filter_map(|(b, f)| {
                let gb = g.coeff(&b);
                (!gb.is_zero()).then(|| (&gb * &weight(&b), f))
            })
            .collect();
        SymFunc::lincomb(items.iter().map(|(c, f)| (c.clone(), f)))
    }

    /// Applies a linear map on the `X` side.
    pub fn map_left(&self, op: impl Fn(&SymFunc) -> SymFunc) -> SymTensor {
        let slices = self.right_slices();
        let imgs: Vec<(SymFunc, SymFunc)> = slices.into_iter().map(|(b, f)| (op(&f), SymFunc::p(&b))).collect();
        SymTensor::sum_of_products(imgs.iter().map(|(a, b)| (a, b)))
    }
}

#[cfg(test)]
mod tests {
    use super::super::transition::{e, s};
    use super::*;

    #[test]
    fn cauchy_elementary() {
        for n in 1..=4 {
            let lhs = SymTensor::pleth_xy(&e(n), &Rat::one());
            let parts = Partition::all(n as u32);
            let pairs: Vec<(SymFunc, SymFunc)> = parts.iter().map(|l| (s(l), s(&l.conjugate()))).collect();
            let rhs = SymTensor::sum_of_products(pairs.iter().map(|(a, b)| (a, b)));
            assert_eq!(lhs, rhs);
        }
    }
}
