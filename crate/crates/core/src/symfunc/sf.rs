use super::partition::Partition;
use crate::error::{Error, Result};
use crate::qfield::{Int, Rat, Var};
use std::collections::BTreeMap;
use std::fmt;

/// A symmetric function, stored in the power-sum basis.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SymFunc {
    c: BTreeMap<Partition, Rat>,
}

impl SymFunc {
    pub fn zero() -> SymFunc {
        SymFunc { c: BTreeMap::new() }
    }

    pub fn one() -> SymFunc {
        SymFunc::scalar(Rat::one())
    }

    pub fn scalar(r: Rat) -> SymFunc {
        SymFunc::term(Partition::empty(), r)
    }

    pub fn term(l: Partition, r: Rat) -> SymFunc {
        let mut c = BTreeMap::new();
        if !r.is_zero() {
            c.insert(l, r);
        }
        SymFunc { c }
    }

    /// `p_λ`.
    pub fn p(l: &Partition) -> SymFunc {
        SymFunc::term(l.clone(), Rat::one())
    }

    /// `p_n`; `p_0 = 1`.
    pub fn p_n(n: u32) -> SymFunc {
        SymFunc::p(&Partition::row(n))
    }

    pub fn from_map(mut c: BTreeMap<Partition, Rat>) -> SymFunc {
        c.retain(|_, v| !v.is_zero());
        SymFunc { c }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rat)> {
        self.c.iter()
    }

    pub fn coeff(&self, l: &Partition) -> Rat {
        self.c.get(l).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Highest degree present (0 for zero).
    pub fn degree(&self) -> u32 {
        self.c.keys().next_back().map(|l| l.size()).unwrap_or(0)
    }

    pub fn min_degree(&self) -> u32 {
        self.c.keys().next().map(|l| l.size()).unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree() == self.min_degree()
    }

    pub fn is_constant(&self) -> bool {
        self.degree() == 0
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(&Partition::empty())
    }

    /// Degrees with a nonzero component.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.c.keys().map(|l| l.size()).collect();
        d.dedup();
        d
    }

    pub fn component(&self, n: u32) -> SymFunc {
        SymFunc { c: self.c.iter().filter(|(l, _)| l.size() == n).map(|(l, r)| (l.clone(), r.clone())).collect() }
    }

    pub fn truncate_degree(&self, maxdeg: u32) -> SymFunc {
        SymFunc { c: self.c.iter().filter(|(l, _)| l.size() <= maxdeg).map(|(l, r)| (l.clone(), r.clone())).collect() }
    }

    pub fn neg(&self) -> SymFunc {
        self.map_coeffs(|_, r| r.neg())
    }

    pub fn scale(&self, s: &Rat) -> SymFunc {
        if s.is_zero() {
            return SymFunc::zero();
        }
        if s.is_one() {
            return self.clone();
        }
        self.map_coeffs(|_, r| r * s)
    }

    pub fn add(&self, o: &SymFunc) -> SymFunc {
        SymFunc::lincomb([(Rat::one(), self), (Rat::one(), o)])
    }

    pub fn sub(&self, o: &SymFunc) -> SymFunc {
        SymFunc::lincomb([(Rat::one(), self), (Rat::int(-1), o)])
    }

    /// `Σ c_i f_i`, summing each coefficient with a single grouped sum.
    pub fn lincomb<'a>(items: impl IntoIterator<Item = (Rat, &'a SymFunc)>) -> SymFunc {
        let items: Vec<(Rat, &SymFunc)> = items.into_iter().filter(|(s, _)| !s.is_zero()).collect();
        let mut acc: BTreeMap<&Partition, Vec<(&Rat, &Rat)>> = BTreeMap::new();
        for (s, f) in &items {
            for (l, r) in &f.c {
                acc.entry(l).or_default().push((s, r));
            }
        }
        let c = acc
            .into_iter()
            .filter_map(|(l, v)| {
                let x = if v.len() == 1 { v[0].0 * v[0].1 } else { Rat::sum_of_products(v) };
                (!x.is_zero()).then(|| (l.clone(), x))
            })
            .collect();
        SymFunc { c }
    }

    /// Sum of several functions.
    pub fn sum<'a>(items: impl IntoIterator<Item = &'a SymFunc>) -> SymFunc {
        let mut acc: BTreeMap<Partition, Vec<Rat>> = BTreeMap::new();
        for f in items {
            for (l, r) in &f.c {
                acc.entry(l.clone()).or_default().push(r.clone());
            }
        }
        SymFunc::from_groups(acc)
    }

    pub(crate) fn from_groups(acc: BTreeMap<Partition, Vec<Rat>>) -> SymFunc {
        let c = acc
            .into_iter()
            .filter_map(|(l, v)| {
                let s = if v.len() == 1 { v.into_iter().next().unwrap() } else { Rat::sum(&v) };
                (!s.is_zero()).then_some((l, s))
            })
            .collect();
        SymFunc { c }
    }

    pub fn mul(&self, o: &SymFunc) -> SymFunc {
        if self.is_zero() || o.is_zero() {
            return SymFunc::zero();
        }
        let mut acc: BTreeMap<Partition, Vec<Rat>> = BTreeMap::new();
        for (a, x) in &self.c {
            for (b, y) in &o.c {
                acc.entry(a.union(b)).or_default().push(x * y);
            }
        }
        SymFunc::from_groups(acc)
    }

    pub fn pow(&self, k: u32) -> SymFunc {
        let mut acc = SymFunc::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn map_coeffs(&self, f: impl Fn(&Partition, &Rat) -> Rat) -> SymFunc {
        SymFunc::from_map(self.c.iter().map(|(l, r)| (l.clone(), f(l, r))).collect())
    }

    pub fn try_map_coeffs(&self, f: impl Fn(&Partition, &Rat) -> Result<Rat>) -> Result<SymFunc> {
        let mut c = BTreeMap::new();
        for (l, r) in &self.c {
            c.insert(l.clone(), f(l, r)?);
        }
        Ok(SymFunc::from_map(c))
    }

    /// `ω p_λ = (-1)^{|λ|-ℓ(λ)} p_λ`.
    pub fn omega(&self) -> SymFunc {
        self.map_coeffs(|l, r| if l.sign() < 0 { r.neg() } else { r.clone() })
    }

    /// `ω` followed by `q → 1/q`, `t → 1/t` on coefficients.
    pub fn omega_bar(&self) -> SymFunc {
        self.map_coeffs(|l, r| {
            let s = r.invert_qt();
            if l.sign() < 0 {
                s.neg()
            } else {
                s
            }
        })
    }

    pub fn invert_qt(&self) -> SymFunc {
        self.map_coeffs(|_, r| r.invert_qt())
    }

    /// Substitutes an integer for a field variable in every coefficient.
    pub fn eval_var(&self, v: Var, val: i64) -> Result<SymFunc> {
        let x = Int::from(val);
        self.try_map_coeffs(|_, r| r.eval_var(v, &x))
    }

    /// Coefficient of `v^k` in every coefficient (denominators must be free of `v`).
    pub fn coeff_in(&self, v: Var, k: u16) -> Result<SymFunc> {
        self.try_map_coeffs(|_, r| r.coeff_in(v, k))
    }

    pub fn truncate_var_degree(&self, v: Var, d: u16) -> Result<SymFunc> {
        self.try_map_coeffs(|_, r| r.truncate_var_degree(v, d))
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.c.values().any(|r| r.contains_var(v))
    }

    /// Canonical text form: `basis=p;` then one `a.b.c : coeff` line per term.
    pub fn serialize(&self) -> String {
        let mut s = String::from("basis=p;\n");
        for (l, r) in &self.c {
            let key = if l.is_empty() { String::new() } else { l.join(".") };
            s.push_str(&format!("{key} : {r}\n"));
        }
        s
    }

    pub fn deserialize(text: &str) -> Result<SymFunc> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        match lines.next().map(str::trim) {
            Some("basis=p;") => {}
            other => return Err(Error::Parse(format!("expected 'basis=p;' header, found {other:?}"))),
        }
        let mut c = BTreeMap::new();
        for line in lines {
            let (k, v) = line.split_once(" : ").ok_or_else(|| Error::Parse(format!("malformed line '{line}'")))?;
            let k = k.trim();
            let l = if k.is_empty() { Partition::empty() } else { Partition::parse(k)? };
            let r: Rat = v.trim().parse()?;
            if c.insert(l, r).is_some() {
                return Err(Error::Parse(format!("duplicate term '{k}'")));
            }
        }
        Ok(SymFunc::from_map(c))
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.c.iter().map(|(l, r)| format!("({r})*p{l}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! sf_binop {
    ($tr:ident, $m:ident) => {
        impl std::ops::$tr<&SymFunc> for &SymFunc {
            type Output = SymFunc;
            fn $m(self, o: &SymFunc) -> SymFunc {
                SymFunc::$m(self, o)
            }
        }
        impl std::ops::$tr<SymFunc> for SymFunc {
            type Output = SymFunc;
            fn $m(self, o: SymFunc) -> SymFunc {
                SymFunc::$m(&self, &o)
            }
        }
    };
}

sf_binop!(Add, add);
sf_binop!(Sub, sub);
sf_binop!(Mul, mul);

impl std::ops::Neg for SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        SymFunc::neg(&self)
    }
}
