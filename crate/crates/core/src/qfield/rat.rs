//! Reduced rational functions.

use super::gcd::gcd;
use super::int::Int;
use super::poly::{Mono, Poly, Var, NVARS};
use crate::error::{Error, Result};
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// An element of `Q(q, t, ...)` stored as `num/den`.
///
/// Invariants: `gcd(num, den) = 1` (including integer content), the leading
/// coefficient of `den` is positive, and zero is `0/1`. Two values are equal
/// exactly when their representations are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rat {
    num: Poly,
    den: Poly,
}

impl Default for Rat {
    fn default() -> Self {
        Rat::zero()
    }
}

impl Rat {
    pub fn zero() -> Rat {
        Rat { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Rat {
        Rat { num: Poly::one(), den: Poly::one() }
    }

    pub fn int(c: i64) -> Rat {
        Rat { num: Poly::int(c), den: Poly::one() }
    }

    pub fn from_int(c: Int) -> Rat {
        Rat { num: Poly::constant(c), den: Poly::one() }
    }

    pub fn frac(a: i64, b: i64) -> Rat {
        Rat::new(Poly::int(a), Poly::int(b)).expect("nonzero denominator")
    }

    pub fn var(v: Var) -> Rat {
        Rat { num: Poly::var(v), den: Poly::one() }
    }

    pub fn q() -> Rat {
        Rat::var(Var::Q)
    }

    pub fn t() -> Rat {
        Rat::var(Var::T)
    }

    /// `v^k` for any integer `k`.
    pub fn var_pow(v: Var, k: i64) -> Rat {
        let m = Poly::var_pow(v, k.unsigned_abs() as u16);
        if k >= 0 {
            Rat { num: m, den: Poly::one() }
        } else {
            Rat { num: Poly::one(), den: m }
        }
    }

    /// `q^a t^b` for integer exponents.
    pub fn qt_pow(a: i64, b: i64) -> Rat {
        Rat::var_pow(Var::Q, a) * Rat::var_pow(Var::T, b)
    }

    pub fn from_poly(p: Poly) -> Rat {
        Rat { num: p, den: Poly::one() }
    }

    pub fn new(num: Poly, den: Poly) -> Result<Rat> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat::reduce(num, den))
    }

    /// Builds from parts that are already coprime; only the sign is fixed.
    pub fn from_coprime(num: Poly, den: Poly) -> Rat {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Rat::zero();
        }
        if den.lead_coeff().is_negative() {
            Rat { num: num.neg(), den: den.neg() }
        } else {
            Rat { num, den }
        }
    }

    fn reduce(num: Poly, den: Poly) -> Rat {
        if num.is_zero() {
            return Rat::zero();
        }
        if den.is_one() {
            return Rat { num, den };
        }
        let g = gcd(&num, &den);
        let (n, d) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        Rat::from_coprime(n, d)
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// The integer value, if this is an integer constant.
    pub fn as_int(&self) -> Option<Int> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.num.contains_var(v) || self.den.contains_var(v)
    }

    pub fn neg(&self) -> Rat {
        Rat { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add_ref(&self, o: &Rat) -> Rat {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            let n = self.num.add(&o.num);
            return Rat::reduce(n, self.den.clone());
        }
        if self.den.is_one() {
            return Rat::from_coprime(self.num.mul(&o.den).add(&o.num), o.den.clone());
        }
        if o.den.is_one() {
            return Rat::from_coprime(o.num.mul(&self.den).add(&self.num), self.den.clone());
        }
        let g = gcd(&self.den, &o.den);
        if g.is_one() {
            let n = self.num.mul(&o.den).add(&o.num.mul(&self.den));
            return Rat::from_coprime(n, self.den.mul(&o.den));
        }
        let da = self.den.div_exact(&g).unwrap();
        let db = o.den.div_exact(&g).unwrap();
        let t = self.num.mul(&db).add(&o.num.mul(&da));
        if t.is_zero() {
            return Rat::zero();
        }
        let g2 = gcd(&t, &g);
        if g2.is_one() {
            Rat::from_coprime(t, self.den.mul(&db))
        } else {
            let n = t.div_exact(&g2).unwrap();
            let d = self.den.div_exact(&g2).unwrap().mul(&db);
            Rat::from_coprime(n, d)
        }
    }

    pub fn sub_ref(&self, o: &Rat) -> Rat {
        self.add_ref(&o.neg())
    }

    pub fn mul_ref(&self, o: &Rat) -> Rat {
        if self.is_zero() || o.is_zero() {
            return Rat::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return Rat { num: self.num.mul(&o.num), den: Poly::one() };
        }
        let (n1, d2) = cancel(&self.num, &o.den);
        let (n2, d1) = cancel(&o.num, &self.den);
        Rat::from_coprime(n1.mul(&n2), d1.mul(&d2))
    }

    pub fn mul_int(&self, c: &Int) -> Rat {
        if c.is_zero() {
            return Rat::zero();
        }
        self.mul_ref(&Rat::from_int(c.clone()))
    }

    pub fn inv(&self) -> Result<Rat> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat::from_coprime(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, o: &Rat) -> Result<Rat> {
        Ok(self.mul_ref(&o.inv()?))
    }

    pub fn pow(&self, e: i64) -> Rat {
        let base = if e < 0 { self.inv().expect("negative power of zero") } else { self.clone() };
        let k = e.unsigned_abs() as u32;
        Rat::from_coprime(base.num.pow(k), base.den.pow(k))
    }

    /// Sum, adding numerators of equal denominators before reducing.
    pub fn sum<'a>(it: impl IntoIterator<Item = &'a Rat>) -> Rat {
        Rat::sum_fractions(it.into_iter().filter(|r| !r.is_zero()).map(|r| (r.num.clone(), r.den.clone())))
    }

    /// `Σ a_i b_i`.
    pub fn sum_of_products<'a>(it: impl IntoIterator<Item = (&'a Rat, &'a Rat)>) -> Rat {
        Rat::sum_fractions(
            it.into_iter()
                .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                .map(|(a, b)| {
                    let r = a.mul_ref(b);
                    (r.num, r.den)
                }),
        )
    }

    fn sum_fractions(it: impl IntoIterator<Item = (Poly, Poly)>) -> Rat {
        let mut groups: HashMap<Poly, Poly> = HashMap::new();
        let mut order: Vec<Poly> = Vec::new();
        for (n, d) in it {
            match groups.get_mut(&d) {
                Some(acc) => *acc = acc.add(&n),
                None => {
                    order.push(d.clone());
                    groups.insert(d, n);
                }
            }
        }
        order.retain(|d| !groups[d].is_zero());
        match order.len() {
            0 => return Rat::zero(),
            1 => {
                let n = groups.remove(&order[0]).unwrap();
                return Rat::reduce(n, order.pop().unwrap());
            }
            _ => {}
        }
        order
            .into_iter()
            .map(|d| {
                let n = groups.remove(&d).unwrap();
                Rat::reduce(n, d)
            })
            .fold(Rat::zero(), |acc, r| acc.add_ref(&r))
    }

    /// Substitutes an integer value for `v`.
    pub fn eval_var(&self, v: Var, val: &Int) -> Result<Rat> {
        if !self.contains_var(v) {
            return Ok(self.clone());
        }
        let d = self.den.eval_var(v, val);
        if d.is_zero() {
            return Err(Error::Pole(format!("{}={}", v.name(), val)));
        }
        Ok(Rat::reduce(self.num.eval_var(v, val), d))
    }

    /// Substitutes a rational function for `v`.
    pub fn compose_var(&self, v: Var, val: &Rat) -> Result<Rat> {
        if !self.contains_var(v) {
            return Ok(self.clone());
        }
        let n = horner(&self.num, v, val);
        let d = horner(&self.den, v, val);
        n.checked_div(&d).map_err(|_| Error::Pole(format!("{}={}", v.name(), val)))
    }

    /// Drops terms of `v`-degree above `d`. The denominator must be free of `v`.
    pub fn truncate_var_degree(&self, v: Var, d: u16) -> Result<Rat> {
        if self.den.contains_var(v) {
            return Err(Error::OutOfRange(format!("denominator depends on {}", v.name())));
        }
        Ok(Rat::reduce(self.num.truncate_var_degree(v, d), self.den.clone()))
    }

    /// Coefficient of `v^k` when the denominator is free of `v`.
    pub fn coeff_in(&self, v: Var, k: u16) -> Result<Rat> {
        if self.den.contains_var(v) {
            return Err(Error::OutOfRange(format!("denominator depends on {}", v.name())));
        }
        let cs = self.num.coeffs_in(v);
        let c = cs.get(k as usize).cloned().unwrap_or_else(Poly::zero);
        Ok(Rat::reduce(c, self.den.clone()))
    }

    /// Replaces every variable `x` by `x^k`.
    pub fn substitute_powers(&self, k: u16) -> Rat {
        if k == 1 {
            return self.clone();
        }
        Rat::from_coprime(self.num.substitute_powers(k), self.den.substitute_powers(k))
    }

    /// Replaces `q` by `1/q` and `t` by `1/t`.
    pub fn invert_qt(&self) -> Rat {
        self.invert_vars(&[Var::Q, Var::T])
    }

    /// Replaces each listed variable `x` by `1/x`.
    pub fn invert_vars(&self, vars: &[Var]) -> Rat {
        if self.is_zero() {
            return Rat::zero();
        }
        let mut n = self.num.clone();
        let mut d = self.den.clone();
        let mut pos = [0u16; NVARS];
        let mut neg = [0u16; NVARS];
        for &v in vars {
            let (n1, dn) = n.reverse_in(v);
            let (d1, dd) = d.reverse_in(v);
            n = n1;
            d = d1;
            let e = dd as i32 - dn as i32;
            if e >= 0 {
                pos[v.idx()] = e as u16;
            } else {
                neg[v.idx()] = (-e) as u16;
            }
        }
        Rat::from_coprime(n.mul_mono(&Mono::from_exps(pos)), d.mul_mono(&Mono::from_exps(neg)))
    }

    /// Renames variables via a monomial map that is a ring automorphism (e.g. a swap).
    pub fn map_vars(&self, f: impl Fn(&Mono) -> Mono + Copy) -> Rat {
        Rat::reduce(self.num.map_monos(f), self.den.map_monos(f))
    }
}

fn horner(p: &Poly, v: Var, val: &Rat) -> Rat {
    let cs = p.coeffs_in(v);
    let mut acc = Rat::zero();
    for c in cs.iter().rev() {
        acc = acc.mul_ref(val).add_ref(&Rat::from_poly(c.clone()));
    }
    acc
}

fn cancel(n: &Poly, d: &Poly) -> (Poly, Poly) {
    if d.is_one() {
        return (n.clone(), d.clone());
    }
    let g = gcd(n, d);
    if g.is_one() {
        (n.clone(), d.clone())
    } else {
        (n.div_exact(&g).unwrap(), d.div_exact(&g).unwrap())
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl From<i64> for Rat {
    fn from(c: i64) -> Self {
        Rat::int(c)
    }
}

impl From<Poly> for Rat {
    fn from(p: Poly) -> Self {
        Rat::from_poly(p)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr<&Rat> for &Rat {
            type Output = Rat;
            fn $m(self, o: &Rat) -> Rat {
                self.$f(o)
            }
        }
        impl $tr<Rat> for Rat {
            type Output = Rat;
            fn $m(self, o: Rat) -> Rat {
                self.$f(&o)
            }
        }
        impl $tr<&Rat> for Rat {
            type Output = Rat;
            fn $m(self, o: &Rat) -> Rat {
                self.$f(o)
            }
        }
        impl $tr<Rat> for &Rat {
            type Output = Rat;
            fn $m(self, o: Rat) -> Rat {
                self.$f(&o)
            }
        }
    };
}

binop!(Add, add, add_ref);
binop!(Sub, sub, sub_ref);
binop!(Mul, mul, mul_ref);

impl Div<&Rat> for &Rat {
    type Output = Rat;
    fn div(self, o: &Rat) -> Rat {
        self.checked_div(o).expect("division by zero")
    }
}

impl Div<Rat> for Rat {
    type Output = Rat;
    fn div(self, o: Rat) -> Rat {
        self.checked_div(&o).expect("division by zero")
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat::neg(&self)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat::neg(self)
    }
}

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, o: &Rat) {
        *self = self.add_ref(o);
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, o: &Rat) {
        *self = self.sub_ref(o);
    }
}

impl MulAssign<&Rat> for Rat {
    fn mul_assign(&mut self, o: &Rat) {
        *self = self.mul_ref(o);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_minus(r: Rat) -> Rat {
        Rat::one() - r
    }

    #[test]
    fn reduces_quotients() {
        let q = Rat::q();
        let r = one_minus(q.pow(2)) / one_minus(q.clone());
        assert_eq!(r, Rat::one() + q);
        assert!(r.is_poly());
    }

    #[test]
    fn denominator_sign_normalized() {
        let r = Rat::one() / (Rat::q() - Rat::one());
        assert_eq!(r.to_string(), "(1)/(-1 + q)");
        assert_eq!((Rat::one() / (Rat::one() - Rat::q())).to_string(), "(-1)/(-1 + q)");
        assert_eq!(Rat::frac(2, -4).to_string(), "(-1)/(2)");
    }

    #[test]
    fn invert_qt_of_m() {
        let m = one_minus(Rat::q()) * one_minus(Rat::t());
        let mi = m.invert_qt();
        assert_eq!(mi, &m / &(Rat::q() * Rat::t()));
        assert_eq!(mi.invert_qt(), m);
    }

    #[test]
    fn eval_pole_reported() {
        let r = Rat::one() / one_minus(Rat::var(Var::V));
        assert!(matches!(r.eval_var(Var::V, &Int::ONE), Err(Error::Pole(_))));
        let s = one_minus(Rat::var(Var::V)) / one_minus(Rat::var(Var::V) * Rat::q());
        assert_eq!(s.eval_var(Var::V, &Int::ONE).unwrap(), Rat::zero());
    }

    #[test]
    fn grouped_sum_matches_fold() {
        let q = Rat::q();
        let t = Rat::t();
        let xs = vec![
            Rat::one() / one_minus(q.clone()),
            t.clone() / one_minus(q.clone()),
            Rat::one() / one_minus(t.clone()),
            q.clone() * t.clone(),
        ];
        let folded = xs.iter().fold(Rat::zero(), |a, b| a + b);
        assert_eq!(Rat::sum(&xs), folded);
    }
}
