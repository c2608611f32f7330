//! Sparse multivariate integer polynomials over a fixed variable registry.

use super::int::Int;
use std::collections::BTreeMap;
use std::fmt;

/// Number of variable slots.
pub const NVARS: usize = 8;

/// The variables a coefficient may use. The slot order is the canonical
/// variable order: `q` is the most significant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Q = 0,
    T = 1,
    U = 2,
    V = 3,
    Z = 4,
    W = 5,
    X = 6,
    Y = 7,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::Q, Var::T, Var::U, Var::V, Var::Z, Var::W, Var::X, Var::Y];

    pub fn name(self) -> &'static str {
        ["q", "t", "u", "v", "z", "w", "x", "y"][self as usize]
    }

    pub fn from_name(s: &str) -> Option<Var> {
        Var::ALL.iter().copied().find(|v| v.name() == s)
    }

    #[inline]
    pub fn idx(self) -> usize {
        self as usize
    }
}

/// Monomial exponent vector; the derived order is graded lexicographic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Mono {
    deg: u32,
    e: [u16; NVARS],
}

impl Mono {
    pub const ONE: Mono = Mono { deg: 0, e: [0; NVARS] };

    pub fn var(v: Var, k: u16) -> Mono {
        let mut e = [0; NVARS];
        e[v.idx()] = k;
        Mono { deg: k as u32, e }
    }

    pub fn from_exps(e: [u16; NVARS]) -> Mono {
        Mono { deg: e.iter().map(|&x| x as u32).sum(), e }
    }

    #[inline]
    pub fn exp(&self, v: Var) -> u16 {
        self.e[v.idx()]
    }

    pub fn exps(&self) -> &[u16; NVARS] {
        &self.e
    }

    pub fn total_degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    #[inline]
    pub fn mul(&self, o: &Mono) -> Mono {
        let mut e = self.e;
        for (a, b) in e.iter_mut().zip(o.e) {
            *a = a.checked_add(b).expect("exponent overflow");
        }
        Mono { deg: self.deg + o.deg, e }
    }

    pub fn divides(&self, o: &Mono) -> bool {
        (0..NVARS).all(|i| self.e[i] <= o.e[i])
    }

    pub fn div(&self, o: &Mono) -> Option<Mono> {
        let mut e = self.e;
        for (a, b) in e.iter_mut().zip(o.e) {
            *a = a.checked_sub(b)?;
        }
        Some(Mono { deg: self.deg - o.deg, e })
    }

    pub fn meet(&self, o: &Mono) -> Mono {
        let mut e = self.e;
        for (a, b) in e.iter_mut().zip(o.e) {
            *a = (*a).min(b);
        }
        Mono::from_exps(e)
    }

    pub fn with_exp(&self, v: Var, k: u16) -> Mono {
        let mut e = self.e;
        e[v.idx()] = k;
        Mono::from_exps(e)
    }

    pub fn scale_exps(&self, k: u16) -> Mono {
        let mut e = self.e;
        for x in e.iter_mut() {
            *x = x.checked_mul(k).expect("exponent overflow");
        }
        Mono { deg: self.deg * k as u32, e }
    }

    pub fn vars_mask(&self) -> u8 {
        let mut m = 0u8;
        for i in 0..NVARS {
            if self.e[i] > 0 {
                m |= 1 << i;
            }
        }
        m
    }

    fn fmt_body(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let k = self.exp(v);
            if k == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if k == 1 {
                f.write_str(v.name())?;
            } else {
                write!(f, "{}^{}", v.name(), k)?;
            }
        }
        Ok(())
    }
}

/// Polynomial with integer coefficients, terms sorted ascending, no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Mono, Int)>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(Int::ONE)
    }

    pub fn constant(c: Int) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(Mono::ONE, c)] }
        }
    }

    pub fn int(c: i64) -> Poly {
        Poly::constant(Int::from(c))
    }

    pub fn var(v: Var) -> Poly {
        Poly::monomial(Mono::var(v, 1), Int::ONE)
    }

    pub fn var_pow(v: Var, k: u16) -> Poly {
        Poly::monomial(Mono::var(v, k), Int::ONE)
    }

    pub fn monomial(m: Mono, c: Int) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    /// Builds from unsorted terms, merging duplicates.
    pub fn from_terms(mut terms: Vec<(Mono, Int)>) -> Poly {
        terms.sort_unstable_by_key(|a| a.0);
        let mut out: Vec<(Mono, Int)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = lc.add(&c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        Poly { terms: out }
    }

    fn from_sorted(terms: Vec<(Mono, Int)>) -> Poly {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(terms.iter().all(|t| !t.1.is_zero()));
        Poly { terms }
    }

    pub fn terms(&self) -> &[(Mono, Int)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn as_constant(&self) -> Option<Int> {
        match self.terms.as_slice() {
            [] => Some(Int::ZERO),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Leading term in graded-lex order.
    pub fn lead(&self) -> Option<&(Mono, Int)> {
        self.terms.last()
    }

    pub fn lead_coeff(&self) -> Int {
        self.terms.last().map(|t| t.1.clone()).unwrap_or(Int::ZERO)
    }

    pub fn coeff(&self, m: &Mono) -> Int {
        match self.terms.binary_search_by(|t| t.0.cmp(m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Int::ZERO,
        }
    }

    pub fn vars_mask(&self) -> u8 {
        self.terms.iter().fold(0, |m, t| m | t.0.vars_mask())
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.iter().any(|t| t.0.exp(v) > 0)
    }

    pub fn degree_in(&self, v: Var) -> u16 {
        self.terms.iter().map(|t| t.0.exp(v)).max().unwrap_or(0)
    }

    pub fn min_degree_in(&self, v: Var) -> u16 {
        self.terms.iter().map(|t| t.0.exp(v)).min().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.last().map(|t| t.0.total_degree()).unwrap_or(0)
    }

    pub fn max_norm(&self) -> Int {
        self.terms.iter().map(|t| t.1.abs()).max().unwrap_or(Int::ZERO)
    }

    pub fn neg(&self) -> Poly {
        Poly::from_sorted(self.terms.iter().map(|(m, c)| (*m, c.neg())).collect())
    }

    pub fn scale(&self, c: &Int) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        Poly::from_sorted(self.terms.iter().map(|(m, x)| (*m, x.mul(c))).collect())
    }

    pub fn mul_mono(&self, m: &Mono) -> Poly {
        Poly::from_sorted(self.terms.iter().map(|(x, c)| (x.mul(m), c.clone())).collect())
    }

    pub fn div_exact_int(&self, c: &Int) -> Poly {
        if c.is_one() {
            return self.clone();
        }
        Poly::from_sorted(self.terms.iter().map(|(m, x)| (*m, x.div_exact(c))).collect())
    }

    pub fn div_mono(&self, m: &Mono) -> Poly {
        Poly::from_sorted(self.terms.iter().map(|(x, c)| (x.div(m).expect("monomial division"), c.clone())).collect())
    }

    pub fn add(&self, o: &Poly) -> Poly {
        self.merge(o, false)
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.merge(o, true)
    }

    fn merge(&self, o: &Poly, negate: bool) -> Poly {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { o.neg() } else { o.clone() };
        }
        let (a, b) = (&self.terms, &o.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    let c = if negate { b[j].1.neg() } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { a[i].1.sub(&b[j].1) } else { a[i].1.add(&b[j].1) };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate { t.1.neg() } else { t.1.clone() };
            out.push((t.0, c));
        }
        Poly::from_sorted(out)
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        if self.len() == 1 {
            let (m, c) = &self.terms[0];
            return o.mul_mono(m).scale(c);
        }
        if o.len() == 1 {
            let (m, c) = &o.terms[0];
            return self.mul_mono(m).scale(c);
        }
        let mut prods = Vec::with_capacity(self.len() * o.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                prods.push((m1.mul(m2), c1.mul(c2)));
            }
        }
        Poly::from_terms(prods)
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Gcd of the integer coefficients, signed like the leading coefficient.
    pub fn content(&self) -> Int {
        let mut g = Int::ZERO;
        for (_, c) in self.terms.iter().rev() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if self.lead_coeff().is_negative() {
            g.neg()
        } else {
            g
        }
    }

    /// Largest monomial dividing every term.
    pub fn mono_content(&self) -> Mono {
        let mut it = self.terms.iter();
        match it.next() {
            None => Mono::ONE,
            Some((m0, _)) => it.fold(*m0, |acc, (m, _)| acc.meet(m)),
        }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if d.len() == 1 {
            let (dm, dc) = &d.terms[0];
            let mut out = Vec::with_capacity(self.len());
            for (m, c) in &self.terms {
                out.push((m.div(dm)?, c.checked_div_exact(dc)?));
            }
            return Some(Poly::from_sorted(out));
        }
        let (dlm, dlc) = d.lead().unwrap();
        if !dlm.divides(&self.lead().unwrap().0) {
            return None;
        }
        for v in Var::ALL {
            if d.degree_in(v) > self.degree_in(v) {
                return None;
            }
        }
        let mut rem: BTreeMap<Mono, Int> = self.terms.iter().cloned().collect();
        let mut quot = Vec::new();
        while let Some((&m, _)) = rem.iter().next_back() {
            let c = rem.remove(&m).unwrap();
            let qm = m.div(dlm)?;
            let qc = c.checked_div_exact(dlc)?;
            for (tm, tc) in d.terms.iter().rev().skip(1) {
                let pm = tm.mul(&qm);
                let e = rem.entry(pm).or_insert(Int::ZERO);
                let nc = e.sub(&tc.mul(&qc));
                if nc.is_zero() {
                    rem.remove(&pm);
                } else {
                    *e = nc;
                }
            }
            quot.push((qm, qc));
        }
        quot.reverse();
        Some(Poly::from_sorted(quot))
    }

    /// Substitutes an integer for one variable.
    pub fn eval_var(&self, v: Var, val: &Int) -> Poly {
        if !self.contains_var(v) {
            return self.clone();
        }
        let maxd = self.degree_in(v) as usize;
        let mut pows = Vec::with_capacity(maxd + 1);
        pows.push(Int::ONE);
        for i in 1..=maxd {
            let p = pows[i - 1].mul(val);
            pows.push(p);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.with_exp(v, 0), c.mul(&pows[m.exp(v) as usize])))
            .collect();
        Poly::from_terms(terms)
    }

    /// Substitutes a polynomial for one variable.
    pub fn compose_var(&self, v: Var, val: &Poly) -> Poly {
        if !self.contains_var(v) {
            return self.clone();
        }
        let coeffs = self.coeffs_in(v);
        let mut acc = Poly::zero();
        for c in coeffs.iter().rev() {
            acc = acc.mul(val).add(c);
        }
        acc
    }

    /// Coefficients with respect to `v`, indexed by degree.
    pub fn coeffs_in(&self, v: Var) -> Vec<Poly> {
        let n = self.degree_in(v) as usize + 1;
        let mut buckets: Vec<Vec<(Mono, Int)>> = vec![Vec::new(); n];
        for (m, c) in &self.terms {
            buckets[m.exp(v) as usize].push((m.with_exp(v, 0), c.clone()));
        }
        buckets.into_iter().map(Poly::from_terms).collect()
    }

    pub fn from_coeffs_in(v: Var, coeffs: &[Poly]) -> Poly {
        let mut terms = Vec::new();
        for (k, c) in coeffs.iter().enumerate() {
            for (m, x) in &c.terms {
                terms.push((m.mul(&Mono::var(v, k as u16)), x.clone()));
            }
        }
        Poly::from_terms(terms)
    }

    /// Drops every term whose `v`-degree exceeds `d`.
    pub fn truncate_var_degree(&self, v: Var, d: u16) -> Poly {
        Poly::from_sorted(self.terms.iter().filter(|t| t.0.exp(v) <= d).cloned().collect())
    }

    /// Replaces every variable by its `k`th power.
    pub fn substitute_powers(&self, k: u16) -> Poly {
        if k == 1 {
            return self.clone();
        }
        Poly::from_terms(self.terms.iter().map(|(m, c)| (m.scale_exps(k), c.clone())).collect())
    }

    /// Replaces `v` by `1/v` and clears the denominator: returns `v^deg * p(1/v)`.
    pub fn reverse_in(&self, v: Var) -> (Poly, u16) {
        let d = self.degree_in(v);
        let terms = self.terms.iter().map(|(m, c)| (m.with_exp(v, d - m.exp(v)), c.clone())).collect();
        (Poly::from_terms(terms), d)
    }

    pub fn map_monos(&self, f: impl Fn(&Mono) -> Mono) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (f(m), c.clone())).collect())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                m.fmt_body(f)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Poly {
        Poly::var(Var::Q)
    }
    fn t() -> Poly {
        Poly::var(Var::T)
    }

    #[test]
    fn graded_lex_leading_term() {
        let p = Poly::one().add(&q().mul(&t())).add(&q().pow(2));
        let (m, _) = p.lead().unwrap();
        assert_eq!(m.exp(Var::Q), 2);
        assert_eq!(p.to_string(), "1 + q*t + q^2");
    }

    #[test]
    fn render_signs() {
        let p = Poly::one().sub(&q().mul(&t()));
        assert_eq!(p.to_string(), "1 - q*t");
        assert_eq!(p.neg().to_string(), "-1 + q*t");
        assert_eq!(q().scale(&Int::from(-3)).to_string(), "-3*q");
    }

    #[test]
    fn exact_division() {
        let a = Poly::one().sub(&q().pow(2));
        let b = Poly::one().sub(&q());
        assert_eq!(a.div_exact(&b).unwrap(), Poly::one().add(&q()));
        assert!(b.div_exact(&a).is_none());
        let f = q().add(&t()).pow(3).mul(&q().sub(&Poly::int(2)));
        assert_eq!(f.div_exact(&q().add(&t())).unwrap(), q().add(&t()).pow(2).mul(&q().sub(&Poly::int(2))));
        assert!(f.div_exact(&q().add(&Poly::int(2))).is_none());
    }

    #[test]
    fn eval_and_compose() {
        let p = q().pow(2).add(&q().mul(&t()));
        assert_eq!(p.eval_var(Var::Q, &Int::from(2)), Poly::int(4).add(&t().scale(&Int::from(2))));
        assert_eq!(p.compose_var(Var::T, &q()), q().pow(2).scale(&Int::from(2)));
        let c = p.coeffs_in(Var::Q);
        assert_eq!(Poly::from_coeffs_in(Var::Q, &c), p);
    }
}
