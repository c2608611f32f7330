//! Multivariate polynomial gcd.
//!
//! Heuristic evaluation/interpolation gcd with a primitive PRS fallback.
//! The result is normalized to a positive leading coefficient.

use super::int::Int;
use super::poly::{Mono, Poly, Var};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

const HEU_TRIES: usize = 6;

pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return positive(b);
    }
    if b.is_zero() {
        return positive(a);
    }
    let ca = a.content().abs();
    let cb = b.content().abs();
    let ic = ca.gcd(&cb);
    if a.is_constant() || b.is_constant() {
        return Poly::constant(ic);
    }
    let ma = a.mono_content();
    let mb = b.mono_content();
    let m = ma.meet(&mb);
    let a1 = positive(&a.div_exact_int(&ca).div_mono(&ma));
    let b1 = positive(&b.div_exact_int(&cb).div_mono(&mb));
    let g = gcd_primitive(&a1, &b1);
    g.mul_mono(&m).scale(&ic)
}

/// Gcd of a polynomial list.
pub fn gcd_many<'a>(it: impl IntoIterator<Item = &'a Poly>) -> Poly {
    let mut g = Poly::zero();
    for p in it {
        g = gcd(&g, p);
        if g.is_one() {
            break;
        }
    }
    g
}

fn positive(p: &Poly) -> Poly {
    if p.lead_coeff().is_negative() {
        p.neg()
    } else {
        p.clone()
    }
}

/// Both inputs primitive, positive, with no monomial factor.
fn gcd_primitive(a: &Poly, b: &Poly) -> Poly {
    if a == b {
        return a.clone();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    let (ma, mb) = (a.vars_mask(), b.vars_mask());
    if ma & !mb != 0 {
        let v = first_var(ma & !mb);
        let c = content_in(a, v);
        return gcd(&c, b);
    }
    if mb & !ma != 0 {
        let v = first_var(mb & !ma);
        let c = content_in(b, v);
        return gcd(a, &c);
    }
    let (small, big) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    if big.div_exact(small).is_some() {
        return small.clone();
    }
    let vars: Vec<Var> = Var::ALL.iter().copied().filter(|v| ma & (1 << v.idx()) != 0).collect();
    if let Some(g) = heu_gcd(a, b, &vars) {
        return positive(&g);
    }
    positive(&prs_gcd(a, b, &vars))
}

fn first_var(mask: u8) -> Var {
    Var::ALL[mask.trailing_zeros() as usize]
}

/// Gcd of the coefficients with respect to `v`.
pub fn content_in(p: &Poly, v: Var) -> Poly {
    let cs = p.coeffs_in(v);
    let mut nz: Vec<&Poly> = cs.iter().filter(|c| !c.is_zero()).collect();
    nz.sort_by_key(|c| c.len());
    gcd_many(nz)
}

fn isqrt(x: &BigInt) -> BigInt {
    x.sqrt()
}

fn ground_lead(p: &Poly, vars: &[Var]) -> Int {
    p.terms()
        .iter()
        .max_by(|x, y| {
            let kx: Vec<u16> = vars.iter().map(|v| x.0.exp(*v)).collect();
            let ky: Vec<u16> = vars.iter().map(|v| y.0.exp(*v)).collect();
            kx.cmp(&ky)
        })
        .map(|t| t.1.clone())
        .unwrap_or(Int::ONE)
}

fn heu_gcd(f: &Poly, g: &Poly, vars: &[Var]) -> Option<Poly> {
    if f.is_zero() || g.is_zero() {
        return None;
    }
    let cf = f.content().abs();
    let cg = g.content().abs();
    let c = cf.gcd(&cg);
    let (f, g) = (f.div_exact_int(&c), g.div_exact_int(&c));
    if vars.is_empty() {
        let x = f.as_constant()?.gcd(&g.as_constant()?);
        return Some(Poly::constant(x.mul(&c)));
    }
    let x0 = vars[0];
    let fnorm = f.max_norm().to_big();
    let gnorm = g.max_norm().to_big();
    let b: BigInt = BigInt::from(2) * fnorm.clone().min(gnorm.clone()) + 29;
    let lf = ground_lead(&f, vars).to_big().abs();
    let lg = ground_lead(&g, vars).to_big().abs();
    let mut xi = b
        .clone()
        .min(BigInt::from(99) * isqrt(&b))
        .max(BigInt::from(2) * (fnorm / lf).min(gnorm / lg) + 2);
    for _ in 0..HEU_TRIES {
        let xv = Int::from_big(xi.clone());
        let ff = f.eval_var(x0, &xv);
        let gg = g.eval_var(x0, &xv);
        if !ff.is_zero() && !gg.is_zero() {
            if let Some(h) = heu_gcd(&ff, &gg, &vars[1..]) {
                let cand = primitive(&interpolate(&h, &xi, x0));
                if f.div_exact(&cand).is_some() && g.div_exact(&cand).is_some() {
                    return Some(cand.scale(&c));
                }
                if let Some(cff) = ff.div_exact(&h) {
                    let cf = interpolate(&cff, &xi, x0);
                    if let Some(cand) = f.div_exact(&cf) {
                        if g.div_exact(&cand).is_some() {
                            return Some(primitive(&cand).scale(&c));
                        }
                    }
                }
            }
        }
        xi = &xi * BigInt::from(73794) * isqrt(&isqrt(&xi)) / BigInt::from(27011);
    }
    None
}

fn primitive(p: &Poly) -> Poly {
    if p.is_zero() {
        return p.clone();
    }
    p.div_exact_int(&p.content())
}

fn interpolate(h: &Poly, xi: &BigInt, x0: Var) -> Poly {
    let half = xi / 2;
    let mut terms = Vec::new();
    for (m, c) in h.terms() {
        let mut c = c.to_big();
        let mut i: u16 = 0;
        while !c.is_zero() {
            let mut d = c.mod_floor(xi);
            if d > half {
                d -= xi;
            }
            terms.push((m.mul(&Mono::var(x0, i)), Int::from_big(d.clone())));
            c = (c - d) / xi;
            i += 1;
        }
    }
    Poly::from_terms(terms)
}

/// Recursive primitive polynomial remainder sequence gcd.
fn prs_gcd(a: &Poly, b: &Poly, vars: &[Var]) -> Poly {
    let x = match vars.iter().copied().find(|v| a.contains_var(*v) || b.contains_var(*v)) {
        Some(x) => x,
        None => return gcd(a, b),
    };
    let ca = content_in(a, x);
    let cb = content_in(b, x);
    let c = gcd(&ca, &cb);
    let mut r0 = a.div_exact(&ca).unwrap();
    let mut r1 = b.div_exact(&cb).unwrap();
    if r0.degree_in(x) < r1.degree_in(x) {
        std::mem::swap(&mut r0, &mut r1);
    }
    while !r1.is_zero() {
        if r1.degree_in(x) == 0 {
            r0 = Poly::one();
            break;
        }
        let r = pseudo_rem(&r0, &r1, x);
        r0 = r1;
        r1 = if r.is_zero() { r } else { r.div_exact(&content_in(&r, x)).unwrap() };
    }
    let pp = if r0.is_constant() { Poly::one() } else { r0.div_exact(&content_in(&r0, x)).unwrap() };
    positive(&pp.mul(&c))
}

fn pseudo_rem(a: &Poly, b: &Poly, x: Var) -> Poly {
    let db = b.degree_in(x);
    let bc = b.coeffs_in(x);
    let lb = bc[db as usize].clone();
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(x) >= db {
        let dr = r.degree_in(x);
        let lr = r.coeffs_in(x)[dr as usize].clone();
        let shift = Poly::var_pow(x, dr - db);
        r = r.mul(&lb).sub(&lr.mul(&shift).mul(b));
    }
    r
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
    fn one_minus(p: Poly) -> Poly {
        Poly::one().sub(&p)
    }

    #[test]
    fn binomial_factors() {
        let a = one_minus(q()).mul(&one_minus(q().mul(&t()))).mul(&one_minus(t().pow(2)));
        let b = one_minus(q().mul(&t())).mul(&one_minus(t())).scale(&Int::from(6));
        let g = gcd(&a, &b);
        assert_eq!(g, positive(&one_minus(q().mul(&t())).mul(&one_minus(t()))));
    }

    #[test]
    fn content_and_monomials() {
        let a = q().pow(2).mul(&t()).scale(&Int::from(4));
        let b = q().mul(&t().pow(3)).scale(&Int::from(6));
        assert_eq!(gcd(&a, &b), q().mul(&t()).scale(&Int::from(2)));
    }

    #[test]
    fn prs_agrees_with_heuristic() {
        let f = q().add(&t()).pow(2).mul(&q().sub(&t().pow(3)).add(&Poly::int(5)));
        let g = q().add(&t()).mul(&q().mul(&t()).sub(&Poly::int(7)));
        let vars = [Var::Q, Var::T];
        let h1 = positive(&heu_gcd(&f, &g, &vars).unwrap());
        let h2 = prs_gcd(&f, &g, &vars);
        assert_eq!(h1, positive(&q().add(&t())));
        assert_eq!(h2, h1);
    }
}
