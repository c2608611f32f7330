//! Translation and multiplication operators `T_Y`, `P_Z` and the identities
//! relating them to `nabla` and `Delta_v`. Series in `u`, `z`, `w` are compared
//! coefficient by coefficient.

use super::super::ops::{at, at_x, d_e, estar, hperp, hstar, m, mac, operands, partitions, sign, zero};
use super::super::{Bounds, Check, Comparison, Instance};
use crate::error::Result;
use crate::macdonald::stats;
use crate::operators::{delta_v_series, nabla};
use crate::qfield::{Rat, Var};
use crate::symfunc::{e, exp_pleth, h, perp, s, translate, Alphabet, Partition, SymFunc};

const TAG: &str = "series";

fn coeff(f: &SymFunc, v: Var, k: i64) -> Result<SymFunc> {
    if k < 0 {
        return Ok(zero());
    }
    f.coeff_in(v, k as u16)
}

/// Coefficient of `u^j` in `T_{d u} F = F[X + d u]`.
fn t_coeff(f: &SymFunc, d: &Rat, j: i64) -> Result<SymFunc> {
    coeff(&translate(f, &Alphabet::scalar(d * &Rat::var(Var::U))), Var::U, j)
}

/// Coefficient of `z^k` in `P_{c z} F = Exp[c z X] F`.
fn p_coeff(f: &SymFunc, c: &Rat, k: i64) -> Result<SymFunc> {
    let z = Rat::var(Var::Z);
    let ex = exp_pleth(&Alphabet::x_times(c * &z), k.max(0) as u32);
    coeff(&ex.mul(f), Var::Z, k)
}

fn sum(items: Vec<SymFunc>) -> SymFunc {
    SymFunc::sum(items.iter())
}

fn yz_pairs() -> Vec<(&'static str, Rat, Rat)> {
    let inv_m = Rat::one() / m();
    vec![
        ("Y=u, Z=z", Rat::one(), Rat::one()),
        ("Y=u, Z=-z/M", Rat::one(), inv_m.neg()),
        ("Y=-u, Z=z/M", Rat::int(-1), inv_m),
        ("Y=qu, Z=tz", Rat::q(), Rat::t()),
    ]
}

fn commutation(b: &Bounds) -> Vec<Instance> {
    let n = b.n as i64;
    let mut out = Vec::new();
    for (idx, (label, _, _)) in yz_pairs().into_iter().enumerate() {
        for la in partitions(0, b.n) {
            for j in 0..=n {
                for k in 0..=n - j {
                    let la = la.clone();
                    out.push(Instance::new(format!("{label}, F=p{la}, u^{j} z^{k}"), move || {
                        let (_, d, c) = yz_pairs().swap_remove(idx);
                        let f = SymFunc::p(&la);
                        let lhs = t_coeff(&at_x(&h(k), c.clone()).mul(&f), &d, j)?;
                        let mut rhs = Vec::new();
                        for i in 0..=j.min(k) {
                            let scal = at(&h(i), &d * &c);
                            rhs.push(at_x(&h(k - i), c.clone()).mul(&t_coeff(&f, &d, j - i)?).scale(&scal));
                        }
                        Ok(vec![Comparison::new("T_Y P_Z F = Exp[YZ] P_Z T_Y F", lhs, sum(rhs))])
                    }));
                }
            }
        }
    }
    out
}

fn expansions(b: &Bounds) -> Vec<Instance> {
    let mut out = Vec::new();
    for la in partitions(0, b.n) {
        for j in 0..=b.n as i64 {
            let la = la.clone();
            out.push(Instance::new(format!("F=p{la}, degree {j}"), move || {
                let f = SymFunc::p(&la);
                let inv_m = Rat::one() / m();
                let mut cmps = Vec::new();
                for (label, d) in [("u", Rat::one()), ("-u", Rat::int(-1)), ("qu", Rat::q()), ("u/M", inv_m.clone())] {
                    let direct = t_coeff(&f, &d, j)?;
                    let series =
                        sum(Partition::all(j as u32).iter().map(|mu| perp(&s(mu), &f).scale(&at(&s(mu), d.clone()))).collect());
                    cmps.push(Comparison::new(format!("T_{label} = sum s_mu[Y] s_mu^perp"), direct, series));
                }
                cmps.push(Comparison::new("T_u = sum u^k h_k^perp", t_coeff(&f, &Rat::one(), j)?, hperp(j, &f)));
                let e_side = perp(&e(j), &f).scale(&sign(j));
                cmps.push(Comparison::new("T_-u = sum (-u)^k e_k^perp", t_coeff(&f, &Rat::int(-1), j)?, e_side));
                for (label, c) in [("z", Rat::one()), ("-z/M", inv_m.neg()), ("z/M", inv_m.clone())] {
                    let direct = p_coeff(&f, &c, j)?;
                    let series =
                        sum(Partition::all(j as u32).iter().map(|mu| s(mu).mul(&f).scale(&at(&s(mu), c.clone()))).collect());
                    cmps.push(Comparison::new(format!("P_{label} = sum s_mu[Z] s_mu"), direct, series));
                }
                cmps.push(Comparison::new(
                    "P_-u/M = sum (-u)^k e_k^*",
                    p_coeff(&f, &inv_m.neg(), j)?,
                    estar(j).mul(&f).scale(&sign(j)),
                ));
                cmps.push(Comparison::new("P_u/M = sum u^k h_k^*", p_coeff(&f, &inv_m, j)?, hstar(j).mul(&f)));
                Ok(cmps)
            }));
        }
    }
    out
}

fn five_term(b: &Bounds) -> Vec<Instance> {
    let mut out = Vec::new();
    for d in 0..=b.n {
        for op in operands(d) {
            for j in 0..=d as i64 {
                let op = op.clone();
                out.push(Instance::new(format!("{}, u^{j}", op.label()), move || {
                    let f = op.get()?;
                    let v = Rat::var(Var::V);
                    let lhs = nabla(&hperp(j, &nabla(&f, false)?), true)?.scale(&v.pow(j));
                    let mut rhs = Vec::new();
                    for a in 0..=j {
                        let inner = delta_v_series(&t_coeff(&f, &Rat::int(-1), j - a)?, false)?;
                        rhs.push(delta_v_series(&hperp(a, &inner), true)?);
                    }
                    Ok(vec![Comparison::new("nabla^-1 T_uv nabla = Delta_v^-1 T_u Delta_v T_-u", lhs, sum(rhs))])
                }));
            }
        }
    }
    out
}

fn five_term_dual(b: &Bounds) -> Vec<Instance> {
    let mut out = Vec::new();
    for d in 0..=b.n {
        for op in operands(d) {
            for j in 0..=(b.n - d) as i64 {
                let op = op.clone();
                out.push(Instance::new(format!("{}, u^{j}", op.label()), move || {
                    let f = op.get()?;
                    let mv = Rat::var(Var::V).neg();
                    let lhs = nabla(&estar(j).mul(&nabla(&f, true)?), false)?.scale(&mv.pow(j));
                    let mut rhs = Vec::new();
                    for a in 0..=j {
                        let bb = j - a;
                        let inner = estar(bb).mul(&delta_v_series(&f, true)?).scale(&sign(bb));
                        rhs.push(hstar(a).mul(&delta_v_series(&inner, false)?));
                    }
                    Ok(vec![Comparison::new(
                        "nabla P_(-uv/M) nabla^-1 = P_(u/M) Delta_v P_(-u/M) Delta_v^-1",
                        lhs,
                        sum(rhs),
                    )])
                }));
            }
        }
    }
    out
}

/// Coefficient of `w^b` in `P_{-w/M} T_{1/w} F`.
fn pt_w(f: &SymFunc, b: i64) -> SymFunc {
    let top = f.degree() as i64;
    sum((0..=top)
        .filter(|i| b + i >= 0)
        .map(|i| {
            let k = b + i;
            estar(k).mul(&hperp(i, f)).scale(&sign(k))
        })
        .collect())
}

fn sinverse(b: &Bounds) -> Vec<Instance> {
    let n = b.n as i64;
    let mut out = Vec::new();
    for d in 0..=b.n {
        for op in operands(d) {
            for a in 0..=n {
                for wb in -(d as i64)..=n - d as i64 {
                    let op = op.clone();
                    out.push(Instance::new(format!("{}, u^{a} w^{wb}", op.label()), move || {
                        let f = op.get()?;
                        let lhs = nabla(&hperp(a, &nabla(&pt_w(&f, wb), false)?), true)?;
                        let inv_m = Rat::one() / m();
                        let mut rhs = Vec::new();
                        for mm in 0..=a {
                            let c = at(&h(a - mm), inv_m.clone()) * sign(mm);
                            rhs.push(pt_w(&d_e(mm, &f)?, wb - a).scale(&c));
                        }
                        Ok(vec![Comparison::new(
                            "nabla^-1 T_u nabla P_(-w/M) T_(1/w) = P_(-w/M) T_(1/w) Exp[uw/M] Delta_uw",
                            lhs,
                            sum(rhs),
                        )])
                    }));
                }
            }
        }
    }
    out
}

fn tesler(b: &Bounds) -> Vec<Instance> {
    let mut out = Vec::new();
    for mu in partitions(0, b.n) {
        for deg in 0..=b.n as i64 {
            let mu = mu.clone();
            out.push(Instance::new(format!("mu={mu}, X-degree {deg}"), move || {
                let hm = mac(&mu)?;
                let shift = deg - mu.size() as i64;
                let lhs = nabla(&pt_w(&hm, shift), false)?;
                let dmu = stats(&mu).d;
                let rhs = at_x(&h(deg), (Rat::zero() - dmu) / m());
                Ok(vec![Comparison::new("nabla P_(-z/M) T_(1/z) H_mu[zX] = Exp[-zX D_mu/M]", lhs, rhs)])
            }));
        }
    }
    out
}

pub(super) fn checks() -> Vec<Check> {
    vec![
        Check {
            name: "ty-pz-commutation",
            tag: TAG,
            statement: "T_Y P_Z = Exp[YZ] P_Z T_Y",
            params: "(Y,Z) in {(u,z), (u,-z/M), (-u,z/M), (qu,tz)}, F = p_lambda with |lambda| <= N, u^j z^k with j+k <= N",
            instances: commutation,
        },
        Check {
            name: "ty-pz-expansions",
            tag: TAG,
            statement: "T_Y = sum s_mu[Y] s_mu^perp, P_Z = sum s_mu[Z] s_mu, T_u = sum u^k h_k^perp, P_(-u/M) = sum (-u)^k e_k^*",
            params: "F = p_lambda with |lambda| <= N, coefficient degree <= N",
            instances: expansions,
        },
        Check {
            name: "five-term",
            tag: TAG,
            statement: "nabla^-1 T_(uv) nabla = Delta_v^-1 T_u Delta_v T_(-u)",
            params: "F in a spanning set of degree <= N, all u^j; v adjoined",
            instances: five_term,
        },
        Check {
            name: "five-term-dual",
            tag: TAG,
            statement: "nabla P_(-uv/M) nabla^-1 = P_(u/M) Delta_v P_(-u/M) Delta_v^-1",
            params: "F in a spanning set of degree d, u^j with d+j <= N; v adjoined",
            instances: five_term_dual,
        },
        Check {
            name: "sinverse-deltaprime",
            tag: TAG,
            statement: "nabla^-1 T_u nabla P_(-1/M) T_1 F = P_(-1/M) T_1 Delta'_u F, Delta'_u = Exp[u/M] Delta_u",
            params: "graded by w: F in a spanning set of degree d <= N, u^a with a <= N, w^b with -d <= b <= N-d",
            instances: sinverse,
        },
        Check {
            name: "tesler",
            tag: TAG,
            statement: "T_(-1/z) P_(z/M) nabla^-1 Exp[-zX D_mu/M] = H_mu[zX]",
            params: "|mu| <= N, compared as nabla P_(-z/M) T_(1/z) H_mu[zX] = Exp[-zX D_mu/M] in X-degree <= N",
            instances: tesler,
        },
    ]
}
