//! The commutation of `Θ̃(z,v)` with `T_u`, and the reciprocities it implies.

use super::super::ops::{
    at, at_v1, at_x, d_e, d_h, eperp, exp_coeff, hperp, m, mac, operands, partitions, sign, th_e, th_h, total, tt,
    tt_inv,
};
use super::super::{Bounds, Check, Comparison, Instance};
use crate::error::Result;
use crate::macdonald::{one_minus_v_product, stats};
use crate::qfield::{Rat, Var};
use crate::symfunc::{e, h, Partition};

const TAG: &str = "theta";

fn v() -> Rat {
    Rat::var(Var::V)
}

fn main_identity(b: &Bounds) -> Vec<Instance> {
    let n = b.n as i64;
    let mut out = Vec::new();
    for k in 0..=n {
        for d in 0..=(n - k) as u32 {
            for op in operands(d) {
                for j in 0..=n - k {
                    let op = op.clone();
                    out.push(Instance::new(format!("{}, u^{j} z^{k}", op.label()), move || {
                        let f = op.get()?;
                        let mut lhs = Vec::new();
                        for a in 0..=k {
                            lhs.push(tt_inv(a, &hperp(j, &tt(k - a, &f)?))?);
                        }
                        let mut rhs = Vec::new();
                        if j >= k {
                            let base = hperp(j - k, &f);
                            for mm in 0..=k {
                                let c = exp_coeff(k - mm, &(v() - Rat::one())) * (Rat::zero() - v()).pow(mm);
                                rhs.push(d_e(mm, &base)?.scale(&c));
                            }
                        }
                        let direct = hperp(j, &tt(k, &f)?);
                        let mut moved = Vec::new();
                        for bb in 0..=k {
                            for nn in 0..=k - bb {
                                let mm = k - bb - nn;
                                let i = j - nn - mm;
                                if i < 0 {
                                    continue;
                                }
                                let c = exp_coeff(nn, &(v() - Rat::one())) * (Rat::zero() - v()).pow(mm);
                                moved.push(tt(bb, &d_e(mm, &hperp(i, &f))?.scale(&c))?);
                            }
                        }
                        let limit = hperp(j, &th_e(k, &f)?).scale(&sign(k));
                        Ok(vec![
                            Comparison::new(
                                "Theta~^-1 T_u Theta~ = Exp[uz(v-1)/M] Delta_uzv T_u",
                                total(lhs),
                                total(rhs),
                            ),
                            Comparison::new(
                                "at v=1: T_u Theta~ = Theta~ Exp[uz(v-1)/M] Delta_uzv T_u",
                                at_v1(&direct)?,
                                at_v1(&total(moved))?,
                            ),
                            Comparison::new("at v=1: Theta~ coefficient = (-1)^k Theta_ek", at_v1(&direct)?, limit),
                        ])
                    }));
                }
            }
        }
    }
    out
}

fn tesler_theta(b: &Bounds) -> Vec<Instance> {
    let cap = b.degree_cap() as i64;
    let mut out = Vec::new();
    for mu in partitions(0, b.n) {
        let k = mu.size() as i64;
        for mm in 0..=cap - k {
            let mu = mu.clone();
            out.push(Instance::new(format!("mu={mu}, z^{mm}"), move || {
                let hm = mac(&mu)?;
                let mut lhs = Vec::new();
                for nn in 0..=k.min(mm) {
                    let c = exp_coeff(nn, &(Rat::one() - v()));
                    lhs.push(hperp(k - nn, &tt(mm - nn, &hm)?).scale(&c));
                }
                let dmu = stats(&mu).d;
                let rhs = at_x(&h(mm), (Rat::zero() - (v() * dmu + Rat::one())) / m());
                Ok(vec![Comparison::new(
                    "Exp[uz(1-v)/M] T_u Theta~ H_mu |u^k = Exp[-zX(vD_mu+1)/M]",
                    total(lhs),
                    rhs,
                )])
            }));
        }
    }
    out
}

fn theta_reciprocity(b: &Bounds) -> Vec<Instance> {
    let mut out = Vec::new();
    for mu in partitions(0, b.n) {
        for mm in 0..=b.n as i64 {
            let mu = mu.clone();
            out.push(Instance::new(format!("mu={mu}, m={mm}"), move || {
                let lhs = hperp(mu.size() as i64, &th_e(mm, &mac(&mu)?)?);
                let rhs = at_x(&e(mm), stats(&mu).b);
                Ok(vec![Comparison::new("h_k^perp Theta_em H_mu = e_m[X B_mu]", lhs, rhs)])
            }));
        }
    }
    out
}

fn koornwinder(b: &Bounds) -> Vec<Instance> {
    let mut out = Vec::new();
    for la in partitions(0, b.n) {
        for mu in partitions(0, b.n) {
            let la = la.clone();
            out.push(Instance::new(format!("lambda={la}, mu={mu}"), move || {
                let side = |x: &Partition, y: &Partition| -> Result<Rat> {
                    let arg = v() * stats(y).d + Rat::one();
                    Ok(at(&mac(x)?, arg) * one_minus_v_product(y))
                };
                Ok(vec![Comparison::new(
                    "H_lambda[vD_mu+1] prod_mu(1-vq^it^j) = H_mu[vD_lambda+1] prod_lambda(1-vq^it^j)",
                    side(&la, &mu)?,
                    side(&mu, &la)?,
                )])
            }));
        }
    }
    out
}

fn mac_reciprocity(b: &Bounds) -> Vec<Instance> {
    let mut out = Vec::new();
    for la in partitions(1, b.n) {
        for mu in partitions(1, b.n) {
            let la = la.clone();
            out.push(Instance::new(format!("lambda={la}, mu={mu}"), move || {
                let side = |x: &Partition, y: &Partition| -> Result<Rat> {
                    let sy = stats(y);
                    Ok(at(&mac(x)?, m() * sy.b) * sy.pi)
                };
                Ok(vec![Comparison::new(
                    "Pi_mu H_lambda[M B_mu] = Pi_lambda H_mu[M B_lambda]",
                    side(&la, &mu)?,
                    side(&mu, &la)?,
                )])
            }));
        }
    }
    out
}

fn commutation_h_e(b: &Bounds) -> Vec<Instance> {
    let n = b.n as i64;
    let mut out = Vec::new();
    for d in 0..=b.n {
        for op in operands(d) {
            for j in 0..=n {
                for k in 0..=n - d as i64 {
                    let op = op.clone();
                    out.push(Instance::new(format!("{}, j={j}, k={k}", op.label()), move || {
                        let f = op.get()?;
                        let (mut a, mut bb, mut c) = (Vec::new(), Vec::new(), Vec::new());
                        for r in 0..=j {
                            a.push(th_e(k - j + r, &d_e(j - r, &hperp(r, &f))?)?);
                            bb.push(th_e(k - j + r, &eperp(r, &d_h(j - r, &f)?))?);
                            c.push(d_h(j - r, &th_h(k - j + r, &hperp(r, &f))?)?);
                        }
                        Ok(vec![
                            Comparison::new(
                                "h_j^perp Theta_ek = sum_r Theta_e(k-j+r) Delta_e(j-r) h_r^perp",
                                hperp(j, &th_e(k, &f)?),
                                total(a),
                            ),
                            Comparison::new(
                                "e_j^perp Theta_ek = sum_r Theta_e(k-j+r) e_r^perp Delta_h(j-r)",
                                eperp(j, &th_e(k, &f)?),
                                total(bb),
                            ),
                            Comparison::new(
                                "h_j^perp Theta_hk = sum_r Delta_h(j-r) Theta_h(k-j+r) h_r^perp",
                                hperp(j, &th_h(k, &f)?),
                                total(c),
                            ),
                        ])
                    }));
                }
            }
        }
    }
    out
}

fn commutation_inverse(b: &Bounds) -> Vec<Instance> {
    let n = b.n as i64;
    let mut out = Vec::new();
    for k in 0..=n {
        for d in 0..=(n - k) as u32 {
            for op in operands(d) {
                for j in 0..=n - k {
                    let op = op.clone();
                    out.push(Instance::new(format!("{}, u^{j} z^{k}", op.label()), move || {
                        let f = op.get()?;
                        let one_minus_v = Rat::one() - v();
                        let lhs_a = eperp(j, &tt(k, &f)?).scale(&sign(j));
                        let lhs_b = hperp(j, &tt_inv(k, &f)?);
                        let (mut ra, mut rb) = (Vec::new(), Vec::new());
                        for nn in 0..=k.min(j) {
                            for mm in 0..=(k - nn).min(j - nn) {
                                let c = exp_coeff(nn, &one_minus_v) * v().pow(mm);
                                let i = j - nn - mm;
                                let inner = eperp(i, &d_h(mm, &f)?).scale(&sign(i));
                                ra.push(tt(k - nn - mm, &inner)?.scale(&c));
                                let inner = tt_inv(k - nn - mm, &hperp(i, &f))?;
                                rb.push(d_h(mm, &inner)?.scale(&c));
                            }
                        }
                        Ok(vec![
                            Comparison::new(
                                "T_u^-1 Theta~ = Exp[uz(1-v)/M] Theta~ T_u^-1 Delta_uzv^-1",
                                lhs_a,
                                total(ra),
                            ),
                            Comparison::new(
                                "T_u Theta~^-1 = Exp[uz(1-v)/M] Delta_uzv^-1 Theta~^-1 T_u",
                                lhs_b,
                                total(rb),
                            ),
                        ])
                    }));
                }
            }
        }
    }
    out
}

fn right_perp(b: &Bounds) -> Vec<Instance> {
    let n = b.n as i64;
    let mut out = Vec::new();
    for d in 0..=b.n {
        for op in operands(d) {
            for j in 0..=d as i64 {
                for k in 0..=n - d as i64 {
                    let op = op.clone();
                    out.push(Instance::new(format!("{}, j={j}, k={k}", op.label()), move || {
                        let f = op.get()?;
                        let (mut a, mut bb, mut c) = (Vec::new(), Vec::new(), Vec::new());
                        for r in 0..=j {
                            let s = sign(j - r);
                            a.push(eperp(r, &d_h(j - r, &th_h(k - j + r, &f)?)?).scale(&s));
                            bb.push(d_e(j - r, &hperp(r, &th_h(k - j + r, &f)?))?.scale(&s));
                            c.push(eperp(r, &th_e(k - j + r, &d_e(j - r, &f)?)?).scale(&s));
                        }
                        Ok(vec![
                            Comparison::new(
                                "Theta_hk e_j^perp = sum_r (-1)^(j-r) e_r^perp Delta_h(j-r) Theta_h(k-j+r)",
                                th_h(k, &eperp(j, &f))?,
                                total(a),
                            ),
                            Comparison::new(
                                "Theta_hk h_j^perp = sum_r (-1)^(j-r) Delta_e(j-r) h_r^perp Theta_h(k-j+r)",
                                th_h(k, &hperp(j, &f))?,
                                total(bb),
                            ),
                            Comparison::new(
                                "Theta_ek e_j^perp = sum_r (-1)^(j-r) e_r^perp Theta_e(k-j+r) Delta_e(j-r)",
                                th_e(k, &eperp(j, &f))?,
                                total(c),
                            ),
                        ])
                    }));
                }
            }
        }
    }
    out
}

pub(super) fn checks() -> Vec<Check> {
    vec![
        Check {
            name: "main-identity",
            tag: TAG,
            statement: "Theta~(z,v)^-1 T_u Theta~(z,v) = Exp[uz(v-1)/M] Delta_uzv T_u, Theta~(z,v) = Delta_v P_(-z/M) Delta_v^-1",
            params: "F in a spanning set of degree d <= N-k, u^j z^k with j+k <= N; v adjoined, plus the v=1 specialization",
            instances: main_identity,
        },
        Check {
            name: "tesler-theta",
            tag: TAG,
            statement: "Exp[uz(1-v)/M] T_u Theta~(z,v) H_mu |u^k = Exp[-zX(vD_mu+1)/M], mu |- k",
            params: "|mu| <= N, z^m with |mu|+m <= min(2N,8); v adjoined",
            instances: tesler_theta,
        },
        Check {
            name: "theta-reciprocity",
            tag: TAG,
            statement: "h_k^perp Theta_em H_mu = e_m[X B_mu], mu |- k",
            params: "|mu| <= N, m <= N",
            instances: theta_reciprocity,
        },
        Check {
            name: "mac-koornwinder",
            tag: TAG,
            statement: "H_lambda[vD_mu+1] prod_(c in mu)(1-vq^a't^l') = H_mu[vD_lambda+1] prod_(c in lambda)(1-vq^a't^l')",
            params: "|lambda|, |mu| <= N; v adjoined",
            instances: koornwinder,
        },
        Check {
            name: "mac-reciprocity",
            tag: TAG,
            statement: "Pi_mu H_lambda[M B_mu] = Pi_lambda H_mu[M B_lambda]",
            params: "1 <= |lambda|, |mu| <= N",
            instances: mac_reciprocity,
        },
        Check {
            name: "theta-commutation-h-e",
            tag: TAG,
            statement: "h_j^perp Theta_ek = sum_r Theta_e(k-j+r) Delta_e(j-r) h_r^perp; e_j^perp Theta_ek = sum_r Theta_e(k-j+r) e_r^perp Delta_h(j-r); h_j^perp Theta_hk = sum_r Delta_h(j-r) Theta_h(k-j+r) h_r^perp",
            params: "F in a spanning set of degree d, j <= N, d+k <= N",
            instances: commutation_h_e,
        },
        Check {
            name: "theta-commutation-inverse",
            tag: TAG,
            statement: "T_u^-1 Theta~ = Exp[uz(1-v)/M] Theta~ T_u^-1 Delta_uzv^-1; T_u Theta~^-1 = Exp[uz(1-v)/M] Delta_uzv^-1 Theta~^-1 T_u",
            params: "F in a spanning set of degree d <= N-k, u^j z^k with j+k <= N; v adjoined",
            instances: commutation_inverse,
        },
        Check {
            name: "theta-right-perp",
            tag: TAG,
            statement: "Theta_hk e_j^perp = sum_r (-1)^(j-r) e_r^perp Delta_h(j-r) Theta_h(k-j+r); Theta_hk h_j^perp = sum_r (-1)^(j-r) Delta_e(j-r) h_r^perp Theta_h(k-j+r); Theta_ek e_j^perp = sum_r (-1)^(j-r) e_r^perp Theta_e(k-j+r) Delta_e(j-r)",
            params: "F in a spanning set of degree d, j <= d, d+k <= N",
            instances: right_perp,
        },
    ]
}
