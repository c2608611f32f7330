//! Identities around `Delta'_e(k-1) e_(m+k)` at `t = 0`.

use super::super::ops::{c2, d_e, d_h, dp_e, e_qint, enk, eperp, hperp, lin, mac_row, qb, qp, th_e, th_h, tp, zero};
use super::super::{Bounds, Check, Comparison, Instance};
use crate::qfield::{Rat, Var};
use crate::symfunc::{e, h, hall, SymFunc};
use crate::Result;

const TAG: &str = "t-zero";

/// `Delta'_e(k-1) e_(m+k)` at `t = 0`, with `D(0, m) = [m = 0]`.
fn dt0(k: i64, m: i64) -> Result<SymFunc> {
    if m < 0 || k < 0 {
        return Ok(zero());
    }
    if k == 0 {
        return Ok(if m == 0 { SymFunc::one() } else { zero() });
    }
    dp_e(k - 1, &e(m + k))?.eval_var(Var::T, 0)
}

fn push_coeff(k: i64, s: i64, r: i64) -> Rat {
    qp(c2(s - r)) * qb(k - r, s - r) * qb(k, r)
}

fn gen_delta_push(b: &Bounds) -> Vec<Instance> {
    let cap = b.degree_cap() as i64;
    let mut out = Vec::new();
    for k in 1..=cap {
        for mm in 0..=cap - k {
            for pp in 0..=cap - k - mm {
                for j in 0..=k + mm + pp {
                    out.push(Instance::new(format!("j={j}, m={mm}, p={pp}, k={k}"), move || {
                        let lhs = hperp(j, &th_h(pp, &th_e(mm, &mac_row(k)?)?)?.scale(&tp(pp)));
                        let mut terms = Vec::new();
                        for s in 0..=j {
                            for r in 0..=s {
                                let c = push_coeff(k, s, r);
                                if c.is_zero() || pp - j + s < 0 || mm - s + r < 0 {
                                    continue;
                                }
                                let pe = pp - j + s;
                                let inner = th_h(pe, &th_e(mm - s + r, &mac_row(k - r)?)?)?.scale(&tp(pe));
                                terms.push((c * tp(j - s), d_h(j - s, &inner)?));
                            }
                        }
                        Ok(vec![Comparison::new(
                            "h_j^perp t^p Theta_hp Theta_em H_(k) = sum_s,r ... Delta_h(j-s) t^(p-j+s) Theta_h(p-j+s) Theta_e(m-s+r) H_(k-r)",
                            lhs,
                            lin(terms),
                        )])
                    }));
                }
            }
        }
    }
    out
}

fn gen_delta_enk(b: &Bounds) -> Vec<Instance> {
    let cap = b.degree_cap() as i64;
    let mut out = Vec::new();
    for k in 1..=cap {
        for mm in 0..=cap - k {
            for pp in 0..=cap - k - mm {
                for j in 0..=k + mm + pp {
                    out.push(Instance::new(format!("j={j}, m={mm}, p={pp}, k={k}"), move || {
                        let lhs = hperp(j, &th_e(mm, &d_e(pp + k, &enk(pp + k, k))?)?);
                        let mut terms = Vec::new();
                        for s in 0..=j {
                            for r in 0..=s {
                                let c = push_coeff(k, s, r);
                                let n = pp - j + s + k - r;
                                if c.is_zero() || n < 0 || mm - s + r < 0 {
                                    continue;
                                }
                                let inner = th_e(mm - s + r, &d_e(n, &enk(n, k - r))?)?;
                                terms.push((c * tp(j - s), d_h(j - s, &inner)?));
                            }
                        }
                        Ok(vec![Comparison::new(
                            "h_j^perp Theta_em Delta_e(p+k) E_(p+k,k) = sum_s,r ... Delta_h(j-s) Theta_e(m-s+r) Delta_e(p-j+s+k-r) E_(p-j+s+k-r,k-r)",
                            lhs,
                            lin(terms),
                        )])
                    }));
                }
            }
        }
    }
    out
}

fn delta_t0(b: &Bounds) -> Vec<Instance> {
    let cap = b.degree_cap() as i64;
    let mut out = Vec::new();
    for k in 1..=cap {
        for mm in 0..=cap - k {
            out.push(Instance::new(format!("m={mm}, k={k}"), move || {
                let lhs = th_e(mm, &mac_row(k)?)?;
                let rhs = dt0(k, mm)?;
                Ok(vec![
                    Comparison::new("Theta_em H_(k) = Delta'_e(k-1) e_(m+k) at t=0", lhs.clone(), rhs.clone()),
                    Comparison::new("Theta_em H_(k) at t=0 = Delta'_e(k-1) e_(m+k) at t=0", lhs.eval_var(Var::T, 0)?, rhs),
                ])
            }));
        }
    }
    out
}

fn t0_params(b: &Bounds) -> Vec<(i64, i64, i64)> {
    let cap = b.degree_cap() as i64;
    let mut out = Vec::new();
    for k in 1..=cap {
        for mm in 0..=cap - k {
            for j in 0..=k + mm {
                out.push((j, mm, k));
            }
        }
    }
    out
}

fn delta_t0_recursion(b: &Bounds) -> Vec<Instance> {
    t0_params(b)
        .into_iter()
        .map(|(j, mm, k)| {
            Instance::new(format!("j={j}, m={mm}, k={k}"), move || {
                let lhs = hperp(j, &dt0(k, mm)?);
                let mut terms = Vec::new();
                for r in 0..=j {
                    let c = qp(c2(j - r)) * qb(k - r, j - r) * qb(k, r);
                    terms.push((c, dt0(k - r, mm - j + r)?));
                }
                Ok(vec![Comparison::new(
                    "h_j^perp D(k,m) = sum_r q^C(j-r,2) [k-r,j-r]_q [k,r]_q D(k-r,m-j+r)",
                    lhs,
                    lin(terms),
                )])
            })
        })
        .collect()
}

fn hrs_advances(b: &Bounds) -> Vec<Instance> {
    t0_params(b)
        .into_iter()
        .map(|(j, mm, k)| {
            Instance::new(format!("j={j}, m={mm}, k={k}"), move || {
                let lhs = eperp(j, &dt0(k, mm)?.omega_bar().scale(&qp(c2(mm + k) - c2(mm + 1))));
                let mut terms = Vec::new();
                for r in 0..=j {
                    let c = qp(c2(j) + r * (mm - j + r) + c2(mm + k - j) - c2(mm - j + r + 1)) * qb(k - r, j - r) * qb(k, r);
                    terms.push((c, dt0(k - r, mm - j + r)?.omega_bar()));
                }
                Ok(vec![Comparison::new(
                    "e_j^perp q^(C(m+k,2)-C(m+1,2)) omegabar D(k,m) = sum_r ... omegabar D(k-r,m-j+r)",
                    lhs,
                    lin(terms),
                )])
            })
        })
        .collect()
}

fn hrs_schur(b: &Bounds) -> Vec<Instance> {
    t0_params(b)
        .into_iter()
        .map(|(j, mm, k)| {
            Instance::new(format!("j={j}, m={mm}, k={k}"), move || {
                let lhs = eperp(j, &dt0(k, mm)?);
                let mut terms = Vec::new();
                for r in 0..=j {
                    let c = qp(c2(r)) * qb(k, r) * qb(k + j - r - 1, j - r);
                    terms.push((c, dt0(k - r, mm - j + r)?));
                }
                Ok(vec![Comparison::new(
                    "e_j^perp D(k,m) = sum_r q^C(r,2) [k,r]_q [k+j-r-1,j-r]_q D(k-r,m-j+r)",
                    lhs,
                    lin(terms),
                )])
            })
        })
        .collect()
}

fn pairing(f: &SymFunc, a: i64, b: i64) -> Rat {
    hall(f, &e(a).mul(&h(b)))
}

fn gendelta_3_4(b: &Bounds) -> Vec<Instance> {
    let cap = b.degree_cap() as i64;
    let mut out = Vec::new();
    for mm in 1..=cap {
        for l in 0..=mm {
            for pp in 0..=mm - l {
                for k in 0..=b.n as i64 {
                    for j in 0..=mm {
                        out.push(Instance::new(format!("m={mm}, k={k}, l={l}, j={j}, p={pp}"), move || {
                            let lhs = tp(pp) * pairing(&d_h(pp, &d_e(l, &e_qint(mm, k))?)?, j, mm - j);
                            let mut rhs = Rat::zero();
                            for r in 0..=k {
                                for bb in 1..=j + r {
                                    let c = qp(c2(r)) * qb(k, r) * qb(k - r + bb - 1, k - 1);
                                    if c.is_zero() || mm - j - r < 0 {
                                        continue;
                                    }
                                    let f = d_h(j + r - bb, &d_e(mm - j - r, &e_qint(pp + l, bb))?)?;
                                    rhs = rhs + c * tp(pp + j + r - bb) * pairing(&f, pp, l);
                                }
                            }
                            Ok(vec![Comparison::new(
                                "t^p <Delta_hp Delta_el e_m[X[k]_q], e_j h_(m-j)> = t^p sum_r,b ... t^(j+r-b) <Delta_h(j+r-b) Delta_e(m-j-r) e_(p+l)[X[b]_q], e_p h_l>",
                                lhs,
                                rhs,
                            )])
                        }));
                    }
                }
            }
        }
    }
    out
}

pub(super) fn checks() -> Vec<Check> {
    vec![
        Check {
            name: "gen-delta-push",
            tag: TAG,
            statement: "h_j^perp t^p Theta_hp Theta_em H_(k) = sum_(s=0)^j t^(j-s) sum_(r=0)^s q^C(s-r,2) [k-r,s-r]_q [k,r]_q Delta_h(j-s) t^(p-j+s) Theta_h(p-j+s) Theta_e(m-s+r) H_(k-r)",
            params: "k >= 1, k+m+p <= min(2N,8), j <= k+m+p",
            instances: gen_delta_push,
        },
        Check {
            name: "gen-delta-enk",
            tag: TAG,
            statement: "h_j^perp Theta_em Delta_e(p+k) E_(p+k,k) = sum_(s=0)^j t^(j-s) sum_(r=0)^s q^C(s-r,2) [k-r,s-r]_q [k,r]_q Delta_h(j-s) Theta_e(m-s+r) Delta_e(p-j+s+k-r) E_(p-j+s+k-r,k-r)",
            params: "k >= 1, k+m+p <= min(2N,8), j <= k+m+p",
            instances: gen_delta_enk,
        },
        Check {
            name: "delta-t0",
            tag: TAG,
            statement: "Theta_em H_(k) = Delta'_e(k-1) e_(m+k) at t=0",
            params: "k >= 1, m+k <= min(2N,8)",
            instances: delta_t0,
        },
        Check {
            name: "delta-t0-recursion",
            tag: TAG,
            statement: "h_j^perp D(k,m) = sum_r q^C(j-r,2) [k-r,j-r]_q [k,r]_q D(k-r,m-j+r), D(k,m) = Delta'_e(k-1) e_(m+k) at t=0",
            params: "k >= 1, m+k <= min(2N,8), j <= m+k, D(0,m) = [m=0]",
            instances: delta_t0_recursion,
        },
        Check {
            name: "hrs-advances",
            tag: TAG,
            statement: "e_j^perp q^(C(m+k,2)-C(m+1,2)) omegabar D(k,m) = sum_r q^(C(j,2)+r(m-j+r)) [k-r,j-r]_q [k,r]_q q^(C(m+k-j,2)-C(m-j+r+1,2)) omegabar D(k-r,m-j+r)",
            params: "k >= 1, m+k <= min(2N,8), j <= m+k, D(0,m) = [m=0]",
            instances: hrs_advances,
        },
        Check {
            name: "hrs-schur",
            tag: TAG,
            statement: "e_j^perp D(k,m) = sum_r q^C(r,2) [k,r]_q [k+j-r-1,j-r]_q D(k-r,m-j+r)",
            params: "k >= 1, m+k <= min(2N,8), j <= m+k, D(0,m) = [m=0]",
            instances: hrs_schur,
        },
        Check {
            name: "gendelta-3-4",
            tag: TAG,
            statement: "t^p <Delta_hp Delta_el e_m[X[k]_q], e_j h_(m-j)> = t^p sum_r q^C(r,2) [k,r]_q sum_(b=1)^(j+r) [k-r+b-1,k-1]_q t^(j+r-b) <Delta_h(j+r-b) Delta_e(m-j-r) e_(p+l)[X[b]_q], e_p h_l>",
            params: "1 <= m <= min(2N,8), l+p <= m, k <= N, j <= m",
            instances: gendelta_3_4,
        },
    ]
}
