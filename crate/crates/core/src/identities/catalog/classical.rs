//! Row Macdonald polynomials, Theta of rows, and the summation formulas built on them.

use super::super::ops::{c2, d_e, d_h, dp_e, e_qint, eperp, enk, hperp, lin, mac_row, qb, qp, sign, th_e, th_h, tp};
use super::super::{Bounds, Check, Comparison, Instance};
use crate::qfield::{qint, qint_in, Rat, Var};
use crate::symfunc::{e, h, hall, p, SymFunc};

const TAG: &str = "classical";

fn perp_hn(b: &Bounds) -> Vec<Instance> {
    let cap = b.degree_cap() as i64;
    let mut out = Vec::new();
    for n in 0..=cap {
        for j in 0..=n + 1 {
            out.push(Instance::new(format!("n={n}, j={j}"), move || {
                let hn = mac_row(n)?;
                let rest = mac_row(n - j)?;
                Ok(vec![
                    Comparison::new(
                        "e_j^perp H_(n) = q^C(j,2) [n,j] H_(n-j)",
                        eperp(j, &hn),
                        rest.scale(&(qp(c2(j)) * qb(n, j))),
                    ),
                    Comparison::new("h_j^perp H_(n) = [n,j] H_(n-j)", hperp(j, &hn), rest.scale(&qb(n, j))),
                ])
            }));
        }
    }
    out
}

fn row_coeff(j: i64, r: i64) -> Rat {
    sign(j - r) * qp(r - j * r + c2(r)) * qb(j, r)
}

fn theta_hj(b: &Bounds) -> Vec<Instance> {
    let cap = b.degree_cap() as i64;
    let mut out = Vec::new();
    for k in 1..=cap {
        for j in 1..=k {
            out.push(Instance::new(format!("k={k}, j={j}"), move || {
                let lhs = th_e(k - j, &mac_row(j)?)?;
                let by_plethysm = lin((0..=j).map(|r| (row_coeff(j, r), e_qint(k, r))).collect());
                let mut out = vec![Comparison::new("Theta_e(k-j) H_(j) = sum_r c_r e_k[X[r]_q]", lhs.clone(), by_plethysm)];
                if k + j <= cap {
                    let mut by_perp = Vec::new();
                    for r in 0..=j {
                        by_perp.push((row_coeff(j, r), hperp(r, &th_e(k, &mac_row(r)?)?)));
                    }
                    out.push(Comparison::new("Theta_e(k-j) H_(j) = sum_r c_r h_r^perp Theta_ek H_(r)", lhs, lin(by_perp)));
                }
                Ok(out)
            }));
        }
    }
    out
}

fn nabla_enk(b: &Bounds) -> Vec<Instance> {
    let cap = b.degree_cap() as i64;
    let mut out = Vec::new();
    for k in 1..=cap {
        for j in 1..=k {
            out.push(Instance::new(format!("k={k}, j={j}"), move || {
                let lhs = d_e(k, &enk(k, j))?;
                let rhs = th_h(k - j, &mac_row(j)?)?.scale(&tp(k - j));
                Ok(vec![Comparison::new("Delta_ek E_kj = t^(k-j) Theta_h(k-j) H_(j)", lhs, rhs)])
            }));
        }
    }
    out
}

fn nabla_theta_hi(b: &Bounds) -> Vec<Instance> {
    let cap = b.degree_cap() as i64;
    let mut out = Vec::new();
    for k in 1..=cap {
        for j in 1..=k + 1 {
            out.push(Instance::new(format!("k={k}, j={j}"), move || {
                let lhs = d_e(k, &th_e(k - j, &mac_row(j)?)?)?;
                let mut terms = Vec::new();
                for s in 1..=k {
                    let c = qp(c2(j)) * qb(s - 1, j - 1) * tp(k - s);
                    terms.push((c, th_h(k - s, &mac_row(s)?)?));
                }
                Ok(vec![Comparison::new(
                    "Delta_ek Theta_e(k-j) H_(j) = sum_s q^C(j,2) [s-1,j-1] t^(k-s) Theta_h(k-s) H_(s)",
                    lhs,
                    lin(terms),
                )])
            }));
        }
    }
    out
}

fn my_summation(b: &Bounds) -> Vec<Instance> {
    let cap = b.degree_cap() as i64;
    let mut out = Vec::new();
    for mm in 1..=cap {
        for l in 0..=cap - mm {
            for k in 0..=cap - mm - l {
                out.push(Instance::new(format!("m={mm}, l={l}, k={k}"), move || {
                    let lhs = hperp(k + l, &th_e(mm, &th_e(l, &mac_row(k)?)?)?);
                    let mut terms = Vec::new();
                    for r in 0..=k {
                        if mm - l - r < 0 {
                            break;
                        }
                        for bb in 1..=l + r {
                            let c = qp(c2(r)) * qb(k, r) * qb(k - r + bb - 1, k - 1) * tp(l + r - bb);
                            let f = th_h(l + r - bb, &th_e(mm - l - r, &mac_row(bb)?)?)?;
                            terms.push((c, f));
                        }
                    }
                    Ok(vec![Comparison::new(
                        "h_(k+l)^perp Theta_em Theta_el H_(k) = sum_r,b ... Theta_h(l+r-b) Theta_e(m-l-r) H_(b)",
                        lhs,
                        lin(terms),
                    )])
                }));
            }
        }
    }
    out
}

fn cor_delta_elem(b: &Bounds) -> Vec<Instance> {
    let cap = b.degree_cap() as i64;
    let mut out = Vec::new();
    for mm in 1..=cap {
        for l in 0..=mm + 1 {
            for k in 0..=b.n as i64 {
                out.push(Instance::new(format!("m={mm}, l={l}, k={k}"), move || {
                    let lhs = d_e(l, &e_qint(mm, k))?;
                    let mut terms = Vec::new();
                    for r in 0..=k {
                        if mm - l - r < 0 {
                            break;
                        }
                        for bb in 1..=l + r {
                            let c = qp(c2(r)) * qb(k, r) * qb(k - r + bb - 1, k - 1);
                            terms.push((c, th_e(mm - l - r, &d_e(l + r, &enk(l + r, bb))?)?));
                        }
                    }
                    Ok(vec![Comparison::new(
                        "Delta_el e_m[X[k]_q] = sum_r,b ... Theta_e(m-l-r) Delta_e(l+r) E_(l+r,b)",
                        lhs,
                        lin(terms),
                    )])
                }));
            }
        }
    }
    out
}

fn pairing(f: &SymFunc, a: i64, b: i64) -> Rat {
    hall(f, &e(a).mul(&h(b)))
}

/// `sum_(k=1)^s w(k) t^(s-k) Delta_h(s-k) Delta_el e_m[X[k]_q]`.
fn schroeder_sum(s: i64, l: i64, mm: i64, w: impl Fn(i64) -> Rat) -> crate::Result<SymFunc> {
    let mut terms = Vec::new();
    for k in 1..=s {
        terms.push((w(k) * tp(s - k), d_h(s - k, &d_e(l, &e_qint(mm, k))?)?));
    }
    Ok(lin(terms))
}

fn schroeder_params(b: &Bounds, min_sl: i64) -> Vec<(i64, i64, i64)> {
    let cap = b.degree_cap() as i64;
    let mut out = Vec::new();
    for mm in 1..=cap {
        for sl in min_sl..=cap {
            for s in 0..=sl {
                out.push((s, sl - s, mm));
            }
        }
    }
    out
}

fn gendelta_schroeder(b: &Bounds) -> Vec<Instance> {
    schroeder_params(b, 0)
        .into_iter()
        .map(|(s, l, mm)| {
            Instance::new(format!("s={s}, l={l}, m={mm}"), move || {
                let lhs = schroeder_sum(s, l, mm, |_| Rat::one())?;
                let base = dp_e(s - 1, &e(s + l))?;
                let mut out = Vec::new();
                for j in 0..=mm {
                    let rhs = pairing(&d_h(j, &base)?, mm - j, s + l + j - mm);
                    out.push(Comparison::new(
                        format!("j={j}: sum_k t^(s-k) <Delta_h(s-k) Delta_el e_m[X[k]_q], e_j h_(m-j)> = <Delta_hj Delta'_e(s-1) e_(s+l), e_(m-j) h_(s+l+j-m)>"),
                        pairing(&lhs, j, mm - j),
                        rhs,
                    ));
                }
                Ok(out)
            })
        })
        .collect()
}

fn delta_square(b: &Bounds) -> Vec<Instance> {
    schroeder_params(b, 1)
        .into_iter()
        .map(|(s, l, mm)| {
            Instance::new(format!("s={s}, l={l}, m={mm}"), move || {
                let lhs = schroeder_sum(s, l, mm, |k| qint(s + l) / qint(k))?;
                let c = qint_in(Var::T, s) / qint_in(Var::T, s + l);
                let base = d_e(s, &p(s + l).omega())?;
                let mut out = Vec::new();
                for j in 0..=mm {
                    let rhs = c.clone() * pairing(&d_h(j, &base)?, mm - j, s + l + j - mm);
                    out.push(Comparison::new(
                        format!("j={j}: sum_k [s+l]_q/[k]_q t^(s-k) <Delta_h(s-k) Delta_el e_m[X[k]_q], e_j h_(m-j)> = [s]_t/[s+l]_t <Delta_hj Delta_es omega p_(s+l), e_(m-j) h_(s+l+j-m)>"),
                        pairing(&lhs, j, mm - j),
                        rhs,
                    ));
                }
                Ok(out)
            })
        })
        .collect()
}

pub(super) fn checks() -> Vec<Check> {
    vec![
        Check {
            name: "perp-Hn",
            tag: TAG,
            statement: "e_j^perp H_(n) = q^C(j,2) [n,j]_q H_(n-j) and h_j^perp H_(n) = [n,j]_q H_(n-j)",
            params: "n <= min(2N,8), j <= n+1",
            instances: perp_hn,
        },
        Check {
            name: "theta-Hj",
            tag: TAG,
            statement: "Theta_e(k-j) H_(j) = sum_r (-1)^(j-r) q^(r-jr+C(r,2)) [j,r]_q e_k[X[r]_q], also with h_r^perp Theta_ek H_(r) in place of e_k[X[r]_q]",
            params: "1 <= j <= k <= min(2N,8), skewing form for k+j <= min(2N,8)",
            instances: theta_hj,
        },
        Check {
            name: "nabla-Enk",
            tag: TAG,
            statement: "Delta_ek E_(k,j) = t^(k-j) Theta_h(k-j) H_(j)",
            params: "1 <= j <= k <= min(2N,8)",
            instances: nabla_enk,
        },
        Check {
            name: "nabla-theta-Hi",
            tag: TAG,
            statement: "Delta_ek Theta_e(k-j) H_(j) = sum_(s=1)^k q^C(j,2) [s-1,j-1]_q t^(k-s) Theta_h(k-s) H_(s)",
            params: "1 <= k <= min(2N,8), 1 <= j <= k+1",
            instances: nabla_theta_hi,
        },
        Check {
            name: "my-summation",
            tag: TAG,
            statement: "h_(k+l)^perp Theta_em Theta_el H_(k) = sum_r q^C(r,2) [k,r]_q sum_(b=1)^(l+r) [k-r+b-1,k-1]_q t^(l+r-b) Theta_h(l+r-b) Theta_e(m-l-r) H_(b)",
            params: "m >= 1, m+l+k <= min(2N,8)",
            instances: my_summation,
        },
        Check {
            name: "cor-delta-elem",
            tag: TAG,
            statement: "Delta_el e_m[X[k]_q] = sum_r q^C(r,2) [k,r]_q sum_(b=1)^(l+r) [k-r+b-1,k-1]_q Theta_e(m-l-r) Delta_e(l+r) E_(l+r,b)",
            params: "1 <= m <= min(2N,8), l <= m+1, k <= N",
            instances: cor_delta_elem,
        },
        Check {
            name: "gendelta-schroeder-3-7",
            tag: TAG,
            statement: "sum_(k=1)^s t^(s-k) <Delta_h(s-k) Delta_el e_m[X[k]_q], e_j h_(m-j)> = <Delta_hj Delta'_e(s-1) e_(s+l), e_(m-j) h_(s+l+j-m)>",
            params: "1 <= m <= min(2N,8), s+l <= min(2N,8), all j <= m",
            instances: gendelta_schroeder,
        },
        Check {
            name: "delta-square-4-7",
            tag: TAG,
            statement: "sum_(k=1)^s [s+l]_q/[k]_q t^(s-k) <Delta_h(s-k) Delta_el e_m[X[k]_q], e_j h_(m-j)> = [s]_t/[s+l]_t <Delta_hj Delta_es omega(p_(s+l)), e_(m-j) h_(s+l+j-m)>",
            params: "1 <= m <= min(2N,8), 1 <= s+l <= min(2N,8), all j <= m",
            instances: delta_square,
        },
    ]
}
