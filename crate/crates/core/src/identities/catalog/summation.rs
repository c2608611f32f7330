//! Extended summation formulas for skewing Theta images of row Macdonald polynomials.

use super::super::ops::{c2, d_e, d_h, e_qint, enk, hperp, lin, mac_row, qb, qp, th_e, tp};
use super::super::{Bounds, Check, Comparison, Instance};

const TAG: &str = "summation";

fn delta_theta_ehk(b: &Bounds) -> Vec<Instance> {
    let cap = b.degree_cap() as i64;
    let mut out = Vec::new();
    for kk in 1..=cap {
        for ll in 0..=cap - kk {
            for jj in 0..=ll + kk + 1 {
                out.push(Instance::new(format!("J={jj}, L={ll}, K={kk}"), move || {
                    let lhs = d_e(jj, &th_e(ll, &mac_row(kk)?)?)?;
                    let mut terms = Vec::new();
                    for a in 0..=(ll + kk - jj).min(kk) {
                        for bb in 1..=jj + a {
                            let c = qp(c2(a) + c2(kk) - a * (kk - 1)) * qb(kk, a) * qb(bb - 1, kk - 1);
                            terms.push((c, th_e(ll + kk - jj - a, &d_e(jj + a, &enk(jj + a, bb))?)?));
                        }
                    }
                    Ok(vec![Comparison::new(
                        "Delta_eJ Theta_eL H_(K) = sum_a,b ... Theta_e(L+K-J-a) Delta_e(J+a) E_(J+a,b)",
                        lhs,
                        lin(terms),
                    )])
                }));
            }
        }
    }
    out
}

fn general_summation(b: &Bounds) -> Vec<Instance> {
    let cap = b.degree_cap() as i64;
    let mut out = Vec::new();
    for k in 1..=cap {
        for mm in 0..=cap - k {
            for l in 0..=cap - k - mm {
                for j in 0..=k + mm + l {
                    out.push(Instance::new(format!("j={j}, m={mm}, l={l}, k={k}"), move || {
                        let lhs = hperp(j, &th_e(mm, &th_e(l, &mac_row(k)?)?)?);
                        let mut terms = Vec::new();
                        for r in 0..=j {
                            for a in 0..=k {
                                for bb in 1..=j - r + a {
                                    let c1 = qp(c2(k - r - a)) * qb(bb - 1, a) * qb(bb + r - a - 1, k - a - 1);
                                    let c2_ = qp(c2(k - r - a + 1)) * qb(bb - 1, a - 1) * qb(bb + r - a, k - a);
                                    let c = qb(k, r) * (c1 + c2_);
                                    if c.is_zero() || mm - j + r < 0 || l + k - j - a < 0 {
                                        continue;
                                    }
                                    let n = j - r + a;
                                    let f = th_e(mm - j + r, &th_e(l + k - j - a, &d_e(n, &enk(n, bb))?)?)?;
                                    terms.push((c, f));
                                }
                            }
                        }
                        if j == k && l == 0 && mm == 0 {
                            terms.push((qp(0), mac_row(0)?));
                        }
                        Ok(vec![Comparison::new(
                            "h_j^perp Theta_em Theta_el H_(k) = [j=k][l=m=0] + sum_r,a,b ... Theta_e(m-j+r) Theta_e(l+k-j-a) Delta_e(j-r+a) E_(j-r+a,b)",
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

fn gen_sum_corollary(b: &Bounds) -> Vec<Instance> {
    let cap = b.degree_cap() as i64;
    let mut out = Vec::new();
    for mm in 1..=cap {
        for l in 0..=mm {
            for k in 1..=b.n as i64 {
                for j in 0..=mm {
                    out.push(Instance::new(format!("j={j}, l={l}, m={mm}, k={k}"), move || {
                        let lhs = hperp(j, &d_e(l, &e_qint(mm, k))?);
                        let mut terms = Vec::new();
                        for a in 0..=k {
                            for bb in 1..=j + a {
                                let c = qp(c2(k - a)) * qb(k, a) * qb(bb - 1, k - 1) * tp(j + a - bb);
                                if c.is_zero() || l + k - j - a < 0 {
                                    continue;
                                }
                                let f = d_h(j + a - bb, &d_e(l + k - j - a, &e_qint(mm - j, bb))?)?;
                                terms.push((c, f));
                            }
                        }
                        Ok(vec![Comparison::new(
                            "h_j^perp Delta_el e_m[X[k]_q] = sum_a,b ... t^(j+a-b) Delta_h(j+a-b) Delta_e(l+k-j-a) e_(m-j)[X[b]_q]",
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

pub(super) fn checks() -> Vec<Check> {
    vec![
        Check {
            name: "delta-theta-eHk",
            tag: TAG,
            statement: "Delta_eJ Theta_eL H_(K) = sum_(a=0)^K q^C(a,2) [K,a]_q sum_(b=1)^(J+a) [b-1,K-1]_q q^(C(K,2)-a(K-1)) Theta_e(L+K-J-a) Delta_e(J+a) E_(J+a,b)",
            params: "K >= 1, L+K <= min(2N,8), J <= L+K+1",
            instances: delta_theta_ehk,
        },
        Check {
            name: "general-summation",
            tag: TAG,
            statement: "h_j^perp Theta_em Theta_el H_(k) = [j=k][l=m=0] + sum_r [k,r]_q sum_a sum_(b=1)^(j-r+a) (q^C(k-r-a,2) [b-1,a]_q [b+r-a-1,k-a-1]_q + q^C(k-r-a+1,2) [b-1,a-1]_q [b+r-a,k-a]_q) Theta_e(m-j+r) Theta_e(l+k-j-a) Delta_e(j-r+a) E_(j-r+a,b)",
            params: "k >= 1, k+m+l <= min(2N,8), j <= k+m+l",
            instances: general_summation,
        },
        Check {
            name: "gen-sum-corollary",
            tag: TAG,
            statement: "h_j^perp Delta_el e_m[X[k]_q] = sum_(a=0)^k sum_(b=1)^(j+a) q^C(k-a,2) [k,a]_q [b-1,k-1]_q t^(j+a-b) Delta_h(j+a-b) Delta_e(l+k-j-a) e_(m-j)[X[b]_q]",
            params: "1 <= m <= min(2N,8), l <= m, 1 <= k <= N, j <= m",
            instances: gen_sum_corollary,
        },
    ]
}
