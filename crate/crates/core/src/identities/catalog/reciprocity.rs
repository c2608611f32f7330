//! Consequences of `h_k^⊥ Θ_{e_m} H̃_μ = e_m[X B_μ]`: adjointness of skewing and
//! Delta operators, Pieri coefficients, and scalar product symmetries.

use super::super::ops::{alpha_p, at_x, d_e, d_h, dp_e, estar, hperp, m, mac, operands, partitions, schurs, th_e};
use super::super::{Bounds, Check, Comparison, Instance};
use crate::macdonald::{mac_expand, stats};
use crate::operators::{delta, pi_op, theta};
use crate::qfield::Rat;
use crate::symfunc::{e, eval_scalar, h, hall, perp, star, star_of, Alphabet};

const TAG: &str = "reciprocity";

fn theta_mbmu(b: &Bounds) -> Vec<Instance> {
    let cap = b.degree_cap();
    let mut out = Vec::new();
    for mu in partitions(0, b.n) {
        for n in 0..=cap - mu.size() {
            let mu = mu.clone();
            out.push(Instance::new(format!("mu={mu}, n={n}"), move || {
                let g = hperp(mu.size() as i64, &th_e(n as i64, &mac(&mu)?)?);
                let mb = Alphabet::scalar(m() * stats(&mu).b);
                let mut cmps = Vec::new();
                for (la, f) in schurs(n) {
                    let rhs = eval_scalar(&f, &mb);
                    cmps.push(Comparison::new(format!("F=s{la}"), star(&g, &f), rhs));
                }
                Ok(cmps)
            }));
        }
    }
    out
}

fn aperp_delta(b: &Bounds) -> Vec<Instance> {
    let n = b.n;
    let mut out = Vec::new();
    for k in 0..=n {
        for op in operands(k) {
            for mm in 0..=n - k {
                for d in 0..=mm {
                    let op = op.clone();
                    out.push(Instance::new(format!("{}, m={mm}, d={d}", op.label()), move || {
                        let f = op.get()?;
                        let base = hperp(k as i64, &th_e(mm as i64, &f)?);
                        let mut cmps = Vec::new();
                        for (la, a) in schurs(d) {
                            let lhs = perp(&a, &base);
                            let rhs = hperp(k as i64, &th_e((mm - d) as i64, &delta(&a.omega(), &f, false)?)?);
                            cmps.push(Comparison::new(format!("A=s{la}"), lhs, rhs));
                        }
                        Ok(cmps)
                    }));
                }
            }
        }
    }
    out
}

fn theta_factor(b: &Bounds) -> Vec<Instance> {
    let cap = b.degree_cap();
    let mut out = Vec::new();
    for k in 0..=b.n {
        for op in operands(k) {
            for l in 0..=b.n.min(cap - k) {
                for mm in 1..=cap - k - l {
                    let op = op.clone();
                    out.push(Instance::new(format!("G={}, l={l}, m={mm}", &op.label()[2..]), move || {
                        let g = op.get()?;
                        let right = hperp(k as i64, &th_e(mm as i64, &g)?);
                        let mut cmps = Vec::new();
                        for (la, f) in schurs(l) {
                            let lhs = hperp((k + l) as i64, &th_e(mm as i64, &theta(&f, &g)?)?);
                            cmps.push(Comparison::new(format!("F=s{la}"), lhs, delta(&f, &right, false)?));
                        }
                        Ok(cmps)
                    }));
                }
            }
        }
    }
    out
}

fn deltaf_pi_em(b: &Bounds) -> Vec<Instance> {
    let cap = b.degree_cap();
    let mut out = Vec::new();
    for k in 1..=b.n {
        for mm in 1..=cap - k {
            out.push(Instance::new(format!("k={k}, m={mm}"), move || {
                let pe = pi_op(&estar(mm as i64), false)?;
                let mut cmps = Vec::new();
                for (la, f) in schurs(k) {
                    let lhs = hperp(k as i64, &th_e(mm as i64, &pi_op(&star_of(&f), false)?)?);
                    cmps.push(Comparison::new(format!("F=s{la}"), lhs, delta(&f, &pe, false)?));
                }
                Ok(cmps)
            }));
        }
    }
    out
}

fn deltaf_em(b: &Bounds) -> Vec<Instance> {
    let cap = b.degree_cap();
    let mut out = Vec::new();
    for mu in partitions(0, b.n) {
        let k = mu.size();
        for l in 0..=b.n.min(cap - k) {
            for mm in 1..=cap - k - l {
                let mu = mu.clone();
                out.push(Instance::new(format!("mu={mu}, l={l}, m={mm}"), move || {
                    let hm = mac(&mu)?;
                    let em = at_x(&e(mm as i64), stats(&mu).b);
                    let mut cmps = Vec::new();
                    for (la, f) in schurs(l) {
                        let lhs = hperp((k + l) as i64, &th_e(mm as i64, &theta(&f, &hm)?)?);
                        cmps.push(Comparison::new(format!("F=s{la}"), lhs, delta(&f, &em, false)?));
                    }
                    Ok(cmps)
                }));
            }
        }
    }
    out
}

fn pieri_reciprocity(b: &Bounds) -> Vec<Instance> {
    let mut out = Vec::new();
    for nu in partitions(1, b.n) {
        for d in 0..=b.n - nu.size() {
            for mm in 1..=b.n {
                let nu = nu.clone();
                out.push(Instance::new(format!("nu={nu}, d={d}, m={mm}"), move || {
                    let pi_nu = stats(&nu).pi;
                    let mb_nu = Alphabet::scalar(m() * stats(&nu).b);
                    let mut cmps = Vec::new();
                    for (al, a) in schurs(d) {
                        let coeffs = mac_expand(&star_of(&a).mul(&mac(&nu)?))?;
                        for (la, f) in schurs(mm) {
                            let mut lhs = Rat::zero();
                            for (mu, c) in &coeffs {
                                let s = stats(mu);
                                lhs = lhs + s.pi * c.clone() * eval_scalar(&f, &Alphabet::scalar(m() * s.b));
                            }
                            let rhs = pi_nu.clone() * eval_scalar(&delta(&a, &f, false)?, &mb_nu);
                            cmps.push(Comparison::new(format!("A=s{al}, F=s{la}"), lhs, rhs));
                        }
                    }
                    Ok(cmps)
                }));
            }
        }
    }
    out
}

fn haglund_rec(b: &Bounds) -> Vec<Instance> {
    let mut out = Vec::new();
    for n in 1..=b.n {
        for k in 1..=b.n {
            out.push(Instance::new(format!("n={n}, k={k}"), move || {
                let mut cmps = Vec::new();
                for (pl, p) in schurs(n) {
                    for (ql, q) in schurs(k) {
                        let lhs = hperp(k as i64, &delta(&p, &pi_op(&star_of(&q), false)?, false)?);
                        let rhs = hperp(n as i64, &delta(&q, &pi_op(&star_of(&p), false)?, false)?);
                        cmps.push(Comparison::new(format!("P=s{pl}, Q=s{ql}"), lhs, rhs));
                    }
                }
                Ok(cmps)
            }));
        }
    }
    out
}

fn ghr_thm1(b: &Bounds) -> Vec<Instance> {
    let mut out = Vec::new();
    for n in 1..=b.n {
        for k in 1..=b.n {
            out.push(Instance::new(format!("n={n}, k={k}"), move || {
                let mut cmps = Vec::new();
                for (pl, p) in schurs(n) {
                    for (ql, q) in schurs(k) {
                        let lhs = hall(&delta(&p, &alpha_p(k as i64), false)?, &q.omega());
                        let rhs = hall(&delta(&q, &alpha_p(n as i64), false)?, &p.omega());
                        cmps.push(Comparison::new(format!("P=s{pl}, Q=s{ql}"), lhs, rhs));
                    }
                }
                Ok(cmps)
            }));
        }
    }
    out
}

fn haglund_lem(b: &Bounds) -> Vec<Instance> {
    let mut out = Vec::new();
    for n in 1..=b.n as i64 {
        for k in 1..=b.n as i64 {
            out.push(Instance::new(format!("n={n}, k={k}"), move || {
                let left = d_e(k - 1, &e(n))?;
                let mut cmps = Vec::new();
                for (ql, q) in schurs(n as u32) {
                    let rhs = hall(&delta(&q, &e(k), false)?, &h(k));
                    cmps.push(Comparison::new(format!("Q=s{ql}"), hall(&left, &q.omega()), rhs));
                }
                Ok(cmps)
            }));
        }
    }
    out
}

fn delta_prime_hh(b: &Bounds) -> Vec<Instance> {
    let cap = b.degree_cap() as i64;
    let mut out = Vec::new();
    for n in 0..=b.n as i64 {
        for k in 0..=n {
            for mm in 0..=cap - n {
                if mm + n == 0 {
                    continue;
                }
                out.push(Instance::new(format!("m={mm}, n={n}, k={k}"), move || {
                    let lhs = hall(&d_h(n, &dp_e(mm - k, &e(mm + 1))?)?, &h(mm + 1));
                    let rhs = hall(&dp_e(mm + n - k - 1, &e(mm + n))?, &h(mm).mul(&h(n)));
                    Ok(vec![Comparison::new(
                        "<Delta_hn Delta'_e(m-k) e_(m+1), h_(m+1)> = <Delta'_e(m+n-k-1) e_(m+n), h_m h_n>",
                        lhs,
                        rhs,
                    )])
                }));
            }
        }
    }
    out
}

fn ghr_cor2(b: &Bounds) -> Vec<Instance> {
    let mut out = Vec::new();
    for n in 1..=b.n as i64 {
        for k in 1..=b.n as i64 {
            out.push(Instance::new(format!("n={n}, k={k}"), move || {
                let left = d_h(k - 1, &e(n))?;
                let c = (Rat::zero() - Rat::q() * Rat::t()).pow(1 - k);
                let mut cmps = Vec::new();
                for (ql, q) in schurs(n as u32) {
                    let rhs = hall(&delta(&q, &h(k), false)?, &e(k)) * c.clone();
                    cmps.push(Comparison::new(format!("Q=s{ql}"), hall(&left, &q.omega()), rhs));
                }
                Ok(cmps)
            }));
        }
    }
    out
}

pub(super) fn checks() -> Vec<Check> {
    vec![
        Check {
            name: "theta-MBmu",
            tag: TAG,
            statement: "<h_k^perp Theta_en H_mu, F>_* = F[M B_mu], mu |- k, F in degree n",
            params: "|mu| <= N, |mu|+n <= min(2N,8), F over the Schur basis",
            instances: theta_mbmu,
        },
        Check {
            name: "aperp-delta",
            tag: TAG,
            statement: "A^perp h_k^perp Theta_em F = h_k^perp Theta_e(m-d) Delta_(omega A) F, A in degree d, F in degree k",
            params: "F in a spanning set of degree k, d <= m, k+m <= N, A over the Schur basis",
            instances: aperp_delta,
        },
        Check {
            name: "theta-factor",
            tag: TAG,
            statement: "h_(k+l)^perp Theta_em Theta_F G = Delta_F h_k^perp Theta_em G, m >= 1, G in degree k, F in degree l",
            params: "G in a spanning set of degree k <= N, l <= N, k+l+m <= min(2N,8), F over the Schur basis",
            instances: theta_factor,
        },
        Check {
            name: "deltaF-pi-em",
            tag: TAG,
            statement: "h_k^perp Theta_em Pi F^* = Delta_F Pi e_m^*, m, k >= 1, F in degree k",
            params: "1 <= k <= N, 1 <= m, k+m <= min(2N,8), F over the Schur basis",
            instances: deltaf_pi_em,
        },
        Check {
            name: "deltaF-em",
            tag: TAG,
            statement: "h_(k+l)^perp Theta_em Theta_F H_mu = Delta_F e_m[X B_mu], m >= 1, mu |- k, F in degree l",
            params: "|mu| <= N, l <= N, |mu|+l+m <= min(2N,8), F over the Schur basis",
            instances: deltaf_em,
        },
        Check {
            name: "pieri-reciprocity",
            tag: TAG,
            statement: "sum_(mu |- k+d) Pi_mu d^(A^*)_(mu,nu) F[M B_mu] = Pi_nu (Delta_A F)[M B_nu], A^* H_nu = sum_mu d^(A^*)_(mu,nu) H_mu",
            params: "1 <= |nu|, |nu|+d <= N, 1 <= m <= N, A and F over the Schur bases of degrees d and m",
            instances: pieri_reciprocity,
        },
        Check {
            name: "haglund-rec",
            tag: TAG,
            statement: "h_k^perp Delta_P Pi Q^* = h_n^perp Delta_Q Pi P^*, P in degree n, Q in degree k",
            params: "1 <= n, k <= N, P and Q over the Schur basis",
            instances: haglund_rec,
        },
        Check {
            name: "ghr-thm1",
            tag: TAG,
            statement: "<Delta_P alpha_k p_k, omega Q> = <Delta_Q alpha_n p_n, omega P>, P in degree n, Q in degree k",
            params: "1 <= n, k <= N, P and Q over the Schur basis",
            instances: ghr_thm1,
        },
        Check {
            name: "haglund-lem",
            tag: TAG,
            statement: "<Delta_e(k-1) e_n, omega Q> = <Delta_Q e_k, h_k>, Q in degree n",
            params: "1 <= n, k <= N, Q over the Schur basis",
            instances: haglund_lem,
        },
        Check {
            name: "delta-prime-hh",
            tag: TAG,
            statement: "<Delta_hn Delta'_e(m-k) e_(m+1), h_(m+1)> = <Delta'_e(m+n-k-1) e_(m+n), h_m h_n>, n >= k",
            params: "0 <= k <= n <= N, m+n <= min(2N,8), m+n >= 1",
            instances: delta_prime_hh,
        },
        Check {
            name: "ghr-cor2",
            tag: TAG,
            statement: "<Delta_h(k-1) e_n, omega Q> = (-qt)^(1-k) <Delta_Q h_k, e_k>, Q in degree n",
            params: "1 <= n, k <= N, Q over the Schur basis",
            instances: ghr_cor2,
        },
    ]
}
