//! Consequences of the commutation rules between skewing and Theta operators.

use super::super::ops::{alpha_p, d_e, d_h, dp_e, estar, hperp, hstar, operands, th_e, zero};
use super::super::{Bounds, Check, Comparison, Instance};
use crate::operators::{delta, pi_op};
use crate::symfunc::{e, h, hall, p};

const TAG: &str = "skewing";

fn hkperp_zero(b: &Bounds) -> Vec<Instance> {
    let mut out = Vec::new();
    for l in 0..b.n {
        for op in operands(l) {
            for mm in 1..=b.n - l {
                for k in l + 1..=l + mm {
                    let op = op.clone();
                    out.push(Instance::new(format!("{}, m={mm}, k={k}", op.label()), move || {
                        let lhs = hperp(k as i64, &th_e(mm as i64, &op.get()?)?);
                        Ok(vec![Comparison::new("h_k^perp Theta_em F = 0", lhs, zero())])
                    }));
                }
            }
        }
    }
    out
}

fn theta_delta_h(b: &Bounds) -> Vec<Instance> {
    let mut out = Vec::new();
    for n in 0..=b.n {
        for l in 0..=n {
            for op in operands(n - l) {
                let op = op.clone();
                out.push(Instance::new(format!("{}, n={n}, l={l}", op.label()), move || {
                    let f = op.get()?;
                    let (n, l) = (n as i64, l as i64);
                    let th = th_e(l, &f)?;
                    let dh = d_h(l, &f)?;
                    let mut cmps = Vec::new();
                    for k in 0..=n {
                        let lhs = hall(&th, &h(k).mul(&e(n - k)));
                        let rhs = hall(&dh, &h(k).mul(&e(n - k - l)));
                        cmps.push(Comparison::new(format!("k={k}"), lhs, rhs));
                    }
                    Ok(cmps)
                }));
            }
        }
    }
    out
}

fn hperp_basics(b: &Bounds) -> Vec<Instance> {
    let mut out = Vec::new();
    for n in 1..=b.n as i64 {
        for r in 1..=b.n as i64 {
            out.push(Instance::new(format!("n={n}, r={r}"), move || {
                let delta_rn = if r == n { h(0) } else { zero() };
                let delta_r1 = if r == 1 { e(n - 1) } else { zero() };
                Ok(vec![
                    Comparison::new("h_r^perp p_n = delta_(r,n)", hperp(r, &p(n)), delta_rn),
                    Comparison::new("h_r^perp e_n = delta_(r,1) e_(n-1)", hperp(r, &e(n)), delta_r1),
                ])
            }));
        }
    }
    out
}

fn hk_theta_en(b: &Bounds) -> Vec<Instance> {
    let cap = b.degree_cap() as i64;
    let mut out = Vec::new();
    for n in 1..=b.n as i64 {
        for mm in 0..=cap - n {
            for k in 0..=n + mm {
                out.push(Instance::new(format!("n={n}, m={mm}, k={k}"), move || {
                    let lhs = hperp(k, &th_e(mm, &e(n))?);
                    let rhs = th_e(mm - k, &d_e(k, &e(n))?)?.add(&th_e(mm - k + 1, &d_e(k - 1, &e(n - 1))?)?);
                    Ok(vec![Comparison::new(
                        "h_k^perp Theta_em e_n = Theta_e(m-k) Delta_ek e_n + Theta_e(m-k+1) Delta_e(k-1) e_(n-1)",
                        lhs,
                        rhs,
                    )])
                }));
            }
        }
    }
    out
}

fn delta_prime_en(b: &Bounds) -> Vec<Instance> {
    let cap = b.degree_cap() as i64;
    let mut out = Vec::new();
    for n in 1..=cap {
        for k in 0..n {
            out.push(Instance::new(format!("n={n}, k={k}"), move || {
                let first = th_e(k, &d_e(n - k, &e(n - k))?)?;
                let second = th_e(k - 1, &d_e(n - k + 1, &e(n - k + 1))?)?;
                Ok(vec![
                    Comparison::new(
                        "Delta_e(n-k) e_n = Theta_e(k-1) Delta_e(n-k+1) e_(n-k+1) + Theta_ek Delta_e(n-k) e_(n-k)",
                        d_e(n - k, &e(n))?,
                        second.add(&first),
                    ),
                    Comparison::new("Delta'_e(n-k-1) e_n = Theta_ek Delta_e(n-k) e_(n-k)", dp_e(n - k - 1, &e(n))?, first),
                ])
            }));
        }
    }
    out
}

fn delta_pn(b: &Bounds) -> Vec<Instance> {
    let cap = b.degree_cap() as i64;
    let mut out = Vec::new();
    for n in 1..=cap {
        for k in 0..n {
            out.push(Instance::new(format!("n={n}, k={k}"), move || {
                let lhs = d_e(n - k, &pi_op(&estar(n), false)?)?;
                let rhs = th_e(k, &d_e(n - k, &pi_op(&estar(n - k), false)?)?)?;
                Ok(vec![Comparison::new("Delta_e(n-k) Pi e_n^* = Theta_ek Delta_e(n-k) Pi e_(n-k)^*", lhs, rhs)])
            }));
        }
    }
    out
}

fn hkperp_theta_pi(b: &Bounds) -> Vec<Instance> {
    let cap = b.degree_cap() as i64;
    let mut out = Vec::new();
    for n in 1..=b.n as i64 {
        for mm in 1..=cap - n {
            for k in 0..=n.min(mm) + 1 {
                out.push(Instance::new(format!("n={n}, m={mm}, k={k}"), move || {
                    let lhs = hperp(k, &th_e(mm, &pi_op(&estar(n), false)?)?);
                    let prod = hstar(k).mul(&estar(mm - k)).mul(&estar(n - k));
                    Ok(vec![Comparison::new(
                        "h_k^perp Theta_em Pi e_n^* = Pi (h_k^* e_(m-k)^* e_(n-k)^*)",
                        lhs,
                        pi_op(&prod, false)?,
                    )])
                }));
            }
        }
    }
    out
}

fn newdinv(b: &Bounds) -> Vec<Instance> {
    let cap = b.degree_cap() as i64;
    let mut out = Vec::new();
    for n in 1..=b.n as i64 {
        for mm in 1..=cap - n {
            for k in 0..mm {
                out.push(Instance::new(format!("m={mm}, n={n}, k={k}"), move || {
                    let d = mm + n - k;
                    let lhs = hall(&d_e(d, &e(d))?, &e(k).mul(&h(n - k)).mul(&h(mm - k)));
                    let rhs = hall(&d_h(n, &dp_e(mm - k, &e(mm + 1))?)?, &h(mm + 1));
                    Ok(vec![Comparison::new(
                        "<Delta_e(m+n-k) e_(m+n-k), e_k h_(n-k) h_(m-k)> = <Delta_hn Delta'_e(m-k) e_(m+1), h_(m+1)>",
                        lhs,
                        rhs,
                    )])
                }));
            }
        }
    }
    out
}

fn bible(b: &Bounds) -> Vec<Instance> {
    let cap = b.degree_cap() as i64;
    let mut out = Vec::new();
    for a in 1..cap {
        for bb in 1..=cap - a {
            for k in 1..=a {
                out.push(Instance::new(format!("a={a}, b={bb}, k={k}"), move || {
                    let n = a + bb;
                    let inner = dp_e(n - k - 1, &e(n))?;
                    let first_l = hall(&d_e(a, &inner)?, &h(n));
                    let first_r = hall(&d_h(k, &d_e(a - k, &e(n - k))?)?, &e(n - k));
                    let second_l = hall(&dp_e(a, &inner)?, &h(n));
                    let second_r = hall(&d_h(k, &dp_e(a - k, &e(n - k))?)?, &e(n - k));
                    Ok(vec![
                        Comparison::new(
                            "<Delta_ea Delta'_e(a+b-k-1) e_(a+b), h_(a+b)> = <Delta_hk Delta_e(a-k) e_(a+b-k), e_(a+b-k)>",
                            first_l,
                            first_r,
                        ),
                        Comparison::new(
                            "<Delta'_ea Delta'_e(a+b-k-1) e_(a+b), h_(a+b)> = <Delta_hk Delta'_e(a-k) e_(a+b-k), e_(a+b-k)>",
                            second_l,
                            second_r,
                        ),
                    ])
                }));
            }
        }
    }
    out
}

fn ghr_thm2(b: &Bounds) -> Vec<Instance> {
    let cap = b.degree_cap() as i64;
    let mut out = Vec::new();
    for n in 1..=cap {
        for k in 1..=n {
            for j in 1..n {
                out.push(Instance::new(format!("n={n}, k={k}, j={j}"), move || {
                    let lhs = hperp(j, &d_e(n - k, &alpha_p(n))?);
                    let rhs = delta(&e(n - k - j).mul(&h(j)), &alpha_p(n - j), false)?;
                    Ok(vec![Comparison::new(
                        "h_j^perp Delta_e(n-k) alpha_n p_n = Delta_(e(n-k-j) h_j) alpha_(n-j) p_(n-j)",
                        lhs,
                        rhs,
                    )])
                }));
            }
        }
    }
    out
}

fn ghr_thm3(b: &Bounds) -> Vec<Instance> {
    let cap = b.degree_cap() as i64;
    let mut out = Vec::new();
    for n in 1..=cap {
        for k in 1..=n {
            for j in 1..n {
                if 2 * n - k - j > cap {
                    continue;
                }
                out.push(Instance::new(format!("n={n}, k={k}, j={j}"), move || {
                    let lhs = hperp(j, &d_h(n - k, &alpha_p(n))?);
                    let big = 2 * n - k - j;
                    let rhs = hperp(n - k, &d_h(j, &d_e(n - k - j, &alpha_p(big))?)?);
                    Ok(vec![Comparison::new(
                        "h_j^perp Delta_h(n-k) alpha_n p_n = h_(n-k)^perp Delta_hj Delta_e(n-k-j) alpha_(2n-k-j) p_(2n-k-j)",
                        lhs,
                        rhs,
                    )])
                }));
            }
        }
    }
    out
}

pub(super) fn checks() -> Vec<Check> {
    vec![
        Check {
            name: "hkperp-zero",
            tag: TAG,
            statement: "h_k^perp Theta_em F = 0 for F in degree l, m >= 1, k > l",
            params: "F in a spanning set of degree l, l+m <= N, l < k <= l+m",
            instances: hkperp_zero,
        },
        Check {
            name: "theta-delta-h",
            tag: TAG,
            statement: "<Theta_el F, h_k e_(n-k)> = <Delta_hl F, h_k e_(n-k-l)>, F in degree n-l",
            params: "F in a spanning set of degree n-l, l <= n <= N, all k <= n",
            instances: theta_delta_h,
        },
        Check {
            name: "hperp-basics",
            tag: TAG,
            statement: "h_r^perp p_n = delta_(r,n); h_r^perp e_n = delta_(r,1) e_(n-1)",
            params: "1 <= n, r <= N",
            instances: hperp_basics,
        },
        Check {
            name: "hk-theta-en",
            tag: TAG,
            statement: "h_k^perp Theta_em e_n = Theta_e(m-k) Delta_ek e_n + Theta_e(m-k+1) Delta_e(k-1) e_(n-1), n >= 1",
            params: "1 <= n <= N, n+m <= min(2N,8), k <= n+m",
            instances: hk_theta_en,
        },
        Check {
            name: "delta-prime-en",
            tag: TAG,
            statement: "Delta_e(n-k) e_n = Theta_e(k-1) Delta_e(n-k+1) e_(n-k+1) + Theta_ek Delta_e(n-k) e_(n-k), hence Delta'_e(n-k-1) e_n = Theta_ek Delta_e(n-k) e_(n-k), n > k",
            params: "0 <= k < n <= min(2N,8)",
            instances: delta_prime_en,
        },
        Check {
            name: "delta-pn",
            tag: TAG,
            statement: "Delta_e(n-k) Pi e_n^* = Theta_ek Delta_e(n-k) Pi e_(n-k)^*, n > k",
            params: "0 <= k < n <= min(2N,8)",
            instances: delta_pn,
        },
        Check {
            name: "hkperp-theta-pi",
            tag: TAG,
            statement: "h_k^perp Theta_em Pi e_n^* = Pi (h_k^* e_(m-k)^* e_(n-k)^*), m, n >= 1",
            params: "1 <= n <= N, 1 <= m, n+m <= min(2N,8), k <= min(m,n)+1",
            instances: hkperp_theta_pi,
        },
        Check {
            name: "newdinv-4-4",
            tag: TAG,
            statement: "<Delta_e(m+n-k) e_(m+n-k), e_k h_(n-k) h_(m-k)> = <Delta_hn Delta'_e(m-k) e_(m+1), h_(m+1)>, n >= 1, m > k",
            params: "1 <= n <= N, m+n <= min(2N,8), k < m",
            instances: newdinv,
        },
        Check {
            name: "bible-4-22",
            tag: TAG,
            statement: "<Delta_ea Delta'_e(a+b-k-1) e_(a+b), h_(a+b)> = <Delta_hk Delta_e(a-k) e_(a+b-k), e_(a+b-k)>, and the same with Delta'_ea and Delta'_e(a-k)",
            params: "1 <= k <= a, 1 <= b, a+b <= min(2N,8)",
            instances: bible,
        },
        Check {
            name: "ghr-thm2",
            tag: TAG,
            statement: "h_j^perp Delta_e(n-k) alpha_n p_n = Delta_(e(n-k-j) h_j) alpha_(n-j) p_(n-j), n >= k, n > j",
            params: "1 <= k <= n <= min(2N,8), 1 <= j < n",
            instances: ghr_thm2,
        },
        Check {
            name: "ghr-thm3",
            tag: TAG,
            statement: "h_j^perp Delta_h(n-k) alpha_n p_n = h_(n-k)^perp Delta_hj Delta_e(n-k-j) alpha_(2n-k-j) p_(2n-k-j), n >= k, n > j",
            params: "1 <= k <= n, 1 <= j < n, 2n-k-j <= min(2N,8)",
            instances: ghr_thm3,
        },
    ]
}
