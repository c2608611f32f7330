use super::super::ops::{at, at_x, enk, estar, e_qint, lin, m, mac, mac_row, partitions, qb};
use super::super::{Bounds, Check, Comparison, Instance};
use crate::macdonald::{one_minus_v_product, stats};
use crate::operators::{delta, delta_inverse, nabla, pi_op};
use crate::qfield::{qint, qint_in, qrising, Rat, Var};
use crate::symfunc::{e, h, hall, s, star, star_of, star_weight, Partition, SymFunc, SymTensor};

const TAG: &str = "macdonald";

fn normalization(b: &Bounds) -> Vec<Instance> {
    partitions(0, b.n)
        .into_iter()
        .map(|mu| {
            Instance::new(format!("mu={mu}"), move || {
                let lhs = crate::symfunc::perp(&h(mu.size() as i64), &mac(&mu)?);
                Ok(vec![Comparison::new("h_n^perp H_mu = 1", lhs, SymFunc::one())])
            })
        })
        .collect()
}

fn orthogonality(b: &Bounds) -> Vec<Instance> {
    let mut out = Vec::new();
    for n in 0..=b.n {
        for la in Partition::all(n) {
            for mu in Partition::all(n) {
                let la = la.clone();
                out.push(Instance::new(format!("lambda={la}, mu={mu}"), move || {
                    let lhs = star(&mac(&la)?, &mac(&mu)?);
                    let rhs = if la == mu { stats(&mu).w } else { Rat::zero() };
                    Ok(vec![Comparison::new("<H_lambda, H_mu>_* = w_mu delta", lhs, rhs)])
                }));
            }
        }
    }
    out
}

fn cauchy(b: &Bounds) -> Vec<Instance> {
    partitions(0, b.n)
        .into_iter()
        .map(|nu| {
            Instance::new(format!("pairing with H{nu}"), move || {
                let n = nu.size() as i64;
                let kernel = SymTensor::pleth_xy(&e(n), &(Rat::one() / m()));
                let h_nu = mac(&nu)?;
                let lhs = kernel.pair_right(&h_nu, star_weight);
                Ok(vec![Comparison::new("<e_n[XY/M], H_nu[Y]>_* = H_nu[X]", lhs, h_nu)])
            })
        })
        .collect()
}

fn row(b: &Bounds) -> Vec<Instance> {
    (0..=b.n as i64)
        .map(|n| {
            Instance::new(format!("n={n}"), move || {
                let c = qrising(&Rat::q(), n as u32);
                let rhs = at_x(&h(n), Rat::one() / (Rat::one() - Rat::q())).scale(&c);
                Ok(vec![Comparison::new("H_(n) = (q;q)_n h_n[X/(1-q)]", mac_row(n)?, rhs)])
            })
        })
        .collect()
}

fn one_minus_v(b: &Bounds) -> Vec<Instance> {
    partitions(0, b.n)
        .into_iter()
        .map(|mu| {
            Instance::new(format!("mu={mu}"), move || {
                let lhs = at(&mac(&mu)?, Rat::one() - Rat::var(Var::V));
                Ok(vec![Comparison::new("H_mu[1-v] = prod (1 - v q^a' t^l')", lhs, one_minus_v_product(&mu))])
            })
        })
        .collect()
}

fn hooks(b: &Bounds) -> Vec<Instance> {
    partitions(1, b.n)
        .into_iter()
        .map(|la| {
            Instance::new(format!("lambda={la}"), move || {
                let n = la.size();
                let hl = mac(&la)?;
                let bl = stats(&la).b;
                let mut out = Vec::new();
                for k in 0..n {
                    let lhs = hall(&hl, &s(&Partition::hook(n, k)));
                    let rhs = at(&e(k as i64), &bl - &Rat::one());
                    out.push(Comparison::new(format!("hook k={k}"), lhs, rhs));
                }
                for k in 0..=n as i64 {
                    let lhs = hall(&hl, &e(k).mul(&h(n as i64 - k)));
                    out.push(Comparison::new(format!("e_k h_(n-k), k={k}"), lhs, at(&e(k), bl.clone())));
                }
                Ok(out)
            })
        })
        .collect()
}

fn nabla_omegabar(b: &Bounds) -> Vec<Instance> {
    partitions(0, b.n)
        .into_iter()
        .map(|mu| {
            Instance::new(format!("mu={mu}"), move || {
                let hm = mac(&mu)?;
                let lhs = nabla(&hm.omega_bar(), false)?;
                let rhs = if mu.size() % 2 == 0 { hm } else { hm.neg() };
                Ok(vec![Comparison::new("nabla omegabar H_mu = (-1)^|mu| H_mu", lhs, rhs)])
            })
        })
        .collect()
}

fn pi_omegabar(b: &Bounds) -> Vec<Instance> {
    partitions(1, b.n)
        .into_iter()
        .map(|mu| {
            Instance::new(format!("mu={mu}"), move || {
                let hm = mac(&mu)?;
                let lhs = pi_op(&hm.omega_bar(), false)?.omega_bar();
                let rhs = nabla(&pi_op(&hm, false)?, true)?.neg();
                Ok(vec![Comparison::new("omegabar Pi omegabar F = -nabla^-1 Pi F", lhs, rhs)])
            })
        })
        .collect()
}

fn pi_family(b: &Bounds) -> Vec<Instance> {
    (1..=b.n as i64)
        .map(|n| {
            Instance::new(format!("n={n}"), move || {
                let mm = m();
                let pn = crate::symfunc::p(n);
                let pie = pi_op(&estar(n), false)?;
                let alpha = Rat::int(if n % 2 == 1 { 1 } else { -1 }) / (qint(n) * qint_in(Var::T, n));
                let mut out = vec![
                    Comparison::new("Pi e_n^* = omega p_n^*", pie.clone(), star_of(&pn).omega()),
                    Comparison::new("Pi e_n^* = alpha_n p_n / M", pie.clone(), pn.scale(&(&alpha / &mm))),
                    Comparison::new(
                        "Delta_e1 Pi e_n^* = e_n / M",
                        delta(&e(1), &pie, false)?,
                        e(n).scale(&(Rat::one() / mm.clone())),
                    ),
                ];
                let c = (Rat::zero() - Rat::q() * Rat::t()).pow(n - 1);
                let lhs = delta_inverse(&e(n), &delta(&e(n - 1), &pie, false)?, false)?.scale(&c);
                out.push(Comparison::new("(-qt)^(n-1) Delta_en^-1 Delta_e(n-1) Pi e_n^* = h_n / M", lhs, h(n).scale(&(Rat::one() / mm.clone()))));
                let scaled = pie.scale(&(qint(n) * qint_in(Var::T, n) * mm));
                out.push(Comparison::new("omega p_n = [n]_q [n]_t M Pi e_n^*", pn.omega(), scaled));
                let sum = lin((1..=n).map(|k| (qint(n) / qint(k), enk(n, k))).collect());
                out.push(Comparison::new("omega p_n = sum_k [n]_q/[k]_q E_nk", pn.omega(), sum));
                Ok(out)
            })
        })
        .collect()
}

fn enk_definition(b: &Bounds) -> Vec<Instance> {
    (0..=b.n as i64)
        .map(|n| {
            Instance::new(format!("n={n}"), move || {
                let z = Rat::var(Var::Z);
                let lhs = at_x(&e(n), (Rat::one() - z.clone()) / (Rat::one() - Rat::q()));
                let rhs = lin((0..=n)
                    .map(|k| (qrising(&z, k as u32) / qrising(&Rat::q(), k as u32), enk(n, k)))
                    .collect());
                Ok(vec![Comparison::new("e_n[X(1-z)/(1-q)] = sum_k (z;q)_k/(q;q)_k E_nk", lhs, rhs)])
            })
        })
        .collect()
}

fn enk_substitution(b: &Bounds) -> Vec<Instance> {
    let mut out = Vec::new();
    for n in 1..=b.n as i64 {
        for j in 0..=b.n as i64 {
            out.push(Instance::new(format!("n={n}, j={j}"), move || {
                let rhs = lin((1..=n).map(|k| (qb(k + j - 1, k), enk(n, k))).collect());
                Ok(vec![Comparison::new("e_n[X[j]_q] = sum_k [k+j-1,k] E_nk", e_qint(n, j), rhs)])
            }));
        }
    }
    out
}

pub(super) fn checks() -> Vec<Check> {
    vec![
        Check {
            name: "mac-normalization",
            tag: TAG,
            statement: "h_|mu|^perp H_mu = 1",
            params: "|mu| <= N",
            instances: normalization,
        },
        Check {
            name: "mac-orthogonality",
            tag: TAG,
            statement: "<H_lambda, H_mu>_* = w_mu delta_(lambda,mu)",
            params: "|lambda| = |mu| <= N",
            instances: orthogonality,
        },
        Check {
            name: "mac-cauchy",
            tag: TAG,
            statement: "e_n[XY/M] = sum_mu H_mu[X] H_mu[Y] / w_mu",
            params: "n <= N, paired in Y against every H_nu, nu |- n",
            instances: cauchy,
        },
        Check {
            name: "mac-row",
            tag: TAG,
            statement: "H_(n) = (q;q)_n h_n[X/(1-q)]",
            params: "n <= N",
            instances: row,
        },
        Check {
            name: "mac-1mv",
            tag: TAG,
            statement: "H_mu[1-v] = prod_(cells) (1 - v q^a' t^l')",
            params: "|mu| <= N",
            instances: one_minus_v,
        },
        Check {
            name: "mac-hooks",
            tag: TAG,
            statement: "<H_lambda, s_(n-k,1^k)> = e_k[B_lambda - 1] and <H_lambda, e_k h_(n-k)> = e_k[B_lambda]",
            params: "1 <= |lambda| <= N, all k",
            instances: hooks,
        },
        Check {
            name: "nabla-omegabar",
            tag: TAG,
            statement: "nabla omegabar H_mu = (-1)^|mu| H_mu",
            params: "|mu| <= N",
            instances: nabla_omegabar,
        },
        Check {
            name: "pi-omegabar",
            tag: TAG,
            statement: "omegabar Pi omegabar F = -nabla^-1 Pi F",
            params: "F = H_mu, 1 <= |mu| <= N",
            instances: pi_omegabar,
        },
        Check {
            name: "pi-family",
            tag: TAG,
            statement: "Pi e_n^* = omega p_n^*; Delta_e1 Pi e_n^* = e_n/M; (-qt)^(n-1) Delta_en^-1 Delta_e(n-1) Pi e_n^* = h_n/M; omega p_n = [n]_q [n]_t M Pi e_n^* = sum_k [n]_q/[k]_q E_nk",
            params: "1 <= n <= N",
            instances: pi_family,
        },
        Check {
            name: "enk-def",
            tag: TAG,
            statement: "e_n[X(1-z)/(1-q)] = sum_k (z;q)_k/(q;q)_k E_nk",
            params: "n <= N, z adjoined",
            instances: enk_definition,
        },
        Check {
            name: "enk-substitution",
            tag: TAG,
            statement: "e_n[X[j]_q] = sum_k [k+j-1,k] E_nk",
            params: "1 <= n <= N, 0 <= j <= N",
            instances: enk_substitution,
        },
    ]
}
