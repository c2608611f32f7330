use super::super::ops::{c2, qb, qp, sign};
use super::super::{Bounds, Check, Comparison, Instance};
use crate::qfield::{qrising, Rat, Var};

const TAG: &str = "q-lemmas";

fn rsum(it: impl IntoIterator<Item = Rat>) -> Rat {
    it.into_iter().fold(Rat::zero(), |a, b| a + b)
}

fn recurrence(b: &Bounds) -> Vec<Instance> {
    let q = b.q as i64;
    let mut out = Vec::new();
    for n in 1..=q {
        for k in 0..=n {
            out.push(Instance::new(format!("n={n}, k={k}"), move || {
                let lhs = qb(n, k);
                Ok(vec![
                    Comparison::new("first recurrence", lhs.clone(), qp(k) * qb(n - 1, k) + qb(n - 1, k - 1)),
                    Comparison::new("second recurrence", lhs, qb(n - 1, k) + qp(n - k) * qb(n - 1, k - 1)),
                ])
            }));
        }
    }
    out
}

fn binomial_theorem(b: &Bounds) -> Vec<Instance> {
    (0..=b.q as i64)
        .map(|n| {
            Instance::new(format!("n={n}"), move || {
                let x = Rat::var(Var::X);
                let lhs = rsum((0..=n).map(|j| sign(j) * x.pow(j) * qp(c2(j)) * qb(n, j)));
                Ok(vec![Comparison::new("sum = (x;q)_n", lhs, qrising(&x, n as u32))])
            })
        })
        .collect()
}

fn chu_vandermonde(b: &Bounds) -> Vec<Instance> {
    let q = b.q as i64;
    let mut out = Vec::new();
    for n in 0..=q {
        for m in 0..=q {
            for k in 0..=q {
                out.push(Instance::new(format!("n={n}, m={m}, k={k}"), move || {
                    let lhs = rsum((0..=k).map(|j| qp((n - j) * (k - j)) * qb(n, j) * qb(m, k - j)));
                    Ok(vec![Comparison::new("sum = [m+n, k]", lhs, qb(m + n, k))])
                }));
            }
        }
    }
    out
}

fn first_lemma(b: &Bounds) -> Vec<Instance> {
    let q = b.q as i64;
    let mut out = Vec::new();
    for i in 1..=q {
        for a in -i..=q {
            for s in (0..=q).filter(|&s| s == 0 || s + a >= 0) {
                out.push(Instance::new(format!("i={i}, a={a}, s={s}"), move || {
                    let lhs = rsum((1..=i).map(|r| {
                        qb(i - 1, r - 1) * qb(r + s + a - 1, s - 1) * qp(c2(r) + r - i * r) * sign(i - r)
                    }));
                    let rhs = qp(c2(i) + (i - 1) * a) * qb(s + a, i + a);
                    Ok(vec![Comparison::new("alternating sum", lhs, rhs)])
                }));
            }
        }
    }
    out
}

fn elem(b: &Bounds) -> Vec<Instance> {
    let q = b.q as i64;
    let mut out = Vec::new();
    for i in 0..=q {
        for a in 0..=i {
            for bb in a.max(1)..=q {
                out.push(Instance::new(format!("i={i}, a={a}, b={bb}"), move || {
                    let lhs = rsum((a..=i).map(|c| {
                        qb(i - a, i - c) * qb(c - a + bb - 1, c - 1) * qp(c2(c) + c - i * c) * sign(i - c)
                    }));
                    let rhs = qb(bb - 1, i - 1) * qp(c2(i) - a * (i - 1));
                    Ok(vec![Comparison::new("alternating sum", lhs, rhs)])
                }));
            }
        }
    }
    out
}

fn elem2(b: &Bounds) -> Vec<Instance> {
    let q = b.q as i64;
    let mut out = Vec::new();
    for r in 0..=q {
        for k in 0..=q {
            for a in 0..=q {
                for bb in 0..=q {
                    out.push(Instance::new(format!("r={r}, k={k}, a={a}, b={bb}"), move || {
                        let lhs = rsum((0..=r).map(|s| {
                            qp(c2(r - s)) * qb(r, r - s) * qp(c2(a)) * qb(k - s, a)
                                * qp(c2(k - s) - a * (k - s - 1))
                                * qb(bb - 1, k - s - 1)
                        }));
                        let rhs = qp(c2(k - r - a)) * qb(bb - 1, a) * qb(bb + r - a - 1, k - a - 1)
                            + qp(c2(k - r - a + 1)) * qb(bb - 1, a - 1) * qb(bb + r - a, k - a);
                        Ok(vec![Comparison::new("two-term evaluation", lhs, rhs)])
                    }));
                }
            }
        }
    }
    out
}

fn elem3(b: &Bounds) -> Vec<Instance> {
    let q = b.q as i64;
    let mut out = Vec::new();
    for k in 0..=q {
        for a in 0..=q {
            for bb in 0..=q {
                out.push(Instance::new(format!("k={k}, a={a}, b={bb}"), move || {
                    let lhs = qp(c2(k - a)) * qb(bb - 1, a) * qb(bb - a - 1, k - a - 1)
                        + qp(c2(k - a + 1)) * qb(bb - 1, a - 1) * qb(bb - a, k - a);
                    let rhs = qp(c2(k - a)) * qb(k, a) * qb(bb - 1, k - 1);
                    Ok(vec![Comparison::new("two-term collapse", lhs, rhs)])
                }));
            }
        }
    }
    out
}

pub(super) fn checks() -> Vec<Check> {
    vec![
        Check {
            name: "q-recurrence",
            tag: TAG,
            statement: "[n,k] = q^k [n-1,k] + [n-1,k-1] = [n-1,k] + q^(n-k) [n-1,k-1]",
            params: "1 <= n <= qbound, 0 <= k <= n",
            instances: recurrence,
        },
        Check {
            name: "q-binomial-thm",
            tag: TAG,
            statement: "sum_j (-x)^j q^C(j,2) [n,j] = (x;q)_n",
            params: "0 <= n <= qbound",
            instances: binomial_theorem,
        },
        Check {
            name: "q-chu-vandermonde",
            tag: TAG,
            statement: "sum_j q^((n-j)(k-j)) [n,j] [m,k-j] = [m+n,k]",
            params: "0 <= n, m, k <= qbound",
            instances: chu_vandermonde,
        },
        Check {
            name: "lemma-1-4-11",
            tag: TAG,
            statement: "sum_{r=1..i} [i-1,r-1] [r+s+a-1,s-1] q^(C(r,2)+r-ir) (-1)^(i-r) = q^(C(i,2)+(i-1)a) [s+a,i+a]",
            params: "1 <= i <= qbound, -i <= a <= qbound, 0 <= s <= qbound, s = 0 or s + a >= 0",
            instances: first_lemma,
        },
        Check {
            name: "lemma-elem",
            tag: TAG,
            statement: "sum_{c=a..i} [i-a,i-c] [c-a+b-1,c-1] q^(C(c,2)+c-ic) (-1)^(i-c) = [b-1,i-1] q^(C(i,2)-a(i-1))",
            params: "0 <= a <= i <= qbound, max(a,1) <= b <= qbound",
            instances: elem,
        },
        Check {
            name: "lemma-elem2",
            tag: TAG,
            statement: "sum_s q^C(r-s,2) [r,r-s] q^C(a,2) [k-s,a] q^(C(k-s,2)-a(k-s-1)) [b-1,k-s-1] = q^C(k-r-a,2) [b-1,a] [b+r-a-1,k-a-1] + q^C(k-r-a+1,2) [b-1,a-1] [b+r-a,k-a]",
            params: "0 <= r, k, a, b <= qbound",
            instances: elem2,
        },
        Check {
            name: "lemma-elem3",
            tag: TAG,
            statement: "q^C(k-a,2) [b-1,a] [b-a-1,k-a-1] + q^C(k-a+1,2) [b-1,a-1] [b-a,k-a] = q^C(k-a,2) [k,a] [b-1,k-1]",
            params: "0 <= k, a, b <= qbound",
            instances: elem3,
        },
    ]
}
