use crate::error::{Error, Result};
use crate::qfield::{choose2, qbinom, Rat, Var};
use crate::symfunc::{e, plethysm, Alphabet, SymFunc};

/// `E_{n,k} = q^k Σ_r (-1)^r q^{C(r,2)} [k r]_q e_n[X(1-q^{-r})/(1-q)]`.
pub fn enk(n: u32, k: u32) -> Result<SymFunc> {
    if k < 1 || k > n {
        return Err(Error::OutOfRange(format!("E_{{n,k}} needs 1 <= k <= n, got n={n}, k={k}")));
    }
    Ok(enk_unchecked(n, k))
}

/// Same formula without the range check; `E_{0,0} = 1` and `E_{n,0} = 0` for `n ≥ 1`.
pub fn enk_unchecked(n: u32, k: u32) -> SymFunc {
    let en = e(n as i64);
    let one_minus_q = Rat::one() - Rat::q();
    let items: Vec<(Rat, SymFunc)> = (0..=k as i64)
        .map(|r| {
            let sign = if r % 2 == 0 { Rat::one() } else { Rat::int(-1) };
            let c = &(&sign * &Rat::var_pow(Var::Q, choose2(r) + k as i64)) * &qbinom(k as i64, r);
            let a = Alphabet::x_times(&(Rat::one() - Rat::var_pow(Var::Q, -r)) / &one_minus_q);
            (c, plethysm(&en, &a))
        })
        .collect();
    SymFunc::lincomb(items.iter().map(|(c, f)| (c.clone(), f)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small() {
        assert_eq!(enk(1, 1).unwrap(), e(1));
        assert!(enk(2, 0).is_err());
        assert!(enk(2, 3).is_err());
        for n in 1..=4u32 {
            let s = SymFunc::sum((1..=n).map(|k| enk(n, k).unwrap()).collect::<Vec<_>>().iter());
            assert_eq!(s, e(n as i64));
        }
    }
}
