//! Plethystic exponential and the multiplication operators `P_Z`.

use super::alphabet::{plethysm, Alphabet};
use super::sf::SymFunc;
use super::transition::h;

/// `Exp[A] = Σ_n h_n[A]`, truncated at `n ≤ maxdeg`.
pub fn exp_pleth(a: &Alphabet, maxdeg: u32) -> SymFunc {
    let parts: Vec<SymFunc> = (0..=maxdeg as i64).map(|n| plethysm(&h(n), a)).collect();
    SymFunc::sum(parts.iter())
}

/// `P_Z f = Exp[ZX]·f` for a scalar alphabet `Z`, truncated at `X`-degree `maxdeg`.
pub fn mult_series(z: &Alphabet, f: &SymFunc, maxdeg: u32) -> SymFunc {
    let zx = z.times(&Alphabet::x());
    let ex = exp_pleth(&zx, maxdeg);
    ex.mul(f).truncate_degree(maxdeg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qfield::Rat;

    #[test]
    fn exp_of_x() {
        let lhs = exp_pleth(&Alphabet::x(), 2);
        assert_eq!(lhs, SymFunc::sum([&h(0), &h(1), &h(2)]));
    }

    #[test]
    fn p_zero_is_identity() {
        let f = h(2).mul(&h(1));
        assert_eq!(mult_series(&Alphabet::scalar(Rat::zero()), &f, 5), f);
    }
}
