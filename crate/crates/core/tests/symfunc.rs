use proptest::prelude::*;
use qtsym::qfield::{parse_rat, qbinom, qint, qrising, Rat, Var};
use qtsym::symfunc::{
    basis_element, e, exp_pleth, h, hall, p, perp, plethysm, s, star, star_of, to_schur, translate, Alphabet, Basis,
    Partition, SymFunc,
};
use std::collections::BTreeMap;

fn r(x: &str) -> Rat {
    parse_rat(x).unwrap()
}

fn part(parts: &[u32]) -> Partition {
    Partition::new(parts)
}

fn pp(parts: &[u32]) -> SymFunc {
    SymFunc::p(&part(parts))
}

fn schur_map(pairs: &[(&[u32], Rat)]) -> BTreeMap<Partition, Rat> {
    pairs.iter().map(|(l, c)| (part(l), c.clone())).collect()
}

#[test]
fn basis_element_examples() {
    let half = Rat::frac(1, 2);
    assert_eq!(h(2), pp(&[1, 1]).add(&pp(&[2])).scale(&half));
    assert_eq!(e(0), SymFunc::one());
    assert_eq!(h(0), SymFunc::one());
    assert_eq!(e(-1), SymFunc::zero());
    assert_eq!(s(&part(&[1])), p(1));
    assert_eq!(basis_element(Basis::E, &part(&[2, 1])), e(2).mul(&e(1)));
}

#[test]
fn to_schur_examples() {
    assert_eq!(to_schur(&pp(&[1, 1])), schur_map(&[(&[2], Rat::one()), (&[1, 1], Rat::one())]));
    assert_eq!(to_schur(&s(&part(&[2, 1]))), schur_map(&[(&[2, 1], Rat::one())]));
    assert_eq!(to_schur(&e(2)), schur_map(&[(&[1, 1], Rat::one())]));
}

#[test]
fn hall_examples() {
    assert_eq!(hall(&p(2), &p(2)), Rat::int(2));
    assert_eq!(hall(&p(2), &pp(&[1, 1])), Rat::zero());
    assert_eq!(hall(&s(&part(&[2, 1])), &s(&part(&[2, 1]))), Rat::one());
}

#[test]
fn schur_functions_are_orthonormal() {
    for n in 1..=5 {
        let parts = Partition::all(n);
        for a in &parts {
            for b in &parts {
                let expect = if a == b { Rat::one() } else { Rat::zero() };
                assert_eq!(hall(&s(a), &s(b)), expect, "{a} {b}");
            }
        }
    }
}

#[test]
fn star_examples() {
    assert_eq!(star(&p(1), &p(1)), r("(1-q)*(1-t)"));
    assert_eq!(star(&p(1), &p(2)), Rat::zero());
}

#[test]
fn perp_examples() {
    assert_eq!(perp(&h(1), &p(1)), SymFunc::one());
    for n in 1..=5i64 {
        for rr in 2..=5i64 {
            let expect = if rr == n { SymFunc::one() } else { SymFunc::zero() };
            assert_eq!(perp(&h(rr), &p(n)), expect, "r={rr}, n={n}");
        }
    }
    assert_eq!(perp(&h(1), &e(3)), e(2));
}

#[test]
fn plethysm_examples() {
    let minus_eps = Alphabet::eps_x().neg();
    for l in Partition::up_to(4) {
        let f = s(&l);
        assert_eq!(plethysm(&f, &minus_eps), f.omega());
    }
    for n in 1..=4i64 {
        for k in 0..=4i64 {
            let lhs = plethysm(&h(k), &Alphabet::scalar(qint(n)));
            assert_eq!(lhs, SymFunc::scalar(qbinom(n + k - 1, k)), "n={n}, k={k}");
        }
    }
    let geometric = Alphabet::scalar(Rat::one() / r("1-q"));
    for k in 0..=5u32 {
        let expect = Rat::var_pow(Var::Q, qtsym::qfield::choose2(k as i64)) / qrising(&Rat::q(), k);
        assert_eq!(plethysm(&e(k as i64), &geometric), SymFunc::scalar(expect), "k={k}");
    }
}

#[test]
fn omega_examples() {
    for n in 0..=6 {
        assert_eq!(e(n).omega(), h(n));
    }
    for l in Partition::up_to(5) {
        let f = s(&l);
        assert_eq!(f.omega().omega(), f);
        assert_eq!(f.omega(), s(&l.conjugate()));
    }
}

#[test]
fn translation_examples() {
    let f = pp(&[2, 1]).add(&e(3));
    assert_eq!(translate(&f, &Alphabet::scalar(Rat::zero())), f);
    assert_eq!(translate(&e(2), &Alphabet::scalar(Rat::one())), e(2).add(&e(1)));
}

#[test]
fn translation_of_row_macdonald_reads_binomials() {
    let u = Alphabet::var(Var::U);
    for n in 0..=4u32 {
        let hn = qtsym::macdonald::modified_h(&Partition::row(n)).unwrap();
        let shifted = translate(&hn, &u);
        for j in 0..=n {
            let expect = qtsym::macdonald::modified_h(&Partition::row(n - j)).unwrap().scale(&qbinom(n as i64, j as i64));
            assert_eq!(shifted.coeff_in(Var::U, j as u16).unwrap(), expect, "n={n}, j={j}");
        }
    }
}

#[test]
fn exp_examples() {
    assert_eq!(exp_pleth(&Alphabet::x(), 2), SymFunc::sum([&SymFunc::one(), &h(1), &h(2)]));
}

#[test]
fn hook_specialization_at_one_minus_v() {
    let v = Rat::var(Var::V);
    let alpha = Alphabet::scalar(Rat::one() - v.clone());
    for n in 1..=5u32 {
        for l in Partition::all(n) {
            let got = plethysm(&s(&l), &alpha);
            let expect = if l.is_hook() {
                let k = (l.len() - 1) as i64;
                (Rat::int(-1) * v.clone()).pow(k) * (Rat::one() - v.clone())
            } else {
                Rat::zero()
            };
            assert_eq!(got, SymFunc::scalar(expect), "{l}");
        }
    }
}

/// `s_{λ/μ}` at a single variable `y`: `y^{|λ/μ|}` for a horizontal strip, else 0.
fn single_variable_skew(l: &Partition, m: &Partition) -> Rat {
    if !l.contains(m) {
        return Rat::zero();
    }
    for i in 0..l.len() {
        if m.part(i) < l.part(i + 1) {
            return Rat::zero();
        }
    }
    Rat::var_pow(Var::Y, (l.size() - m.size()) as i64)
}

#[test]
fn schur_addition_formula() {
    let y = Alphabet::var(Var::Y);
    for l in Partition::up_to(4) {
        let lhs = translate(&s(&l), &y);
        let terms: Vec<(Rat, SymFunc)> =
            Partition::up_to(l.size()).into_iter().map(|m| (single_variable_skew(&l, &m), s(&m))).collect();
        let rhs = SymFunc::lincomb(terms.iter().map(|(c, f)| (c.clone(), f)));
        assert_eq!(lhs, rhs, "{l}");
    }
}

/// Integer combination of the `p_λ` with `|λ| = deg`, coefficients read cyclically from `coeffs`.
fn combo(deg: u32, coeffs: &[i64], off: usize) -> SymFunc {
    let terms: Vec<(Rat, SymFunc)> = Partition::all(deg)
        .iter()
        .enumerate()
        .map(|(i, l)| (Rat::int(coeffs[(off + i) % coeffs.len()]), SymFunc::p(l)))
        .collect();
    SymFunc::lincomb(terms.iter().map(|(c, f)| (c.clone(), f)))
}

fn alphabets() -> Vec<Alphabet> {
    vec![Alphabet::x_times(qint(2)), Alphabet::eps_x(), Alphabet::star(), Alphabet::x().plus(&Alphabet::var(Var::U))]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn plethysm_is_a_ring_homomorphism(d1 in 0u32..=2, d2 in 0u32..=2, coeffs in prop::collection::vec(-3i64..=3, 12)) {
        let f = combo(d1, &coeffs, 0);
        let g = combo(d2, &coeffs, 5);
        for a in alphabets() {
            prop_assert_eq!(plethysm(&f.mul(&g), &a), plethysm(&f, &a).mul(&plethysm(&g, &a)));
            prop_assert_eq!(plethysm(&f.add(&g), &a), plethysm(&f, &a).add(&plethysm(&g, &a)));
        }
    }

    #[test]
    fn perp_is_star_adjoint_to_star_multiplication(k in 1u32..=2, d in 0u32..=2, coeffs in prop::collection::vec(-3i64..=3, 12)) {
        let hk = combo(k, &coeffs, 0);
        let f = combo(d + k, &coeffs, 3);
        let g = combo(d, &coeffs, 7);
        let lhs = star(&perp(&hk, &f), &g);
        let rhs = star(&f, &star_of(&hk.omega()).mul(&g));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn perp_is_hall_adjoint_to_multiplication(k in 0u32..=2, d in 0u32..=2, coeffs in prop::collection::vec(-3i64..=3, 12)) {
        let a = combo(k, &coeffs, 1);
        let f = combo(d + k, &coeffs, 4);
        let g = combo(d, &coeffs, 9);
        prop_assert_eq!(hall(&perp(&a, &f), &g), hall(&f, &a.mul(&g)));
    }

    #[test]
    fn omega_is_an_involution(d in 0u32..=5, coeffs in prop::collection::vec(-3i64..=3, 8)) {
        let f = combo(d, &coeffs, 0);
        prop_assert_eq!(f.omega().omega(), f.clone());
        prop_assert_eq!(f.omega_bar().omega_bar(), f);
    }

    #[test]
    fn operations_preserve_grading(d in 1u32..=4, k in 1u32..=3, coeffs in prop::collection::vec(1i64..=3, 8)) {
        let f = combo(d, &coeffs, 0);
        prop_assert!(f.is_homogeneous() && f.degree() == d);
        let prod = f.mul(&h(k as i64));
        prop_assert!(prod.is_homogeneous() && prod.degree() == d + k);
        for a in [Alphabet::x_times(qint(3)), Alphabet::eps_x(), Alphabet::star()] {
            let g = plethysm(&f, &a);
            prop_assert!(g.is_zero() || (g.is_homogeneous() && g.degree() == d));
        }
        if k <= d {
            let g = perp(&e(k as i64), &f);
            prop_assert!(g.is_zero() || (g.is_homogeneous() && g.degree() == d - k));
        }
        let g = f.omega();
        prop_assert!(g.is_homogeneous() && g.degree() == d);
    }

    #[test]
    fn component_extraction_is_exact(coeffs in prop::collection::vec(-3i64..=3, 12)) {
        let parts = Partition::up_to(4);
        let terms: Vec<(Rat, SymFunc)> = parts.iter().enumerate().map(|(i, l)| (Rat::int(coeffs[i % 12]), SymFunc::p(l))).collect();
        let f = SymFunc::lincomb(terms.iter().map(|(c, f)| (c.clone(), f)));
        let rebuilt = SymFunc::sum((0..=4).map(|n| f.component(n)).collect::<Vec<_>>().iter());
        prop_assert_eq!(&rebuilt, &f);
        for n in 0..=4 {
            prop_assert!(f.component(n).terms().all(|(l, _)| l.size() == n));
        }
    }

    #[test]
    fn serialization_round_trips(coeffs in prop::collection::vec(-3i64..=3, 12)) {
        let parts = Partition::up_to(4);
        let terms: Vec<(Rat, SymFunc)> = parts.iter().enumerate().map(|(i, l)| (Rat::int(coeffs[i % 12]) / r("1-q*t"), SymFunc::p(l))).collect();
        let f = SymFunc::lincomb(terms.iter().map(|(c, f)| (c.clone(), f)));
        prop_assert_eq!(SymFunc::deserialize(&f.serialize()).unwrap(), f);
    }
}
