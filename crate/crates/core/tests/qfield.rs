use proptest::prelude::*;
use qtsym::qfield::{choose2, parse_rat, qbinom, qint, qrising, Poly, Rat, Var};

fn r(s: &str) -> Rat {
    parse_rat(s).unwrap()
}

fn m() -> Rat {
    r("(1-q)*(1-t)")
}

/// Number of partitions in an `a × b` box with `j` cells, summed as `Σ_j count·q^j`.
fn box_generating_function(a: u32, b: u32) -> Rat {
    fn count(rows: u32, max_part: u32, cells: u32) -> u64 {
        if cells == 0 {
            return 1;
        }
        if rows == 0 {
            return 0;
        }
        (0..=max_part.min(cells)).map(|first| count(rows - 1, first, cells - first)).sum()
    }
    let mut acc = Rat::zero();
    for j in 0..=a * b {
        let c = count(a, b, j) as i64;
        acc = acc + Rat::int(c) * Rat::var_pow(Var::Q, j as i64);
    }
    acc
}

#[test]
fn arithmetic_examples() {
    let one_minus_q = r("1-q");
    let one_minus_t = r("1-t");
    assert_eq!(&one_minus_q / &Rat::one() * (&one_minus_t / &Rat::one()), m());
    let x = r("(q+t^2)/(1-q*t)");
    assert_eq!(&x + &Rat::zero(), x);
    assert_eq!(r("1-q^2").checked_div(&r("1-q")).unwrap(), r("1+q"));
    assert!(Rat::one().checked_div(&Rat::zero()).is_err());
}

#[test]
fn qint_examples() {
    assert_eq!(qint(0), Rat::zero());
    assert_eq!(qint(1), Rat::one());
    assert_eq!(qint(3), r("1+q+q^2"));
}

#[test]
fn qbinom_examples() {
    assert_eq!(qbinom(5, 0), Rat::one());
    assert_eq!(qbinom(2, 3), Rat::zero());
    assert_eq!(qbinom(4, 2), r("1+q+2*q^2+q^3+q^4"));
    assert_eq!(qbinom(4, 2), box_generating_function(2, 2));
    assert_eq!(qbinom(-1, 0), Rat::zero());
}

#[test]
fn qrising_examples() {
    assert_eq!(qrising(&Rat::var(Var::X), 0), Rat::one());
    assert_eq!(qrising(&Rat::q(), 1), r("1-q"));
    assert_eq!(qrising(&Rat::q(), 2), r("(1-q)*(1-q^2)"));
}

#[test]
fn substitute_powers_examples() {
    assert_eq!(r("q+t").substitute_powers(2), r("q^2+t^2"));
    assert_eq!(m().substitute_powers(2), r("(1-q^2)*(1-t^2)"));
    assert_eq!(qint(3).substitute_powers(2), r("1+q^2+q^4"));
    assert_eq!(qint(3).substitute_powers(2), r("(1-q^6)/(1-q^2)"));
}

#[test]
fn invert_qt_examples() {
    assert_eq!(Rat::q().invert_qt(), r("1/q"));
    assert_eq!(r("1+q").invert_qt(), r("(q+1)/q"));
    assert_eq!(m().invert_qt(), &m() / &r("q*t"));
}

#[test]
fn canonical_rendering() {
    assert_eq!(r("1-q*t").to_string(), "1 - q*t");
    let f = r("(1+q)/(1-t)");
    assert_eq!(r(&f.to_string()), f);
    assert!(!r("3").to_string().contains('/'));
}

#[test]
fn q_recurrence_up_to_twelve() {
    for n in 1..=12 {
        for k in 0..=n {
            let rhs = Rat::var_pow(Var::Q, k) * qbinom(n - 1, k) + qbinom(n - 1, k - 1);
            assert_eq!(qbinom(n, k), rhs, "n={n}, k={k}");
        }
    }
}

#[test]
fn q_binomial_theorem_up_to_ten() {
    let x = Rat::var(Var::X);
    for n in 0..=10u32 {
        let mut lhs = Rat::zero();
        for j in 0..=n as i64 {
            let sign = if j % 2 == 0 { Rat::one() } else { Rat::int(-1) };
            lhs = lhs + sign * x.pow(j) * Rat::var_pow(Var::Q, choose2(j)) * qbinom(n as i64, j);
        }
        assert_eq!(lhs, qrising(&x, n), "n={n}");
    }
}

#[test]
fn q_chu_vandermonde_up_to_eight() {
    for mm in 0..=8i64 {
        for n in 0..=8i64 {
            for k in 0..=8i64 {
                let mut lhs = Rat::zero();
                for j in 0..=k {
                    lhs = lhs + Rat::var_pow(Var::Q, (mm - j) * (k - j)) * qbinom(mm, j) * qbinom(n, k - j);
                }
                assert_eq!(lhs, qbinom(mm + n, k), "m={mm}, n={n}, k={k}");
            }
        }
    }
}

fn small_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((-3i64..=3, 0u16..3, 0u16..3), 0..4).prop_map(|terms| {
        terms.into_iter().fold(Poly::zero(), |acc, (c, a, b)| {
            acc.add(&Poly::int(c).mul(&Poly::var_pow(Var::Q, a)).mul(&Poly::var_pow(Var::T, b)))
        })
    })
}

fn small_rat() -> impl Strategy<Value = Rat> {
    (small_poly(), small_poly()).prop_filter_map("nonzero denominator", |(n, d)| Rat::new(n, d).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normalization_is_idempotent(x in small_rat()) {
        let again = Rat::new(x.num().clone(), x.den().clone()).unwrap();
        prop_assert_eq!(&again, &x);
        prop_assert!(x.den().lead_coeff() > qtsym::qfield::Int::ZERO);
    }

    #[test]
    fn scaled_fraction_normalizes_to_same(x in small_rat(), c in small_poly()) {
        prop_assume!(!c.is_zero());
        let y = Rat::new(x.num().mul(&c), x.den().mul(&c)).unwrap();
        prop_assert_eq!(y, x);
    }

    #[test]
    fn field_axioms(a in small_rat(), b in small_rat(), c in small_rat()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(&a.checked_div(&b).unwrap() * &b, a);
        }
    }

    #[test]
    fn substitute_powers_is_multiplicative(a in small_rat(), b in small_rat(), k in 1u16..4) {
        prop_assert_eq!((&a * &b).substitute_powers(k), &a.substitute_powers(k) * &b.substitute_powers(k));
    }

    #[test]
    fn invert_qt_is_an_involution(a in small_rat()) {
        prop_assert_eq!(a.invert_qt().invert_qt(), a);
    }

    #[test]
    fn parse_round_trips_rendering(a in small_rat()) {
        prop_assert_eq!(parse_rat(&a.to_string()).unwrap(), a);
    }
}
