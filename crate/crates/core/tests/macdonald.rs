use qtsym::macdonald::{
    alternate_order, default_order, enk, mac_expand, mac_resum, modified_h, modified_h_gram_schmidt, stats, MacCache,
};
use qtsym::qfield::{choose2, parse_rat, qint, qrising, Rat, Var};
use qtsym::symfunc::{e, h, hall, p, plethysm, s, star, star_weight, to_schur, Alphabet, Partition, SymFunc, SymTensor};
use qtsym::Error;
use std::collections::BTreeMap;

fn r(x: &str) -> Rat {
    parse_rat(x).unwrap()
}

fn part(parts: &[u32]) -> Partition {
    Partition::new(parts)
}

/// `q^{a'} t^{l'}` for every cell, read off the diagram directly.
fn cell_monomials(mu: &Partition) -> Vec<Rat> {
    let mut out = Vec::new();
    for (i, row) in mu.parts().enumerate() {
        for j in 0..row {
            out.push(Rat::qt_pow(j as i64, i as i64));
        }
    }
    out
}

/// Elementary symmetric polynomial `e_k` of a list of field elements.
fn elementary(xs: &[Rat], k: usize) -> Rat {
    let mut es = vec![Rat::zero(); k + 1];
    es[0] = Rat::one();
    for x in xs {
        for j in (1..=k).rev() {
            es[j] = &es[j] + &(&es[j - 1] * x);
        }
    }
    es[k].clone()
}

#[test]
fn statistics_examples() {
    for n in 1..=6u32 {
        let st = stats(&Partition::row(n));
        assert_eq!(st.b, qint(n as i64));
        assert_eq!(st.t, Rat::var_pow(Var::Q, choose2(n as i64)));
    }
    assert_eq!(stats(&part(&[2, 1])).b, r("1+q+t"));
    assert_eq!(stats(&part(&[1])).w, r("(1-t)*(1-q)"));
    let empty = stats(&Partition::empty());
    assert_eq!((empty.b, empty.t, empty.pi, empty.w, empty.d), (Rat::zero(), Rat::one(), Rat::one(), Rat::one(), Rat::int(-1)));
}

#[test]
fn statistics_match_cell_enumeration() {
    let m = r("(1-q)*(1-t)");
    for mu in Partition::up_to(6).into_iter().filter(|m| !m.is_empty()) {
        let cells = cell_monomials(&mu);
        let st = stats(&mu);
        let b: Rat = cells.iter().fold(Rat::zero(), |a, c| a + c);
        let t: Rat = cells.iter().fold(Rat::one(), |a, c| a * c);
        let pi: Rat = cells.iter().skip(1).fold(Rat::one(), |a, c| a * (Rat::one() - c));
        assert_eq!(st.b, b, "{mu}");
        assert_eq!(st.t, t, "{mu}");
        assert_eq!(st.pi, pi, "{mu}");
        assert_eq!(st.d, &m * &st.b - Rat::one(), "{mu}");
        let n: u32 = mu.parts().enumerate().map(|(i, x)| i as u32 * x).sum();
        assert_eq!(st.n, n, "{mu}");
    }
}

#[test]
fn modified_h_examples() {
    assert_eq!(modified_h(&part(&[1])).unwrap(), p(1));
    let expect: BTreeMap<Partition, Rat> = [(part(&[2]), Rat::one()), (part(&[1, 1]), Rat::q())].into_iter().collect();
    assert_eq!(to_schur(&modified_h(&part(&[2])).unwrap()), expect);
    assert_eq!(modified_h(&Partition::empty()).unwrap(), SymFunc::one());
}

#[test]
fn row_shapes_are_principal_specializations() {
    let geometric = Alphabet::x_times(Rat::one() / r("1-q"));
    for n in 1..=6u32 {
        let expect = plethysm(&h(n as i64), &geometric).scale(&qrising(&Rat::q(), n));
        assert_eq!(modified_h(&Partition::row(n)).unwrap(), expect, "n={n}");
    }
}

#[test]
fn schur_coefficients_are_positive_polynomials() {
    for mu in Partition::up_to(5).into_iter().filter(|m| !m.is_empty()) {
        for (l, c) in to_schur(&modified_h(&mu).unwrap()) {
            assert!(c.is_poly(), "{mu} at {l}: {c}");
            for (_, k) in c.num().terms() {
                assert!(*k > qtsym::qfield::Int::ZERO, "{mu} at {l}: {c}");
            }
        }
    }
}

#[test]
fn one_minus_v_specialization() {
    let v = Rat::var(Var::V);
    let alpha = Alphabet::scalar(Rat::one() - v.clone());
    for mu in Partition::up_to(5) {
        let got = plethysm(&modified_h(&mu).unwrap(), &alpha);
        let expect = cell_monomials(&mu).iter().fold(Rat::one(), |a, c| a * (Rat::one() - &v * c));
        assert_eq!(got, SymFunc::scalar(expect), "{mu}");
    }
}

#[test]
fn hook_and_elementary_coefficients() {
    for mu in Partition::up_to(5).into_iter().filter(|m| !m.is_empty()) {
        let n = mu.size();
        let hm = modified_h(&mu).unwrap();
        let cells = cell_monomials(&mu);
        for k in 0..n {
            let hook = s(&Partition::hook(n, k));
            assert_eq!(hall(&hm, &hook), elementary(&cells[1..], k as usize), "{mu}, k={k}");
        }
        for k in 0..=n {
            let ekh = e(k as i64).mul(&h((n - k) as i64));
            assert_eq!(hall(&hm, &ekh), elementary(&cells, k as usize), "{mu}, k={k}");
        }
    }
}

#[test]
fn enk_examples_and_decomposition() {
    assert_eq!(enk(1, 1).unwrap(), e(1));
    assert!(enk(2, 3).is_err());
    let z = Rat::var(Var::Z);
    let alpha = Alphabet::x_times((Rat::one() - z.clone()) / r("1-q"));
    for n in 1..=5u32 {
        let lhs = plethysm(&e(n as i64), &alpha);
        let mut rhs = SymFunc::zero();
        for k in 1..=n {
            let c = qrising(&z, k) / qrising(&Rat::q(), k);
            rhs = rhs.add(&enk(n, k).unwrap().scale(&c));
        }
        assert_eq!(lhs, rhs, "n={n}");
        let total = SymFunc::sum((1..=n).map(|k| enk(n, k).unwrap()).collect::<Vec<_>>().iter());
        assert_eq!(total, e(n as i64), "n={n}");
    }
}

#[test]
fn expansion_examples() {
    let h21 = modified_h(&part(&[2, 1])).unwrap();
    let expect: BTreeMap<Partition, Rat> = [(part(&[2, 1]), Rat::one())].into_iter().collect();
    assert_eq!(mac_expand(&h21).unwrap(), expect);
    let expect: BTreeMap<Partition, Rat> = [(part(&[1]), Rat::one())].into_iter().collect();
    assert_eq!(mac_expand(&e(1)).unwrap(), expect);
    for f in [e(3), h(3), p(3), e(2).mul(&p(2)).add(&h(1))] {
        assert_eq!(mac_resum(&mac_expand(&f).unwrap()).unwrap(), f);
    }
}

#[test]
fn construction_is_independent_of_tie_order() {
    for n in 1..=4 {
        let a = modified_h_gram_schmidt(&default_order(n));
        let b = modified_h_gram_schmidt(&alternate_order(n));
        assert_eq!(a, b, "degree {n}");
    }
}

#[test]
fn macdonald_cauchy_identity() {
    // Both sides paired against H_nu in the Y alphabet under the star product.
    for n in 1..=4u32 {
        let m = r("(1-q)*(1-t)");
        let kernel = SymTensor::pleth_xy(&e(n as i64), &(Rat::one() / m));
        for nu in Partition::all(n) {
            let hn = modified_h(&nu).unwrap();
            let lhs = kernel.pair_right(&hn, star_weight);
            let mut rhs = SymFunc::zero();
            for mu in Partition::all(n) {
                let hm = modified_h(&mu).unwrap();
                let c = star(&hm, &hn) / stats(&mu).w;
                rhs = rhs.add(&hm.scale(&c));
            }
            assert_eq!(lhs, rhs, "n={n}, nu={nu}");
        }
    }
}

#[test]
fn cache_round_trip_and_tamper_detection() {
    let dir = tempfile::tempdir().unwrap();
    let cache = MacCache::open(dir.path().join("nested")).unwrap();
    let mu = part(&[3, 1]);
    let entry: BTreeMap<Partition, SymFunc> = [(mu.clone(), modified_h(&mu).unwrap())].into_iter().collect();
    cache.store(&entry).unwrap();
    assert!(cache.dir().join("3-1.sym").exists());
    assert_eq!(cache.load().unwrap(), entry);

    let path = cache.dir().join("3-1.sym");
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::write(&path, text.replacen(": ", ": 2*", 1)).unwrap();
    assert!(matches!(cache.load(), Err(Error::CacheCorrupt(m)) if m.contains("3-1")));

    // A tampered file with a matching manifest hash is caught by the normalization check.
    let bad: BTreeMap<Partition, SymFunc> = [(mu.clone(), modified_h(&mu).unwrap().scale(&Rat::int(2)))].into_iter().collect();
    cache.store(&bad).unwrap();
    assert!(matches!(cache.load(), Err(Error::CacheCorrupt(m)) if m.contains("normalization")));
}

#[test]
fn cold_cache_warms_all_partitions_up_to_five() {
    let dir = tempfile::tempdir().unwrap();
    let cache = MacCache::open(dir.path()).unwrap();
    assert_eq!(cache.warm(5).unwrap(), 18);
    let files = std::fs::read_dir(dir.path()).unwrap().filter(|f| f.as_ref().unwrap().path().extension().is_some_and(|x| x == "sym")).count();
    assert_eq!(files, 18);
    assert_eq!(cache.warm(5).unwrap(), 0);
    assert_eq!(cache.load().unwrap().len(), 18);
}
