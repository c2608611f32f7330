use qtsym::identities::{builtin_catalog, find_check, render_json, run_all, run_check_named, select, Bounds, Status};
use qtsym::macdonald::modified_h;
use qtsym::operators::{delta, theta, theta_tilde_at_one};
use qtsym::symfunc::{e, h, perp, Partition, SymFunc};
use qtsym::Error;
use std::collections::BTreeSet;

#[test]
fn catalog_is_large_with_unique_names() {
    let catalog = builtin_catalog();
    assert_eq!(catalog.len(), 72);
    let names: BTreeSet<&str> = catalog.iter().map(|c| c.name).collect();
    assert_eq!(names.len(), catalog.len());
    for c in &catalog {
        assert!(!c.statement.trim().is_empty(), "{}", c.name);
        assert!(!c.params.trim().is_empty(), "{}", c.name);
        assert!(!c.tag.is_empty(), "{}", c.name);
    }
}

#[test]
fn selection_by_tag_and_glob() {
    assert_eq!(select(Some("q-lemmas")).unwrap().len(), 7);
    assert_eq!(select(Some("q-*")).unwrap().len(), 7);
    assert_eq!(select(Some("theta-reciprocity")).unwrap().len(), 1);
    assert_eq!(select(None).unwrap().len(), builtin_catalog().len());
    assert!(select(Some("[")).is_err());
}

#[test]
fn unknown_names_get_suggestions() {
    match find_check("theta-reciprocty") {
        Err(Error::UnknownCheck { suggestions, .. }) => assert!(suggestions.iter().any(|s| s == "theta-reciprocity")),
        other => panic!("expected an unknown-check error, got {other:?}"),
    }
    assert!(matches!(run_check_named("no-such", &Bounds::new(2, 4), 1), Err(Error::UnknownCheck { .. })));
}

#[test]
fn theta_reciprocity_at_four() {
    let r = run_check_named("theta-reciprocity", &Bounds::new(4, 8), 4).unwrap();
    let partitions_up_to_four: usize = (0..=4).map(|k| Partition::all(k).len()).sum();
    assert_eq!(r.instances, partitions_up_to_four * 5);
    assert_eq!(r.status, Status::Pass, "{:?}", r.counterexample);
}

#[test]
fn orthogonality_at_three_covers_equal_size_pairs() {
    let r = run_check_named("mac-orthogonality", &Bounds::new(3, 8), 2).unwrap();
    let pairs: usize = (0..=3).map(|k| Partition::all(k).len().pow(2)).sum();
    assert_eq!(r.instances, pairs);
    assert_eq!(r.status, Status::Pass);
}

#[test]
fn degenerate_bound_passes_everywhere() {
    let s = run_all(&Bounds::new(0, 8), None, 2, false).unwrap();
    assert_eq!(s.results.len(), builtin_catalog().len());
    assert_eq!(s.failures, 0, "{:?}", s.results.iter().find(|r| r.status != Status::Pass));
}

#[test]
fn q_lemmas_at_eight() {
    let s = run_all(&Bounds::new(0, 8), Some("q-lemmas"), 2, false).unwrap();
    assert_eq!(s.results.len(), 7);
    assert_eq!(s.failures, 0);
}

#[test]
fn results_do_not_depend_on_worker_count() {
    let b = Bounds::new(2, 5);
    let one = run_all(&b, Some("macdonald"), 1, false).unwrap();
    let four = run_all(&b, Some("macdonald"), 4, false).unwrap();
    assert_eq!(render_json(&one, false), render_json(&four, false));
    let parsed: serde_json::Value = serde_json::from_str(&render_json(&one, false)).unwrap();
    assert!(parsed["checks"].as_array().unwrap().iter().all(|c| c["ms"] == 0));
}

#[test]
fn theta_limit_reproduces_skewing_commutation() {
    // Θ_{e_k} = (-1)^k Θ̃_k at v = 1, so h_j^⊥ of the limit must match the
    // expansion Σ_r Θ_{e_{k-j+r}} Δ_{e_{j-r}} h_r^⊥.
    for d in 0..=2u32 {
        for mu in Partition::all(d) {
            let f = modified_h(&mu).unwrap();
            for k in 0..=3 - d {
                let limit = theta_tilde_at_one(&f, k, false).unwrap();
                let limit = if k % 2 == 1 { limit.neg() } else { limit };
                assert_eq!(limit, theta(&e(k as i64), &f).unwrap(), "{mu}, k={k}");
                for j in 0..=d + k {
                    let lhs = perp(&h(j as i64), &limit);
                    let mut rhs = SymFunc::zero();
                    for r in 0..=j as i64 {
                        let inner = delta(&e(j as i64 - r), &perp(&h(r), &f), false).unwrap();
                        rhs = rhs.add(&theta(&e(k as i64 - j as i64 + r), &inner).unwrap());
                    }
                    assert_eq!(lhs, rhs, "{mu}, j={j}, k={k}");
                }
            }
        }
    }
}
