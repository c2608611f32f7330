use qtsym::identities::{run_check_named, Bounds, Status};
use qtsym::operators::{set_mutation, Mutation};

fn assert_caught(check: &str, n: u32) {
    let r = run_check_named(check, &Bounds::new(n, 8), 2).unwrap();
    assert_eq!(r.status, Status::Fail, "{check} did not notice the mutation");
    let c = r.counterexample.expect("failing check carries a counterexample");
    assert!(!c.params.is_empty());
    assert!(!c.difference.trim().is_empty() && c.difference.trim() != "0", "{c:?}");
}

// One test so the global mutation switch is never observed by a concurrent test.
#[test]
fn perturbed_operators_are_caught() {
    set_mutation(Mutation::FlipNablaSign);
    assert_caught("nabla-omegabar", 2);
    assert_caught("tesler", 2);
    set_mutation(Mutation::DropOneMinusV);
    assert_caught("main-identity", 2);
    set_mutation(Mutation::None);
    for check in ["nabla-omegabar", "tesler", "main-identity"] {
        assert_eq!(run_check_named(check, &Bounds::new(2, 8), 2).unwrap().status, Status::Pass, "{check}");
    }
}
