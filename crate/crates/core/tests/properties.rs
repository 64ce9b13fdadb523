mod common;

use brlab::quiver::Quiver;
use brlab::seed::{mutate_coeffs, mutate_coeffs_tropical_fast, Seed};
use brlab::semifield::Semifield;
use common::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn matrix_mutation_is_involutive((b, k) in with_vertex(7, 3)) {
        prop_assert_eq!(b.mutate(k).unwrap().mutate(k).unwrap(), b);
    }

    #[test]
    fn mutation_preserves_skew_symmetry(b in skew(7, 2), seq in proptest::collection::vec(0usize..7, 0..12)) {
        let mut m = b;
        for k in seq {
            if k < m.size() {
                // entries can outgrow i64 on long sequences; that must be reported, not wrapped
                match m.mutate(k) {
                    Ok(next) => m = next,
                    Err(brlab::Error::Overflow) => break,
                    Err(e) => return Err(TestCaseError::fail(e.to_string())),
                }
                prop_assert!(m.check_skew().is_ok());
            }
        }
    }

    #[test]
    fn tropical_seed_mutation_is_involutive((b, k) in with_vertex(6, 2)) {
        let s = Seed::tropical(b);
        prop_assert_eq!(s.mutate(k).unwrap().mutate(k).unwrap(), s);
    }

    #[test]
    fn rational_coefficient_mutation_is_involutive(
        (b, k) in with_vertex(6, 2),
        y in proptest::collection::vec(rational(), 6),
    ) {
        let y = y[..b.size()].to_vec();
        let once = mutate_coeffs(&y, &b, k).unwrap();
        let twice = mutate_coeffs(&once, &b.mutate(k).unwrap(), k).unwrap();
        prop_assert_eq!(twice, y);
    }

    #[test]
    fn cluster_mutation_is_involutive((b, k) in with_vertex(4, 2)) {
        let s = Seed::trivial(b);
        prop_assert_eq!(s.mutate(k).unwrap().mutate(k).unwrap(), s);
    }

    #[test]
    fn positive_rationals_form_a_semifield(a in rational(), b in rational(), c in rational()) {
        axioms(&a, &b, &c)?;
    }

    #[test]
    fn tropical_monomials_form_a_semifield(a in monomial(4), b in monomial(4), c in monomial(4)) {
        axioms(&a, &b, &c)?;
    }

    #[test]
    fn polynomial_ratios_form_a_semifield(a in ratio(), b in ratio(), c in ratio()) {
        axioms(&a, &b, &c)?;
        let p = eval_point();
        prop_assert_eq!(a.oplus(&b).eval(&p), a.eval(&p) + b.eval(&p));
    }

    #[test]
    fn quiver_matrix_round_trip(b in skew(8, 3)) {
        let q = Quiver::undecorated(b.size()).with_matrix(&b).unwrap();
        prop_assert_eq!(q.to_matrix().unwrap(), b.clone());
        let back = Quiver::from_json(&q.to_json()).unwrap();
        prop_assert_eq!(back.to_matrix().unwrap(), b);
    }

    #[test]
    fn fast_tropical_rule_matches_generic((b, k) in with_vertex(6, 2), ys in proptest::collection::vec(monomial(6), 6)) {
        let y = ys[..b.size()].to_vec();
        let fast = mutate_coeffs_tropical_fast(&y, &b, k).unwrap();
        prop_assert_eq!(fast.y, mutate_coeffs(&y, &b, k).unwrap());
    }
}
