use brlab::br::BrConfig;
use brlab::roots::*;

#[test]
fn orbit_table_r6_matches_golden() {
    let table = orbit_decomposition(6).unwrap();
    let golden = include_str!("data/orbits_r6.txt");
    assert_eq!(table.to_text(), golden);
}

#[test]
fn orbit_structure_for_small_ranks() {
    for r in 2..=9 {
        let table = orbit_decomposition(r).unwrap();
        let t = check_orbits(&table);
        assert!(t.passed(), "r={r}: {:?}", t.failures);
        assert_eq!(table.positive_entries().len(), r * (2 * r - 1));
    }
}

#[test]
fn r2_orbits_by_hand() {
    // J- = {1}, J+ = {3}; σ = σ2 σ1 σ2 σ3 applied by hand
    let table = orbit_decomposition(2).unwrap();
    let row: Vec<String> = table.rows[0].entries.iter().map(|a| a.to_string()).collect();
    assert_eq!(row, ["-a1", "[1,2]", "[3]", "-a3"]);
    let row: Vec<String> = table.rows[2].entries.iter().map(|a| a.to_string()).collect();
    assert_eq!(row, ["-a3", "[1,3]", "-a1"]);
}

#[test]
fn alpha_recurrences_up_to_r8() {
    for r in 2..=8 {
        let t = check_alpha_recurrences(r);
        assert!(t.passed(), "r={r}: {:?}", t.failures);
    }
}

#[test]
fn alpha_family_is_all_of_phi_plus() {
    for r in 2..=7 {
        let mut seen = Vec::new();
        for i in 1..2 * r {
            for u2 in -2 * (2 * r as i64 - 1)..0 {
                if alpha_defined(r, i, u2) {
                    seen.push(alpha_of(r, i, u2).unwrap());
                }
            }
        }
        let n = seen.len();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), n);
        assert_eq!(n, r * (2 * r - 1));
    }
}

#[test]
fn rho_bijection_and_conjugacy() {
    for r in 2..=6 {
        let t = check_rho(r).unwrap();
        assert!(t.passed(), "r={r}: {:?}", t.failures);
    }
}

#[test]
fn rho_rejects_middle_orbit() {
    let n = 11;
    assert!(rho(6, &AlmostPositiveRoot::interval(n, 6, 8)).is_err());
    assert!(rho(6, &AlmostPositiveRoot::neg_simple(n, 1)).is_err());
}

#[test]
fn tvec_correspondence() {
    for r in 2..=5 {
        let rep = check_tvec_correspondence(&BrConfig::new(r, 2).unwrap()).unwrap();
        for (name, t) in [
            ("tvec", &rep.tvec),
            ("piA", &rep.pi_a),
            ("trec", &rep.trec),
            ("alpha", &rep.alpha),
            ("exhaustion", &rep.exhaustion),
            ("endpoint", &rep.endpoint),
        ] {
            assert!(t.passed(), "r={r} {name}: {} checked, {:?}", t.checked, t.failures);
        }
    }
}

#[test]
fn tvec_r2_negatives_are_the_six_roots() {
    let rep = check_tvec_correspondence(&BrConfig::new(2, 2).unwrap()).unwrap();
    assert_eq!(rep.tvec.checked, 6);
    assert!(rep.exhaustion.passed());
}
