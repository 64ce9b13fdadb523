use brlab::br::BrConfig;
use brlab::troplab::*;

fn full_trace(cfg: &BrConfig) -> TropicalTrace {
    let p = cfg.period();
    run_tropical(cfg, -2 * cfg.h_dual(), 4 * p).unwrap()
}

const GRID: [(usize, usize); 9] = [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2), (2, 4), (4, 4), (5, 3), (3, 5)];

#[test]
fn periodicity_on_grid() {
    for (r, l) in GRID {
        let cfg = BrConfig::new(r, l).unwrap();
        let t = full_trace(&cfg);
        let (h, f) = check_tropical_periodicity(&t).unwrap();
        assert!(h.passed(), "({r},{l}) half: {:?}", h.failures.first());
        assert!(f.passed(), "({r},{l}) full: {:?}", f.failures.first());
        assert_eq!(t.fallbacks, 0);
    }
}

#[test]
fn sign_counts_on_grid() {
    for (r, l) in GRID {
        let cfg = BrConfig::new(r, l).unwrap();
        let c = count_signs(&full_trace(&cfg)).unwrap();
        let (np, nm) = expected_counts(&cfg);
        assert_eq!((c.positive, c.negative, c.mixed, c.one), (np, nm, 0, 0), "({r},{l})");
        assert_eq!(np + nm, plus_points_per_period(&cfg));
    }
    let c22 = expected_counts(&BrConfig::new(2, 2).unwrap());
    assert_eq!(c22, (20, 20));
    assert_eq!(expected_counts(&BrConfig::new(2, 3).unwrap()), (48, 36));
}

#[test]
fn regions_and_boundaries_on_grid() {
    for (r, l) in GRID {
        let cfg = BrConfig::new(r, l).unwrap();
        let t = full_trace(&cfg);
        let s = check_sign_regions(&t).unwrap();
        assert!(s.passed(), "({r},{l}) regions: {:?}", s.failures.first());
        let b = check_boundaries(&t).unwrap();
        assert!(b.passed(), "({r},{l}) boundaries: {:?}", b.failures.first());
    }
}
