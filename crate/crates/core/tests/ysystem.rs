use brlab::br::*;
use brlab::rng::{positive_point, rng, DEFAULT_SEED};
use brlab::seed::Seed;
use brlab::semifield::{PosRational, TropMonomial};

fn rational_walk(cfg: &BrConfig, seed: u64) -> Walk<PosRational> {
    let n = cfg.n_vertices();
    let y0 = positive_point(&mut rng(seed), n).into_iter().map(|q| PosRational::new(q).unwrap()).collect();
    let h = 2 * cfg.half_period();
    Walk::run(cfg, Seed::coefficients(cfg.matrix(), y0).unwrap(), -2, 4 * h + 2).unwrap()
}

#[test]
fn rational_y_system() {
    for (r, l) in [(2, 2), (2, 3), (3, 2)] {
        let cfg = BrConfig::new(r, l).unwrap();
        for k in 0..5 {
            let vals = y_values(&rational_walk(&cfg, DEFAULT_SEED + k));
            let rel = check_y_relations(&cfg, &vals);
            let (hp, fp) = check_y_periodicity(&cfg, &vals);
            assert!(rel.passed(), "({r},{l}) {:?}", rel.failures.first());
            assert!(hp.passed() && fp.passed(), "({r},{l}) {:?} {:?}", hp.failures.first(), fp.failures.first());
        }
    }
}

#[test]
fn tropical_y_system_relations() {
    for (r, l) in [(2, 2), (3, 3), (4, 2)] {
        let cfg = BrConfig::new(r, l).unwrap();
        let n = cfg.n_vertices();
        let y0 = (0..n).map(|i| TropMonomial::generator(i, n)).collect();
        let w = Walk::run(&cfg, Seed::coefficients(cfg.matrix(), y0).unwrap(), -4, 2 * cfg.period() + 2).unwrap();
        let vals = y_values(&w);
        let rel = check_y_relations(&cfg, &vals);
        assert!(rel.passed(), "({r},{l}) {:?}", rel.failures.first());
    }
}
