use brlab::br::*;
use brlab::seed::Seed;
use std::time::Instant;

fn run(r: usize, l: usize) {
    let cfg = BrConfig::new(r, l).unwrap();
    let t0 = Instant::now();
    let h = 2 * cfg.half_period();
    let walk = Walk::run(&cfg, Seed::trivial(cfg.matrix()), 0, 4 * h + 2).unwrap();
    let vals = t_values(&walk);
    let rel = check_t_relations(&cfg, &vals);
    let (hp, fp) = check_t_periodicity(&cfg, &vals);
    eprintln!("({r},{l}) rel {} half {} full {} in {:?}", rel.checked, hp.checked, fp.checked, t0.elapsed());
    assert!(rel.passed(), "{:?}", rel.failures.first());
    assert!(hp.passed(), "{:?}", hp.failures.first());
    assert!(fp.passed(), "{:?}", fp.failures.first());
}

#[test]
fn t_system_rank_two_level_two() {
    run(2, 2);
}

#[test]
fn t_system_rank_three_level_two() {
    run(3, 2);
}
