use brlab::br::BrConfig;
use brlab::troplab::run_tropical;

/// Compares a trace against a golden trace: `i,ip,u2,frame,<exponents>`.
fn compare_with_golden(r: usize, level: usize, csv: &str) {
    let cfg = BrConfig::new(r, level).unwrap();
    let rows: Vec<Vec<String>> = csv
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect();
    let lo = rows.iter().map(|r| r[2].parse::<i64>().unwrap()).min().unwrap();
    let hi = rows.iter().map(|r| r[2].parse::<i64>().unwrap()).max().unwrap();
    let trace = run_tropical(&cfg, lo, hi).unwrap();
    for row in &rows {
        let (c, k, u2): (usize, usize, i64) = (row[0].parse().unwrap(), row[1].parse().unwrap(), row[2].parse().unwrap());
        let i = cfg.index(c, k).unwrap();
        let exps: Vec<i64> = row[4..].iter().map(|s| s.parse().unwrap()).collect();
        assert_eq!(trace.get(i, u2).unwrap().exps(), exps.as_slice(), "vertex {c},{k} at 2u={u2}");
        assert_eq!(cfg.parity(i, u2).symbol(), row[3], "frame of {c},{k} at 2u={u2}");
    }
}

#[test]
fn level_two_rank_two_trace() {
    compare_with_golden(2, 2, include_str!("data/trace_b2_level2.csv"));
}

#[test]
fn level_three_rank_two_trace() {
    compare_with_golden(2, 3, include_str!("data/trace_b2_level3.csv"));
}
