//! Runs every acceptance criterion and prints one PASS/FAIL line for each.
//! Exits nonzero if any criterion fails.

mod common;

use std::f64::consts::PI;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use brlab::br::*;
use brlab::dilog::*;
use brlab::fpoly::*;
use brlab::pairs::{self, Pair};
use brlab::quiver::Quiver;
use brlab::report::Tally;
use brlab::rng::{positive_point, rng, DEFAULT_SEED};
use brlab::roots::{check_tvec_correspondence, orbit_decomposition};
use brlab::seed::{mutate_coeffs, Seed};
use brlab::semifield::{PosRational, TropMonomial};
use brlab::troplab::*;
use common::*;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use rand::Rng;

type Outcome = Result<String, String>;

const GRID: [(usize, usize); 6] = [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2), (2, 4)];
const SEEDS: u64 = 5;

fn ensure(t: &Tally, what: &str) -> Result<(), String> {
    if t.passed() {
        Ok(())
    } else {
        Err(format!("{what}: {} of {} failed, first {:?}", t.failures.len(), t.checked, t.failures.first()))
    }
}

fn cfg(r: usize, l: usize) -> BrConfig {
    BrConfig::new(r, l).expect("valid config")
}

fn full_trace(c: &BrConfig) -> Result<TropicalTrace, String> {
    run_tropical(c, -2 * c.h_dual(), 4 * c.period()).map_err(|e| e.to_string())
}

fn tropical_periodicity() -> Outcome {
    let mut slowest = Duration::ZERO;
    for (r, l) in GRID {
        let c = cfg(r, l);
        let t0 = Instant::now();
        let t = full_trace(&c)?;
        let (h, f) = check_tropical_periodicity(&t).map_err(|e| e.to_string())?;
        let dt = t0.elapsed();
        ensure(&h, &format!("({r},{l}) half"))?;
        ensure(&f, &format!("({r},{l}) full"))?;
        if dt > Duration::from_secs(1) {
            return Err(format!("({r},{l}) took {dt:?}"));
        }
        slowest = slowest.max(dt);
    }
    Ok(format!("6 configs, slowest {slowest:.1?}"))
}

fn sign_counts() -> Outcome {
    let mut seen = Vec::new();
    for (r, l) in GRID {
        let c = cfg(r, l);
        let n = count_signs(&full_trace(&c)?).map_err(|e| e.to_string())?;
        let (np, nm) = (2 * l * (l * r + l - 1), 2 * r * (2 * l * r - 2 * r + 1));
        if (n.positive, n.negative, n.mixed, n.one) != (np, nm, 0, 0) {
            return Err(format!("({r},{l}): got {n:?}, want {np}/{nm}"));
        }
        seen.push(format!("({r},{l}) {np}/{nm}"));
    }
    if seen[0] != "(2,2) 20/20" || seen[1] != "(2,3) 48/36" {
        return Err(format!("reference counts: {seen:?}"));
    }
    Ok(seen.join(", "))
}

fn regions_and_boundaries() -> Outcome {
    let mut checked = 0;
    for (r, l) in GRID {
        let t = full_trace(&cfg(r, l))?;
        let s = check_sign_regions(&t).map_err(|e| e.to_string())?;
        let b = check_boundaries(&t).map_err(|e| e.to_string())?;
        ensure(&s, &format!("({r},{l}) regions"))?;
        ensure(&b, &format!("({r},{l}) boundaries"))?;
        checked += s.checked + b.checked;
    }
    Ok(format!("{checked} checks"))
}

fn compare_trace(r: usize, l: usize, csv: &str) -> Result<usize, String> {
    let c = cfg(r, l);
    let rows: Vec<Vec<&str>> = csv.lines().skip(1).map(|l| l.split(',').collect()).collect();
    let num = |s: &str| s.parse::<i64>().map_err(|e| e.to_string());
    let u2s = rows.iter().map(|row| num(row[2])).collect::<Result<Vec<_>, _>>()?;
    let (lo, hi) = (*u2s.iter().min().ok_or("empty golden trace")?, *u2s.iter().max().ok_or("empty golden trace")?);
    let trace = run_tropical(&c, lo, hi).map_err(|e| e.to_string())?;
    for row in &rows {
        let (col, k, u2) = (num(row[0])? as usize, num(row[1])? as usize, num(row[2])?);
        let i = c.index(col, k).ok_or_else(|| format!("no vertex {col},{k}"))?;
        let exps = row[4..].iter().map(|s| num(s)).collect::<Result<Vec<_>, _>>()?;
        let got = trace.get(i, u2).ok_or("outside trace")?;
        if got.exps() != exps.as_slice() || c.parity(i, u2).symbol() != row[3] {
            return Err(format!("({r},{l}) vertex {col},{k} at 2u={u2}"));
        }
    }
    Ok(rows.len())
}

fn golden_files() -> Outcome {
    let a = compare_trace(2, 2, include_str!("data/trace_b2_level2.csv"))?;
    let b = compare_trace(2, 3, include_str!("data/trace_b2_level3.csv"))?;
    let table = orbit_decomposition(6).map_err(|e| e.to_string())?;
    if table.to_text() != include_str!("data/orbits_r6.txt") {
        return Err("orbit table for r = 6 differs".into());
    }
    Ok(format!("{a} + {b} golden trace entries, orbit table verbatim"))
}

fn t_system() -> Outcome {
    let mut out = Vec::new();
    for (r, l) in [(2, 2), (3, 2)] {
        let c = cfg(r, l);
        let t0 = Instant::now();
        let h = 2 * c.half_period();
        let walk = Walk::run(&c, Seed::trivial(c.matrix()), 0, 4 * h + 2).map_err(|e| e.to_string())?;
        let vals = t_values(&walk);
        ensure(&check_t_relations(&c, &vals), "relations")?;
        let (hp, fp) = check_t_periodicity(&c, &vals);
        ensure(&hp, &format!("({r},{l}) half"))?;
        ensure(&fp, &format!("({r},{l}) full"))?;
        let dt = t0.elapsed();
        if dt > Duration::from_secs(60) {
            return Err(format!("({r},{l}) took {dt:?}"));
        }
        out.push(format!("({r},{l}) {dt:.1?}"));
    }
    Ok(out.join(", "))
}

fn y_system() -> Outcome {
    let mut checked = 0;
    for (r, l) in [(2, 2), (2, 3), (3, 2)] {
        let c = cfg(r, l);
        let h = 2 * c.half_period();
        for k in 0..SEEDS {
            let y0 = positive_point(&mut rng(DEFAULT_SEED + k), c.n_vertices())
                .into_iter()
                .map(|q| PosRational::new(q).map_err(|e| e.to_string()))
                .collect::<Result<Vec<_>, _>>()?;
            let seed = Seed::coefficients(c.matrix(), y0).map_err(|e| e.to_string())?;
            let vals = y_values(&Walk::run(&c, seed, -2, 4 * h + 2).map_err(|e| e.to_string())?);
            let rel = check_y_relations(&c, &vals);
            let (hp, fp) = check_y_periodicity(&c, &vals);
            ensure(&rel, &format!("({r},{l}) seed {k} relations"))?;
            ensure(&hp, &format!("({r},{l}) seed {k} half"))?;
            ensure(&fp, &format!("({r},{l}) seed {k} full"))?;
            checked += rel.checked + hp.checked + fp.checked;
        }
    }
    Ok(format!("3 configs x {SEEDS} seeds, {checked} exact checks"))
}

fn root_model() -> Outcome {
    let mut checked = 0;
    for r in 2..=6 {
        let rep = check_tvec_correspondence(&cfg(r, 2)).map_err(|e| e.to_string())?;
        for (name, t) in [
            ("tvec", &rep.tvec),
            ("piA", &rep.pi_a),
            ("trec", &rep.trec),
            ("alpha", &rep.alpha),
            ("exhaustion", &rep.exhaustion),
            ("endpoint", &rep.endpoint),
        ] {
            ensure(t, &format!("r={r} {name}"))?;
            checked += t.checked;
        }
    }
    Ok(format!("r = 2..6, {checked} checks"))
}

fn f_polynomials() -> Outcome {
    let mut checked = 0;
    for (r, l) in [(2, 2), (2, 3)] {
        let c = cfg(r, l);
        let n = c.n_vertices();
        let p = 2 * c.period();
        let err = |e: brlab::Error| e.to_string();
        let fw = f_walk(&c, 0, 2 * p + 2).map_err(err)?;
        let fv = t_values(&fw);
        let y0 = (0..n).map(|i| TropMonomial::generator(i, n)).collect();
        let yt = y_values(&Walk::run(&c, Seed::coefficients(c.matrix(), y0).map_err(err)?, 0, p + 2).map_err(err)?);
        let f1 = check_f1(&c, &fv, &yt);
        let ct = check_constant_terms(&fw);
        let (h, f) = check_f_periodicity(&fw).map_err(err)?;
        for (t, what) in [(&f1, "F1"), (&ct, "constant terms"), (&h, "half"), (&f, "full")] {
            ensure(t, &format!("({r},{l}) {what}"))?;
            checked += t.checked;
        }
        for k in 0..SEEDS {
            let pt = positive_point(&mut rng(DEFAULT_SEED + k), n);
            let y0 = pt.iter().cloned().map(PosRational::new).collect::<Result<Vec<_>, _>>().map_err(err)?;
            let yr = y_values(&Walk::run(&c, Seed::coefficients(c.matrix(), y0).map_err(err)?, 0, p + 2).map_err(err)?);
            let (t2, t3) = check_f2_f3(&c, &fv, &yt, &yr, &pt);
            ensure(&t2, &format!("({r},{l}) F2 point {k}"))?;
            ensure(&t3, &format!("({r},{l}) F3 point {k}"))?;
            checked += t2.checked + t3.checked;
        }
    }
    Ok(format!("{checked} exact checks"))
}

fn constant_identity() -> Outcome {
    let mut worst: f64 = 0.0;
    for r in 2..=4 {
        for l in 2..=4 {
            let c = cfg(r, l);
            let di = check_constant_di(&c, 1e-12).map_err(|e| e.to_string())?;
            let want = (r * (l * 2 * r) - r * (2 * r - 1)) as f64 / (2 * r - 1 + l) as f64;
            if (di.lhs - want).abs() >= 1e-8 || di.error() >= 1e-8 {
                return Err(format!("({r},{l}): {} vs {want}", di.lhs));
            }
            if di.solution.residual >= 1e-10 {
                return Err(format!("({r},{l}): residual {}", di.solution.residual));
            }
            worst = worst.max((di.lhs - want).abs());
        }
    }
    let c22 = check_constant_di(&cfg(2, 2), 1e-12).map_err(|e| e.to_string())?.lhs;
    let c32 = check_constant_di(&cfg(3, 2), 1e-12).map_err(|e| e.to_string())?.lhs;
    if (c22 - 2.0).abs() >= 1e-8 || (c32 - 3.0).abs() >= 1e-8 {
        return Err(format!("reference values {c22}, {c32}"));
    }
    Ok(format!("r, l <= 4, worst error {worst:.1e}"))
}

fn functional_identities() -> Outcome {
    let mut worst: f64 = 0.0;
    for (r, l) in [(2, 2), (2, 3)] {
        let c = cfg(r, l);
        let (d2, d3) = ((4 * r * (2 * r * l - 2 * r + 1)) as f64, (4 * l * (r * l + l - 1)) as f64);
        if di2_target(&c) != d2 || di3_target(&c) != d3 {
            return Err(format!("({r},{l}) targets"));
        }
        for k in 0..SEEDS {
            let di = check_functional_di(&c, DEFAULT_SEED + k).map_err(|e| e.to_string())?;
            let e = di.max_relative_error();
            if e >= 1e-6 {
                return Err(format!("({r},{l}) seed {k}: {di:?}"));
            }
            worst = worst.max(e);
        }
    }
    if di2_target(&cfg(2, 2)) != 40.0 || di3_target(&cfg(2, 2)) != 40.0 {
        return Err("(2,2) targets are not 40/40".into());
    }
    Ok(format!("2 configs x {SEEDS} seeds, worst relative error {worst:.1e}"))
}

fn rogers() -> Outcome {
    let l = |x: f64| rogers_l(x).map_err(|e| e.to_string());
    let e1 = (l(1.0)? - PI * PI / 6.0).abs();
    let eh = (l(0.5)? - PI * PI / 12.0).abs();
    if e1 >= 1e-11 || eh >= 1e-11 {
        return Err(format!("L(1) off by {e1:.1e}, L(1/2) off by {eh:.1e}"));
    }
    let mut g = rng(DEFAULT_SEED + 11);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let x: f64 = g.gen_range(0.0..=1.0);
        let e = (l(x)? + l(1.0 - x)? - PI * PI / 6.0).abs();
        if e >= 1e-11 {
            return Err(format!("reflection at {x}: {e:.1e}"));
        }
        worst = worst.max(e);
    }
    Ok(format!("worst reflection error {worst:.1e}"))
}

fn simply_laced() -> Outcome {
    let err = |e: brlab::Error| e.to_string();
    for s in ["A2:A1", "A3:A2", "D4:A1"] {
        let p = Pair::parse(s).map_err(err)?;
        let steps = 4 * p.half_period();
        let w = pairs::tropical_walk(&p, steps).map_err(err)?;
        let (h, f) = pairs::check_pair_periodicity(&w).map_err(err)?;
        ensure(&h, &format!("{s} tropical half"))?;
        ensure(&f, &format!("{s} tropical full"))?;
        let t = pairs::trivial_walk(&p, steps).map_err(err)?;
        let (h, f) = pairs::check_t_periodicity(&t).map_err(err)?;
        ensure(&pairs::check_t2(&t), &format!("{s} T relations"))?;
        ensure(&h, &format!("{s} T half"))?;
        ensure(&f, &format!("{s} T full"))?;
        for k in 0..SEEDS {
            let y0 = positive_point(&mut rng(DEFAULT_SEED + k), p.size());
            let y = pairs::rational_walk(&p, y0, steps).map_err(err)?;
            let (h, f) = pairs::check_y_periodicity(&y).map_err(err)?;
            ensure(&pairs::check_y2(&y), &format!("{s} Y relations"))?;
            ensure(&h, &format!("{s} Y half"))?;
            ensure(&f, &format!("{s} Y full"))?;
        }
    }
    let p = Pair::parse("A2:A1").map_err(err)?;
    let w = pairs::tropical_walk(&p, 20).map_err(err)?;
    let tuple = |u| (0..p.size()).map(|v| w.y(v, u).cloned()).collect::<Vec<Option<TropMonomial>>>();
    let first = (1..=20).find(|&u| tuple(u) == tuple(0));
    if first != Some(10) {
        return Err(format!("A2:A1 full period {first:?}"));
    }
    Ok("3 pairs, A2:A1 period 10".into())
}

fn run_property<S: Strategy>(
    name: &str,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let mut runner = TestRunner::new(Config { cases: CASES, failure_persistence: None, ..Config::default() });
    runner.run(&strategy, test).map_err(|e| format!("{name}: {e}"))
}

fn properties() -> Outcome {
    run_property("matrix involution", with_vertex(7, 3), |(b, k)| {
        prop_assert_eq!(b.mutate(k).unwrap().mutate(k).unwrap(), b);
        Ok(())
    })?;
    run_property("tropical seed involution", with_vertex(6, 2), |(b, k)| {
        let s = Seed::tropical(b);
        prop_assert_eq!(s.mutate(k).unwrap().mutate(k).unwrap(), s);
        Ok(())
    })?;
    run_property(
        "coefficient involution",
        (with_vertex(6, 2), proptest::collection::vec(rational(), 6)),
        |((b, k), y)| {
            let y = y[..b.size()].to_vec();
            let once = mutate_coeffs(&y, &b, k).unwrap();
            prop_assert_eq!(mutate_coeffs(&once, &b.mutate(k).unwrap(), k).unwrap(), y);
            Ok(())
        },
    )?;
    run_property("cluster involution", with_vertex(4, 2), |(b, k)| {
        let s = Seed::trivial(b);
        prop_assert_eq!(s.mutate(k).unwrap().mutate(k).unwrap(), s);
        Ok(())
    })?;
    run_property("rational semifield", (rational(), rational(), rational()), |(a, b, c)| axioms(&a, &b, &c))?;
    run_property("tropical semifield", (monomial(4), monomial(4), monomial(4)), |(a, b, c)| axioms(&a, &b, &c))?;
    run_property("universal semifield", (ratio(), ratio(), ratio()), |(a, b, c)| axioms(&a, &b, &c))?;
    run_property(
        "skew preservation",
        (skew(7, 2), proptest::collection::vec(0usize..7, 0..12)),
        |(b, seq)| {
            let n = b.size();
            let mut m = b;
            for k in seq.into_iter().filter(|&k| k < n) {
                match m.mutate(k) {
                    Ok(next) => m = next,
                    Err(brlab::Error::Overflow) => break,
                    Err(e) => return Err(TestCaseError::fail(e.to_string())),
                }
                prop_assert!(m.check_skew().is_ok());
            }
            Ok(())
        },
    )?;
    run_property("quiver round trip", skew(8, 3), |b| {
        let q = Quiver::undecorated(b.size()).with_matrix(&b).unwrap();
        prop_assert_eq!(q.to_matrix().unwrap(), b.clone());
        prop_assert_eq!(Quiver::from_json(&q.to_json()).unwrap().to_matrix().unwrap(), b);
        Ok(())
    })?;
    Ok(format!("9 properties x {CASES} cases"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 13] = [
        ("tropical periodicity", tropical_periodicity),
        ("sign counts", sign_counts),
        ("sign regions and boundaries", regions_and_boundaries),
        ("golden traces and orbit table", golden_files),
        ("T-system periodicity", t_system),
        ("Y-system periodicity", y_system),
        ("root model correspondence", root_model),
        ("F-polynomials", f_polynomials),
        ("constant dilogarithm identity", constant_identity),
        ("functional dilogarithm identities", functional_identities),
        ("Rogers dilogarithm", rogers),
        ("simply laced pairs", simply_laced),
        ("property suites", properties),
    ];
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panic: {}", msg.unwrap_or_default()))
        });
        let dt = t0.elapsed();
        match outcome {
            Ok(d) => println!("criterion {:>2} PASS  {name}: {d} [{dt:.1?}]", n + 1),
            Err(d) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {d} [{dt:.1?}]", n + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
