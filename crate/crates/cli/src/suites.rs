//! Verification suites behind `verify`.

use std::time::Instant;

use anyhow::{bail, Result};
use brlab::br::*;
use brlab::dilog;
use brlab::pairs::{self, Pair};
use brlab::report::Record;
use brlab::rng::{positive_point, rng};
use brlab::roots;
use brlab::seed::Seed;
use brlab::semifield::{PosRational, TropMonomial};
use brlab::troplab;

use crate::config::{Grid, RunConfig};

const TROPICAL_GRID: [(usize, usize); 6] = [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2), (2, 4)];
const TSYSTEM_GRID: [(usize, usize); 2] = [(2, 2), (3, 2)];
const YSYSTEM_GRID: [(usize, usize); 3] = [(2, 2), (2, 3), (3, 2)];
const FUNCTIONAL_GRID: [(usize, usize); 2] = [(2, 2), (2, 3)];
const DEFAULT_PAIRS: [&str; 3] = ["A2:A1", "A3:A2", "D4:A1"];
const SOLVER_TOL: f64 = 1e-13;
const RESIDUAL_BOUND: f64 = 1e-10;

fn grid(rc: &RunConfig, default: &[(usize, usize)]) -> Vec<BrConfig> {
    match &rc.grid {
        Grid::Explicit(v) => v.clone(),
        Grid::Default => default.iter().map(|&(r, l)| BrConfig::new(r, l).expect("valid default")).collect(),
    }
}

fn tagged(rec: Record, cfg: &BrConfig) -> Record {
    rec.param("r", cfg.r).param("level", cfg.level)
}

/// Stamps the elapsed time on records when timings are requested.
fn stamp(rc: &RunConfig, t0: Instant, recs: &mut [Record]) {
    if rc.timings {
        let ms = t0.elapsed().as_secs_f64() * 1e3;
        for r in recs {
            r.timing_ms = Some(ms);
        }
    }
}

fn mode<'a>(rc: &'a RunConfig, allowed: &[&str], default: &'a str) -> Result<&'a str> {
    let m = rc.mode.as_deref().unwrap_or(default);
    if !allowed.contains(&m) {
        bail!("mode {m:?} not one of {allowed:?}");
    }
    Ok(m)
}

pub fn full_trace(cfg: &BrConfig) -> Result<troplab::TropicalTrace> {
    Ok(troplab::run_tropical(cfg, -2 * cfg.h_dual(), 4 * cfg.period())?)
}

pub fn tropical(rc: &RunConfig, dump: Option<&mut Vec<(BrConfig, String)>>) -> Result<Vec<Record>> {
    let mut out = Vec::new();
    let mut dumps = Vec::new();
    for cfg in grid(rc, &TROPICAL_GRID) {
        let t0 = Instant::now();
        let trace = full_trace(&cfg)?;
        let (h, f) = troplab::check_tropical_periodicity(&trace)?;
        let n = troplab::count_signs(&trace)?;
        let (np, nm) = troplab::expected_counts(&cfg);
        let counts_ok = (n.positive, n.negative, n.mixed, n.one) == (np, nm, 0, 0);
        let mut recs = vec![
            Record::from_tally("tropical.half_periodicity", &h),
            Record::from_tally("tropical.full_periodicity", &f),
            Record::new("tropical.sign_counts", counts_ok)
                .count("positive", n.positive as i64)
                .count("negative", n.negative as i64)
                .count("mixed", n.mixed as i64)
                .count("expected_positive", np as i64)
                .count("expected_negative", nm as i64)
                .count("fallbacks", trace.fallbacks as i64),
            Record::from_tally("tropical.sign_regions", &troplab::check_sign_regions(&trace)?),
            Record::from_tally("tropical.boundaries", &troplab::check_boundaries(&trace)?),
        ];
        recs = recs.into_iter().map(|r| tagged(r, &cfg)).collect();
        stamp(rc, t0, &mut recs);
        out.extend(recs);
        if dump.is_some() {
            dumps.push((cfg, trace.to_csv()));
        }
    }
    if let Some(d) = dump {
        *d = dumps;
    }
    Ok(out)
}

pub fn tsystem(rc: &RunConfig) -> Result<Vec<Record>> {
    let mut out = Vec::new();
    for cfg in grid(rc, &TSYSTEM_GRID) {
        let t0 = Instant::now();
        let walk = Walk::run(&cfg, Seed::trivial(cfg.matrix()), 0, 8 * cfg.half_period() + 2)?;
        let vals = t_values(&walk);
        let (h, f) = check_t_periodicity(&cfg, &vals);
        let mut recs: Vec<Record> = [
            ("tsystem.relations", check_t_relations(&cfg, &vals)),
            ("tsystem.half_periodicity", h),
            ("tsystem.full_periodicity", f),
        ]
        .iter()
        .map(|(name, t)| tagged(Record::from_tally(*name, t), &cfg))
        .collect();
        stamp(rc, t0, &mut recs);
        out.extend(recs);
    }
    Ok(out)
}

fn y_records<Y: brlab::seed::Coefficient + brlab::Semifield>(
    cfg: &BrConfig,
    y0: Vec<Y>,
    tag: impl Fn(Record) -> Record,
) -> Result<Vec<Record>> {
    let walk = Walk::run(cfg, Seed::coefficients(cfg.matrix(), y0)?, -2, 8 * cfg.half_period() + 2)?;
    let vals = y_values(&walk);
    let (h, f) = check_y_periodicity(cfg, &vals);
    Ok([
        ("ysystem.relations", check_y_relations(cfg, &vals)),
        ("ysystem.half_periodicity", h),
        ("ysystem.full_periodicity", f),
    ]
    .iter()
    .map(|(name, t)| tag(tagged(Record::from_tally(*name, t), cfg)))
    .collect())
}

pub fn ysystem(rc: &RunConfig) -> Result<Vec<Record>> {
    let m = mode(rc, &["rational", "tropical"], "rational")?;
    let mut out = Vec::new();
    for cfg in grid(rc, &YSYSTEM_GRID) {
        let t0 = Instant::now();
        let n = cfg.n_vertices();
        let mut recs = Vec::new();
        if m == "tropical" {
            let y0 = (0..n).map(|i| TropMonomial::generator(i, n)).collect();
            recs.extend(y_records(&cfg, y0, |r| r.param("mode", "tropical"))?);
        } else {
            for k in 0..rc.samples {
                let seed = rc.seed + k;
                let y0 = positive_point(&mut rng(seed), n)
                    .into_iter()
                    .map(PosRational::new)
                    .collect::<Result<Vec<_>, _>>()?;
                recs.extend(y_records(&cfg, y0, |r| r.param("mode", "rational").param("seed", seed))?);
            }
        }
        stamp(rc, t0, &mut recs);
        out.extend(recs);
    }
    Ok(out)
}

pub fn roots(rc: &RunConfig) -> Result<Vec<Record>> {
    let ranks: Vec<usize> = match (&rc.ranks, &rc.grid) {
        (Some(r), _) => r.clone(),
        (None, Grid::Explicit(v)) => v.iter().map(|c| c.r).collect(),
        (None, Grid::Default) => (2..=6).collect(),
    };
    let mut out = Vec::new();
    for r in ranks {
        let t0 = Instant::now();
        let tag = |rec: Record| rec.param("r", r);
        let table = roots::orbit_decomposition(r)?;
        let rep = roots::check_tvec_correspondence(&BrConfig::new(r, 2)?)?;
        let mut recs: Vec<Record> = [
            ("roots.orbits", roots::check_orbits(&table)),
            ("roots.alpha_recurrences", roots::check_alpha_recurrences(r)),
            ("roots.rho", roots::check_rho(r)?),
            ("roots.tvec", rep.tvec),
            ("roots.pi_a", rep.pi_a),
            ("roots.t_recurrences", rep.trec),
            ("roots.exhaustion", rep.exhaustion),
            ("roots.endpoint", rep.endpoint),
        ]
        .iter()
        .map(|(name, t)| tag(Record::from_tally(*name, t)))
        .collect();
        stamp(rc, t0, &mut recs);
        out.extend(recs);
    }
    Ok(out)
}

fn constant_grid() -> Vec<(usize, usize)> {
    (2..=4).flat_map(|r| (2..=4).map(move |l| (r, l))).collect()
}

pub fn dilog(rc: &RunConfig) -> Result<Vec<Record>> {
    let m = mode(rc, &["constant", "functional", "all"], "all")?;
    let mut out = Vec::new();
    if m != "functional" {
        for cfg in grid(rc, &constant_grid()) {
            let t0 = Instant::now();
            let k = dilog::build_k(&cfg);
            let di = dilog::check_constant_di(&cfg, SOLVER_TOL)?;
            let ok = di.error() < rc.tol && di.solution.residual < RESIDUAL_BOUND;
            let mut recs = vec![
                tagged(Record::new("dilog.k_positive_definite", k.is_symmetric() && k.is_positive_definite()), &cfg),
                tagged(Record::new("dilog.constant_identity", ok), &cfg)
                    .values(di.lhs, di.rhs)
                    .count("iterations", di.solution.iterations as i64)
                    .detail(format!("residual {:.3e}", di.solution.residual)),
            ];
            stamp(rc, t0, &mut recs);
            out.extend(recs);
        }
    }
    if m != "constant" {
        for cfg in grid(rc, &FUNCTIONAL_GRID) {
            let t0 = Instant::now();
            let mut recs = Vec::new();
            for k in 0..rc.samples {
                let seed = rc.seed + k;
                let di = dilog::check_functional_di(&cfg, seed)?;
                for (name, v) in [("dilog.functional_di2", di.di2), ("dilog.functional_di3", di.di3)] {
                    let rel = (v.0 - v.1).abs() / v.1.abs();
                    recs.push(tagged(Record::new(name, rel < rc.tol), &cfg).param("seed", seed).values(v.0, v.1));
                }
            }
            stamp(rc, t0, &mut recs);
            out.extend(recs);
        }
    }
    Ok(out)
}

fn pair_records(rc: &RunConfig, p: &Pair, m: &str) -> Result<Vec<Record>> {
    let steps = 4 * p.half_period();
    let tag = |rec: Record| rec.param("pair", p.to_string());
    let mut recs = Vec::new();
    if m == "tropical" || m == "all" {
        let w = pairs::tropical_walk(p, steps)?;
        let (h, f) = pairs::check_pair_periodicity(&w)?;
        recs.push(tag(Record::from_tally("pairs.tropical_half_periodicity", &h)));
        recs.push(tag(Record::from_tally("pairs.tropical_full_periodicity", &f)));
        recs.push(tag(Record::from_tally("pairs.tropical_relations", &pairs::check_y2(&w))));
    }
    if m == "trivial" || m == "all" {
        let w = pairs::trivial_walk(p, steps)?;
        let (h, f) = pairs::check_t_periodicity(&w)?;
        recs.push(tag(Record::from_tally("pairs.t_relations", &pairs::check_t2(&w))));
        recs.push(tag(Record::from_tally("pairs.t_half_periodicity", &h)));
        recs.push(tag(Record::from_tally("pairs.t_full_periodicity", &f)));
    }
    if m == "rational" || m == "all" {
        for k in 0..rc.samples {
            let seed = rc.seed + k;
            let w = pairs::rational_walk(p, positive_point(&mut rng(seed), p.size()), steps)?;
            let (h, f) = pairs::check_y_periodicity(&w)?;
            let mut t = pairs::check_y2(&w);
            t.merge(h);
            t.merge(f);
            recs.push(tag(Record::from_tally("pairs.y_system", &t)).param("seed", seed));
        }
    }
    Ok(recs)
}

pub fn pairs(rc: &RunConfig) -> Result<Vec<Record>> {
    let m = mode(rc, &["tropical", "trivial", "rational", "all"], "all")?;
    let list = match &rc.pairs {
        Some(p) => p.clone(),
        None => DEFAULT_PAIRS.iter().map(|s| Pair::parse(s).expect("valid default")).collect(),
    };
    let mut out = Vec::new();
    for p in &list {
        let t0 = Instant::now();
        let mut recs = pair_records(rc, p, m)?;
        stamp(rc, t0, &mut recs);
        out.extend(recs);
    }
    Ok(out)
}

/// Every suite on its default grid; an explicit grid or pair list still applies.
pub fn all(rc: &RunConfig) -> Result<Vec<Record>> {
    let plain = RunConfig { mode: None, ..rc.clone() };
    let mut out = tropical(&plain, None)?;
    out.extend(tsystem(&plain)?);
    out.extend(ysystem(&plain)?);
    out.extend(roots(&plain)?);
    out.extend(dilog(&plain)?);
    out.extend(pairs(&plain)?);
    Ok(out)
}
