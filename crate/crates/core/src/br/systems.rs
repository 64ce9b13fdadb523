use std::collections::BTreeMap;

use super::labels::{g_inverse, g_prime_inverse, t_support, y_support, Parity, SystemIndex};
use super::walk::Walk;
use super::BrConfig;
use crate::laurent::LaurentPoly;
use crate::report::Tally;
use crate::seed::Coefficient;
use crate::semifield::Semifield;

pub type TValues = BTreeMap<SystemIndex, LaurentPoly>;
pub type YValues<Y> = BTreeMap<SystemIndex, Y>;

/// Reads `x^{(a)}_m(u)` off every p+ point of a walk that tracks cluster entries.
pub fn t_values<Y: Coefficient>(walk: &Walk<Y>) -> TValues {
    let cfg = &walk.cfg;
    let mut out = BTreeMap::new();
    for u2 in walk.from_u2()..=walk.to_u2() {
        for i in 0..cfg.n_vertices() {
            if cfg.parity(i, u2) == Parity::Plus {
                let idx = g_inverse(cfg, i, u2).expect("g is a bijection onto p+ points");
                if let Some(x) = walk.x(i, u2) {
                    out.insert(idx, x.clone());
                }
            }
        }
    }
    out
}

/// Reads `y^{(a)}_m(u)` off every p+ point of a walk.
pub fn y_values<Y: Coefficient>(walk: &Walk<Y>) -> YValues<Y> {
    let cfg = &walk.cfg;
    let mut out = BTreeMap::new();
    for u2 in walk.from_u2()..=walk.to_u2() {
        for i in 0..cfg.n_vertices() {
            if cfg.parity(i, u2) == Parity::Plus {
                let idx = g_prime_inverse(cfg, i, u2).expect("g' is a bijection onto p+ points");
                out.insert(idx, walk.y(i, u2).expect("in range").clone());
            }
        }
    }
    out
}

fn u2_range<V>(vals: &BTreeMap<SystemIndex, V>) -> (i64, i64) {
    let lo = vals.keys().map(|k| k.u2).min().unwrap_or(0);
    let hi = vals.keys().map(|k| k.u2).max().unwrap_or(-1);
    (lo, hi)
}

/// `T^{(a)}_m(u)` with the unit boundary condition; `None` if outside the computed window.
fn t_at<'a>(cfg: &BrConfig, vals: &'a TValues, one: &'a LaurentPoly, a: usize, m: usize, u2: i64) -> Option<&'a LaurentPoly> {
    if a == 0 || m == 0 || m == cfg.t(a) * cfg.level {
        return Some(one);
    }
    vals.get(&SystemIndex::new(a, m, u2))
}

/// Checks the T-relations at every P'+ centre whose terms all lie in `vals`.
pub fn check_t_relations(cfg: &BrConfig, vals: &TValues) -> Tally {
    let mut tally = Tally::default();
    let Some(any) = vals.values().next() else {
        return tally;
    };
    let one = LaurentPoly::one(any.nvars());
    let (lo, hi) = u2_range(vals);
    for (a, m) in cfg.pairs() {
        let s = 2 / cfg.t(a) as i64;
        for u2 in lo..=hi {
            let c = SystemIndex::new(a, m, u2);
            if !cfg.is_p_prime_plus(c) {
                continue;
            }
            let get = |a, m, u2| t_at(cfg, vals, &one, a, m, u2);
            let (Some(l1), Some(l2), Some(n1), Some(n2)) =
                (get(a, m, u2 - s), get(a, m, u2 + s), get(a, m - 1, u2), get(a, m + 1, u2))
            else {
                continue;
            };
            let sup: Option<Vec<&LaurentPoly>> = t_support(cfg, c).iter().map(|d| get(d.a, d.m, d.u2)).collect();
            let Some(sup) = sup else { continue };
            let lhs = l1.mul(l2);
            let prod = sup.iter().fold(one.clone(), |acc, p| acc.mul(p));
            let rhs = n1.mul(n2).add(&prod);
            tally.record(lhs == rhs, || format!("T-relation fails at {c:?}"));
        }
    }
    tally
}

fn y_at<'a, Y>(vals: &'a YValues<Y>, a: usize, m: usize, u2: i64) -> Option<&'a Y> {
    vals.get(&SystemIndex::new(a, m, u2))
}

/// Checks the Y-relations (in any semifield) at every P+ centre whose terms all lie in `vals`.
pub fn check_y_relations<Y: Semifield>(cfg: &BrConfig, vals: &YValues<Y>) -> Tally {
    let mut tally = Tally::default();
    let Some(any) = vals.values().next() else {
        return tally;
    };
    let one = any.one_like();
    let (lo, hi) = u2_range(vals);
    for (a, m) in cfg.pairs() {
        let s = 2 / cfg.t(a) as i64;
        for u2 in lo..=hi {
            let c = SystemIndex::new(a, m, u2);
            if !cfg.is_p_plus(c) {
                continue;
            }
            let (Some(l1), Some(l2)) = (y_at(vals, a, m, u2 - s), y_at(vals, a, m, u2 + s)) else {
                continue;
            };
            let mut rhs = one.clone();
            let mut complete = true;
            for d in y_support(cfg, c) {
                match y_at(vals, d.a, d.m, d.u2) {
                    Some(y) => rhs = rhs.mul(&one.oplus(y)),
                    None => complete = false,
                }
            }
            for k in [m as i64 - 1, m as i64 + 1] {
                if k == 0 || k == (cfg.t(a) * cfg.level) as i64 {
                    continue;
                }
                match y_at(vals, a, k as usize, u2) {
                    Some(y) => rhs = rhs.div(&one.oplus(&y.inv())),
                    None => complete = false,
                }
            }
            if !complete {
                continue;
            }
            tally.record(l1.mul(l2) == rhs, || format!("Y-relation fails at {c:?}"));
        }
    }
    tally
}

/// Half periodicity `V(a,m,u+h∨+ℓ) = V(a,t_aℓ-m,u)` and full periodicity,
/// over every pair of points available in `vals`.
fn check_periodicity<V: PartialEq>(cfg: &BrConfig, vals: &BTreeMap<SystemIndex, V>) -> (Tally, Tally) {
    let half = 2 * cfg.half_period();
    let mut th = Tally::default();
    let mut tf = Tally::default();
    for (idx, v) in vals {
        let flip = SystemIndex::new(idx.a, cfg.t(idx.a) * cfg.level - idx.m, idx.u2 + half);
        if let Some(w) = vals.get(&flip) {
            th.record(v == w, || format!("half periodicity fails at {idx:?}"));
        }
        let shift = SystemIndex::new(idx.a, idx.m, idx.u2 + 2 * half);
        if let Some(w) = vals.get(&shift) {
            tf.record(v == w, || format!("full periodicity fails at {idx:?}"));
        }
    }
    (th, tf)
}

pub fn check_t_periodicity(cfg: &BrConfig, vals: &TValues) -> (Tally, Tally) {
    check_periodicity(cfg, vals)
}

pub fn check_y_periodicity<Y: PartialEq>(cfg: &BrConfig, vals: &YValues<Y>) -> (Tally, Tally) {
    check_periodicity(cfg, vals)
}
