//! F-polynomials of the B_r cluster pattern and their separation identities.

use num_rational::BigRational;
use num_traits::One;

use crate::br::{t_support, BrConfig, SystemIndex, TValues, Walk, YValues};
use crate::laurent::LaurentPoly;
use crate::report::Tally;
use crate::seed::{f_polynomial, ClusterMode, Seed};
use crate::semifield::{PosRational, TropMonomial};
use crate::Error;

/// Principal-coefficient walk with x specialised to 1, so every cluster entry is an F-polynomial.
pub fn f_walk(cfg: &BrConfig, from_u2: i64, to_u2: i64) -> Result<Walk<TropMonomial>, Error> {
    Walk::run(cfg, Seed::principal(cfg.matrix(), ClusterMode::FOnly)?, from_u2, to_u2)
}

fn lift(m: &TropMonomial) -> LaurentPoly {
    LaurentPoly::monomial(m.exps().iter().map(|&k| i32::try_from(k).expect("small exponent")).collect())
}

fn monomial_value(m: &TropMonomial, point: &[BigRational]) -> BigRational {
    lift(m).eval(point)
}

fn f_at<'a>(cfg: &BrConfig, f: &'a TValues, one: &'a LaurentPoly, a: usize, m: usize, u2: i64) -> Option<&'a LaurentPoly> {
    if m == 0 || m == cfg.t(a) * cfg.level {
        return Some(one);
    }
    f.get(&SystemIndex::new(a, m, u2))
}

struct Terms<'a> {
    lhs: (&'a LaurentPoly, &'a LaurentPoly),
    neighbours: (&'a LaurentPoly, &'a LaurentPoly),
    support: LaurentPoly,
}

fn terms<'a>(cfg: &BrConfig, f: &'a TValues, one: &'a LaurentPoly, c: SystemIndex) -> Option<Terms<'a>> {
    let SystemIndex { a, m, u2 } = c;
    let s = 2 / cfg.t(a) as i64;
    let get = |a, m, u2| f_at(cfg, f, one, a, m, u2);
    let lhs = (get(a, m, u2 - s)?, get(a, m, u2 + s)?);
    let neighbours = (get(a, m - 1, u2)?, get(a, m + 1, u2)?);
    let mut support = one.clone();
    for d in t_support(cfg, c) {
        support = support.mul(get(d.a, d.m, d.u2)?);
    }
    Some(Terms { lhs, neighbours, support })
}

/// Y-points that are centres of T-relations.
fn centres<'a, V>(cfg: &'a BrConfig, y: &'a YValues<V>) -> impl Iterator<Item = (SystemIndex, &'a V)> + 'a {
    y.iter().filter(move |(c, _)| cfg.is_p_prime_plus(**c)).map(|(c, v)| (*c, v))
}

/// `F(u-1/t) F(u+1/t) = [y/(1+y)]_T ∏F^G + [1/(1+y)]_T F_{m-1} F_{m+1}` as polynomials.
pub fn check_f1(cfg: &BrConfig, f: &TValues, ytrop: &YValues<TropMonomial>) -> Tally {
    let mut t = Tally::default();
    let Some(one) = f.values().next().map(|p| LaurentPoly::one(p.nvars())) else {
        return t;
    };
    for (c, y) in centres(cfg, ytrop) {
        let Some(tm) = terms(cfg, f, &one, c) else { continue };
        let lhs = tm.lhs.0.mul(tm.lhs.1);
        let rhs = lift(&y.positive_part())
            .mul(&tm.support)
            .add(&lift(&y.negative_part()).mul(&tm.neighbours.0.mul(tm.neighbours.1)));
        t.record(lhs == rhs, || format!("F1 fails at {c:?}"));
    }
    t
}

/// The two separation formulas at a positive rational point: `yrat` is the
/// exact evolution from `point`, `ytrop` the tropical one.
pub fn check_f2_f3(
    cfg: &BrConfig,
    f: &TValues,
    ytrop: &YValues<TropMonomial>,
    yrat: &YValues<PosRational>,
    point: &[BigRational],
) -> (Tally, Tally) {
    let mut t2 = Tally::default();
    let mut t3 = Tally::default();
    let Some(one) = f.values().next().map(|p| LaurentPoly::one(p.nvars())) else {
        return (t2, t3);
    };
    for (c, y) in centres(cfg, ytrop) {
        let (Some(tm), Some(exact)) = (terms(cfg, f, &one, c), yrat.get(&c)) else { continue };
        let ev = |p: &LaurentPoly| p.eval(point);
        let den = ev(tm.neighbours.0) * ev(tm.neighbours.1);
        let f2 = monomial_value(y, point) * ev(&tm.support) / &den;
        t2.record(&f2 == exact.value(), || format!("F2 fails at {c:?}"));
        let trop_one_plus = monomial_value(&TropMonomial::from_exps(y.exps().iter().map(|&k| k.min(0)).collect()), point);
        let f3 = trop_one_plus * ev(tm.lhs.0) * ev(tm.lhs.1) / den;
        t3.record(f3 == BigRational::one() + exact.value(), || format!("F3 fails at {c:?}"));
    }
    (t2, t3)
}

/// Every cluster entry of an F-walk is a polynomial with constant term 1.
pub fn check_constant_terms(walk: &Walk<TropMonomial>) -> Tally {
    let n = walk.cfg.n_vertices();
    let mut t = Tally::default();
    for u2 in walk.from_u2()..=walk.to_u2() {
        for i in 0..n {
            let p = walk.x(i, u2).expect("F-walk tracks entries");
            t.record(f_polynomial(p, ClusterMode::FOnly, n).is_ok(), || {
                format!("F at {} 2u={u2} is not a polynomial with constant term 1", walk.cfg.label(i))
            });
        }
    }
    t
}

/// `F_i(u+h∨+ℓ) = F_{ω(i)}(u)` and `F_i(u+2(h∨+ℓ)) = F_i(u)` over one period
/// starting at the beginning of the walk.
pub fn check_f_periodicity(walk: &Walk<TropMonomial>) -> Result<(Tally, Tally), Error> {
    let cfg = &walk.cfg;
    let half = 2 * cfg.half_period();
    let start = walk.from_u2();
    if walk.to_u2() < start + 4 * half - 1 {
        return Err(Error::Config("F-walk shorter than two periods".into()));
    }
    let w = cfg.rotation();
    let mut th = Tally::default();
    let mut tf = Tally::default();
    for u2 in start..start + 2 * half {
        for i in 0..cfg.n_vertices() {
            th.record(walk.x(i, u2 + half) == walk.x(w[i], u2), || format!("F half period at {} 2u={u2}", cfg.label(i)));
            tf.record(walk.x(i, u2 + 2 * half) == walk.x(i, u2), || format!("F full period at {} 2u={u2}", cfg.label(i)));
        }
    }
    Ok((th, tf))
}
