//! The tropical Y-system of type B_r: traces, sign structure, boundary
//! formulas, periodicity and sign counts.

use crate::br::{BrConfig, Parity};
use crate::report::Tally;
use crate::seed::mutate_coeffs_tropical_fast;
use crate::semifield::{classify_sign, trop_inv, SignClass, TropMonomial};
use crate::Error;

/// Bound on tropical exponents; exceeding it signals a schedule bug.
pub const EXPONENT_GUARD: i64 = 64;

/// `[y_i(u)]_T` for every vertex and every `from_u2 <= 2u <= to_u2`.
#[derive(Clone, Debug)]
pub struct TropicalTrace {
    pub cfg: BrConfig,
    from_u2: i64,
    tuples: Vec<Vec<TropMonomial>>,
    /// Number of mutations where y_k was mixed and the generic rule was used.
    pub fallbacks: usize,
}

/// Runs the tropical Y-system from `y(0) = (y_i)` over `from_u2 <= 2u <= to_u2`.
pub fn run_tropical(cfg: &BrConfig, from_u2: i64, to_u2: i64) -> Result<TropicalTrace, Error> {
    if from_u2 > 0 || to_u2 < 0 {
        return Err(Error::Config("trace window must contain u = 0".into()));
    }
    let n = cfg.n_vertices();
    let mats: Vec<_> = (0..4).map(|p| cfg.expected_matrix(p)).collect();
    let mat = |u2: i64| &mats[u2.rem_euclid(4) as usize];
    let y0: Vec<TropMonomial> = (0..n).map(|i| TropMonomial::generator(i, n)).collect();
    let mut fallbacks = 0;

    let mut step = |y: &[TropMonomial], u2: i64, forward: bool| -> Result<Vec<TropMonomial>, Error> {
        let batch = if forward { cfg.forward_batch(u2) } else { cfg.backward_batch(u2) };
        let mut b = mat(u2).clone();
        let mut y = y.to_vec();
        for k in batch {
            let out = mutate_coeffs_tropical_fast(&y, &b, k)?;
            fallbacks += out.fell_back as usize;
            y = out.y;
            b = b.mutate(k)?;
        }
        let to = if forward { u2 + 1 } else { u2 - 1 };
        if &b != mat(to) {
            return Err(Error::ScheduleMismatch(to));
        }
        if y.iter().any(|m| m.max_abs_exp() > EXPONENT_GUARD) {
            return Err(Error::Overflow);
        }
        Ok(y)
    };

    let mut fwd = vec![y0.clone()];
    for u2 in 0..to_u2 {
        let next = step(fwd.last().expect("nonempty"), u2, true)?;
        fwd.push(next);
    }
    let mut back = Vec::new();
    let mut cur = y0;
    for u2 in (from_u2 + 1..=0).rev() {
        cur = step(&cur, u2, false)?;
        back.push(cur.clone());
    }
    back.reverse();
    back.extend(fwd);
    Ok(TropicalTrace {
        cfg: *cfg,
        from_u2,
        tuples: back,
        fallbacks,
    })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SignCounts {
    pub positive: usize,
    pub negative: usize,
    pub one: usize,
    pub mixed: usize,
}

impl TropicalTrace {
    pub fn from_u2(&self) -> i64 {
        self.from_u2
    }

    pub fn to_u2(&self) -> i64 {
        self.from_u2 + self.tuples.len() as i64 - 1
    }

    pub fn tuple(&self, u2: i64) -> Option<&[TropMonomial]> {
        if u2 < self.from_u2 {
            return None;
        }
        self.tuples.get((u2 - self.from_u2) as usize).map(|v| v.as_slice())
    }

    pub fn get(&self, i: usize, u2: i64) -> Option<&TropMonomial> {
        self.tuple(u2).map(|t| &t[i])
    }

    fn covers(&self, lo: i64, hi: i64) -> Result<(), Error> {
        if self.from_u2 > lo || self.to_u2() < hi {
            return Err(Error::Config(format!(
                "trace covers 2u in [{}, {}], need [{lo}, {hi}]",
                self.from_u2,
                self.to_u2()
            )));
        }
        Ok(())
    }

    /// CSV with columns `i,ip,u2,parity,sign,<exponents>`.
    pub fn to_csv(&self) -> String {
        let cfg = &self.cfg;
        let mut s = String::from("i,ip,u2,parity,sign");
        for (c, k) in cfg.vertices() {
            s.push_str(&format!(",y{c}_{k}"));
        }
        s.push('\n');
        for u2 in self.from_u2..=self.to_u2() {
            for (i, (c, k)) in cfg.vertices().into_iter().enumerate() {
                let m = self.get(i, u2).expect("in range");
                s.push_str(&format!(
                    "{c},{k},{u2},{},{},{}\n",
                    cfg.parity(i, u2).symbol(),
                    classify_sign(m).symbol(),
                    m.csv_row()
                ));
            }
        }
        s
    }
}

/// Sign pattern at p+ points: positive for `0 <= u < ℓ`; for `-h∨ <= u < 0`
/// negative except on filled plus vertices at even `u`, which are positive.
pub fn check_sign_regions(trace: &TropicalTrace) -> Result<Tally, Error> {
    let cfg = &trace.cfg;
    let lo = -2 * cfg.h_dual();
    let hi = 2 * cfg.level as i64 - 1;
    trace.covers(lo, hi)?;
    let mut t = Tally::default();
    for u2 in lo..=hi {
        for i in cfg.forward_batch(u2) {
            let s = classify_sign(trace.get(i, u2).expect("covered"));
            let want = if u2 >= 0 {
                SignClass::Positive
            } else if cfg.is_filled(i) && cfg.sign_of(i) == crate::quiver::Sign::Plus && u2.rem_euclid(4) == 0 {
                SignClass::Positive
            } else {
                SignClass::Negative
            };
            t.record(s == want, || format!("vertex {} at 2u={u2}: {s:?}, expected {want:?}", cfg.label(i)));
        }
    }
    Ok(t)
}

/// `y_{ii'}(ℓ) = y_{i,ℓ-i'}^{-1}` (or `y_{r,2ℓ-i'}^{-1}`) and `y_{ii'}(-h∨) = y_{2r-i,i'}^{-1}`.
pub fn check_boundaries(trace: &TropicalTrace) -> Result<Tally, Error> {
    let cfg = &trace.cfg;
    let (lo, hi) = (-2 * cfg.h_dual(), 2 * cfg.level as i64);
    trace.covers(lo, hi)?;
    let n = cfg.n_vertices();
    let mut t = Tally::default();
    for (i, (c, k)) in cfg.vertices().into_iter().enumerate() {
        let top = if c == cfg.r {
            cfg.index(c, 2 * cfg.level - k)
        } else {
            cfg.index(c, cfg.level - k)
        }
        .expect("vertex");
        let want = trop_inv(&TropMonomial::generator(top, n));
        t.record(trace.get(i, hi) == Some(&want), || format!("u = level boundary at {c},{k}"));
        let mirror = cfg.index(2 * cfg.r - c, k).expect("vertex");
        let want = trop_inv(&TropMonomial::generator(mirror, n));
        t.record(trace.get(i, lo) == Some(&want), || format!("u = -h boundary at {c},{k}"));
    }
    Ok(t)
}

/// Half periodicity `[y_i(u+h∨+ℓ)] = [y_{ω(i)}(u)]` and full periodicity, for
/// every `u` of one period, plus `B(u+h∨+ℓ) = ω(B(u))` for the schedule.
pub fn check_tropical_periodicity(trace: &TropicalTrace) -> Result<(Tally, Tally), Error> {
    let cfg = &trace.cfg;
    let half = 2 * cfg.half_period();
    let start = trace.from_u2;
    trace.covers(start, start + 4 * half - 1)?;
    let w = cfg.rotation();
    let mut th = Tally::default();
    let mut tf = Tally::default();
    for u2 in start..start + 2 * half {
        for i in 0..cfg.n_vertices() {
            let a = trace.get(i, u2 + half);
            th.record(a == trace.get(w[i], u2), || format!("half period at {} 2u={u2}", cfg.label(i)));
        }
    }
    for u2 in start..start + 2 * half {
        for i in 0..cfg.n_vertices() {
            tf.record(trace.get(i, u2 + 2 * half) == trace.get(i, u2), || {
                format!("full period at {} 2u={u2}", cfg.label(i))
            });
        }
    }
    for p in 0..4 {
        let lhs = cfg.expected_matrix(p + half);
        let rhs = cfg.expected_matrix(p).apply_vertex_map(&w)?;
        th.record(lhs == rhs, || format!("B(u+h+l) != omega(B(u)) at 2u={p}"));
    }
    Ok((th, tf))
}

/// Sign classes of `[y_i(u)]_T` over the p+ points with `0 <= u < 2(h∨+ℓ)`.
pub fn count_signs(trace: &TropicalTrace) -> Result<SignCounts, Error> {
    let cfg = &trace.cfg;
    let hi = 2 * cfg.period() - 1;
    trace.covers(0, hi)?;
    let mut c = SignCounts::default();
    for (i, u2) in cfg.plus_points(0, hi + 1) {
        match classify_sign(trace.get(i, u2).expect("covered")) {
            SignClass::Positive => c.positive += 1,
            SignClass::Negative => c.negative += 1,
            SignClass::One => c.one += 1,
            SignClass::Mixed => c.mixed += 1,
        }
    }
    Ok(c)
}

/// `(N+, N-) = (2ℓ(ℓr+ℓ-1), 2r(2ℓr-2r+1))`.
pub fn expected_counts(cfg: &BrConfig) -> (usize, usize) {
    let (r, l) = (cfg.r, cfg.level);
    (2 * l * (l * r + l - 1), 2 * r * (2 * l * r - 2 * r + 1))
}

/// Number of p+ points in one period, `2(h∨+ℓ)(rℓ+ℓ-r)`.
pub fn plus_points_per_period(cfg: &BrConfig) -> usize {
    let (r, l) = (cfg.r, cfg.level);
    cfg.period() as usize * (r * l + l - r)
}

/// Whether a point is a mutation point at all.
pub fn is_mutation_point(cfg: &BrConfig, i: usize, u2: i64) -> bool {
    cfg.parity(i, u2) != Parity::None
}
