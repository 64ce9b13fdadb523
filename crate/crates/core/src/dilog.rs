//! Rogers dilogarithm, the constant Y-system and the dilogarithm identities.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::br::{g_prime_inverse, y_values, BrConfig, Parity, SystemIndex, Walk};
use crate::rng::{positive_point, rng};
use crate::semifield::PosRational;
use crate::seed::Seed;
use crate::Error;

const GL_POINTS: usize = 16;
const PANELS: usize = 48;

/// Gauss-Legendre nodes and weights on [-1, 1].
fn gauss_legendre() -> &'static [(f64, f64)] {
    static RULE: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    RULE.get_or_init(|| {
        let n = GL_POINTS;
        (1..=n)
            .map(|i| {
                let mut x = (PI * (i as f64 - 0.25) / (n as f64 + 0.5)).cos();
                let mut dp = 0.0;
                for _ in 0..100 {
                    let (mut p0, mut p1) = (1.0, x);
                    for k in 2..=n {
                        let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                        p0 = p1;
                        p1 = p2;
                    }
                    dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                    let dx = p1 / dp;
                    x -= dx;
                    if dx.abs() < 1e-16 {
                        break;
                    }
                }
                (x, 2.0 / ((1.0 - x * x) * dp * dp))
            })
            .collect()
    })
}

fn integrand(y: f64) -> f64 {
    (-y).ln_1p() / y + y.ln() / (1.0 - y)
}

/// `L(x)` for `0 <= x <= 1/2`: quadrature on panels `[x/2^{k+1}, x/2^k]`
/// and a power series on the last sliver.
fn rogers_small(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    let rule = gauss_legendre();
    let mut integral = 0.0;
    let mut hi = x;
    for _ in 0..PANELS {
        let lo = hi / 2.0;
        let (mid, half) = ((hi + lo) / 2.0, (hi - lo) / 2.0);
        integral += half * rule.iter().map(|&(t, w)| w * integrand(mid + half * t)).sum::<f64>();
        hi = lo;
    }
    // ∫_0^e log(1-y)/y dy = -Li2(e), ∫_0^e y^n log y dy = e^{n+1}(log e - 1/(n+1))/(n+1)
    let e = hi;
    let le = e.ln();
    let mut tail = 0.0;
    let mut pow = e;
    for n in 1..6 {
        let k = n as f64;
        tail += -pow / (k * k) + pow * (le - 1.0 / k) / k;
        pow *= e;
    }
    -0.5 * (integral + tail)
}

/// The Rogers dilogarithm on `[0, 1]`.
pub fn rogers_l(x: f64) -> Result<f64, Error> {
    if !(0.0..=1.0).contains(&x) || x.is_nan() {
        return Err(Error::Domain(format!("L({x}) needs 0 <= x <= 1")));
    }
    Ok(if x <= 0.5 { rogers_small(x) } else { PI * PI / 6.0 - rogers_small(1.0 - x) })
}

/// `(α_a|α_b)` for B_r with long roots of length 2.
pub fn bilinear_form(cfg: &BrConfig, a: usize, b: usize) -> i64 {
    if a == b {
        if a == cfg.r {
            1
        } else {
            2
        }
    } else if a.abs_diff(b) == 1 {
        -1
    } else {
        0
    }
}

/// Symmetric matrix on the pairs `(a, m)` of the index set.
#[derive(Clone, Debug, PartialEq)]
pub struct KMatrix {
    pub pairs: Vec<(usize, usize)>,
    pub entries: Vec<Vec<BigRational>>,
}

impl KMatrix {
    pub fn get(&self, (a, m): (usize, usize), (b, k): (usize, usize)) -> Option<&BigRational> {
        let i = self.pairs.iter().position(|&p| p == (a, m))?;
        let j = self.pairs.iter().position(|&p| p == (b, k))?;
        Some(&self.entries[i][j])
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.pairs.len();
        (0..n).all(|i| (0..n).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    /// All leading principal minors, by exact elimination.
    pub fn leading_minors(&self) -> Vec<BigRational> {
        let n = self.pairs.len();
        let mut m = self.entries.clone();
        let mut out = Vec::with_capacity(n);
        let mut det = BigRational::one();
        for c in 0..n {
            // without pivoting the k-th pivot is minor_k / minor_{k-1}
            let p = m[c][c].clone();
            det *= &p;
            out.push(det.clone());
            if p.is_zero() {
                out.extend(std::iter::repeat(BigRational::zero()).take(n - c - 1));
                break;
            }
            for r in c + 1..n {
                let f = &m[r][c] / &p;
                for k in c..n {
                    let v = &f * &m[c][k];
                    m[r][k] -= v;
                }
            }
        }
        out
    }

    pub fn is_positive_definite(&self) -> bool {
        self.leading_minors().iter().all(|d| d.is_positive())
    }

    fn to_f64(&self) -> Vec<Vec<f64>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|q| q.to_f64().expect("finite")).collect())
            .collect()
    }
}

/// `K^{mk}_{ab} = (α_a|α_b)(min(t_b m, t_a k) - mk/ℓ)`.
pub fn build_k(cfg: &BrConfig) -> KMatrix {
    let pairs = cfg.pairs();
    let l = cfg.level as i64;
    let entries = pairs
        .iter()
        .map(|&(a, m)| {
            pairs
                .iter()
                .map(|&(b, k)| {
                    let (m, k) = (m as i64, k as i64);
                    let mn = (cfg.t(b) as i64 * m).min(cfg.t(a) as i64 * k);
                    let v = BigRational::from_integer(mn.into()) - BigRational::new((m * k).into(), l.into());
                    v * BigRational::from_integer(bilinear_form(cfg, a, b).into())
                })
                .collect()
        })
        .collect();
    KMatrix { pairs, entries }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolverMethod {
    Damped,
    Newton,
}

#[derive(Clone, Debug)]
pub struct ConstantYSolution {
    pub cfg: BrConfig,
    pub pairs: Vec<(usize, usize)>,
    /// `f = Y/(1+Y)`.
    pub f: Vec<f64>,
    pub y: Vec<f64>,
    pub iterations: usize,
    /// `max |f - Φ(f)|`.
    pub residual: f64,
    pub method: SolverMethod,
}

impl ConstantYSolution {
    pub fn y_at(&self, a: usize, m: usize) -> Option<f64> {
        self.pairs.iter().position(|&p| p == (a, m)).map(|i| self.y[i])
    }
}

const MAX_ITER: usize = 100_000;

fn phi_log(k: &[Vec<f64>], g: &[f64]) -> Vec<f64> {
    let l1: Vec<f64> = g.iter().map(|&x| (-x.exp()).ln_1p()).collect();
    k.iter().map(|row| row.iter().zip(&l1).map(|(a, b)| a * b).sum()).collect()
}

fn residual(k: &[Vec<f64>], g: &[f64]) -> f64 {
    let next = phi_log(k, g);
    g.iter().zip(&next).map(|(a, b)| (a.exp() - b.exp()).abs()).fold(0.0, f64::max)
}

/// Solves `A x = b` by Gaussian elimination with partial pivoting.
fn solve_linear(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let n = b.len();
    for c in 0..n {
        let p = (c..n).max_by(|&i, &j| a[i][c].abs().total_cmp(&a[j][c].abs()))?;
        if a[p][c].abs() < 1e-300 {
            return None;
        }
        a.swap(c, p);
        b.swap(c, p);
        for r in c + 1..n {
            let f = a[r][c] / a[c][c];
            for k in c..n {
                a[r][k] -= f * a[c][k];
            }
            b[r] -= f * b[c];
        }
    }
    let mut x = vec![0.0; n];
    for r in (0..n).rev() {
        let s: f64 = (r + 1..n).map(|k| a[r][k] * x[k]).sum();
        x[r] = (b[r] - s) / a[r][r];
    }
    Some(x)
}

/// Newton on `g - K log(1 - e^g) = 0` with `g = log f`.
fn newton(k: &[Vec<f64>], mut g: Vec<f64>, tol: f64) -> Option<(Vec<f64>, usize)> {
    let n = g.len();
    for it in 1..=100 {
        let next = phi_log(k, &g);
        let fval: Vec<f64> = g.iter().zip(&next).map(|(a, b)| a - b).collect();
        let jac: Vec<Vec<f64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let e = g[j].exp();
                        (i == j) as u8 as f64 + k[i][j] * e / (1.0 - e)
                    })
                    .collect()
            })
            .collect();
        let step = solve_linear(jac, fval)?;
        let mut t = 1.0;
        loop {
            let cand: Vec<f64> = g.iter().zip(&step).map(|(a, s)| a - t * s).collect();
            if cand.iter().all(|&x| x < 0.0 && x.is_finite()) {
                g = cand;
                break;
            }
            t /= 2.0;
            if t < 1e-12 {
                return None;
            }
        }
        if residual(k, &g) < tol {
            return Some((g, it));
        }
    }
    None
}

/// Right-hand sides of the constant Y-system at `y` (indexed like `cfg.pairs()`).
fn ybc_rhs(cfg: &BrConfig, pairs: &[(usize, usize)], y: &[f64]) -> Vec<f64> {
    let r = cfg.r;
    let get = |a: usize, m: usize| -> Option<f64> {
        if a == 0 || m == 0 || m >= cfg.t(a) * cfg.level {
            None
        } else {
            pairs.iter().position(|&p| p == (a, m)).map(|i| y[i])
        }
    };
    // 1 + Y, or 1 when Y is a boundary zero
    let p = |a, m| get(a, m).map_or(1.0, |v| 1.0 + v);
    // 1 + 1/Y, or 1 when 1/Y is a boundary zero
    let q = |a, m| get(a, m).map_or(1.0, |v| 1.0 + 1.0 / v);
    pairs
        .iter()
        .map(|&(a, m)| {
            if a < r - 1 {
                p(a - 1, m) * p(a + 1, m) / (q(a, m - 1) * q(a, m + 1))
            } else if a == r - 1 {
                p(a - 1, m) * p(r, 2 * m - 1) * p(r, 2 * m).powi(2) * p(r, 2 * m + 1) / (q(a, m - 1) * q(a, m + 1))
            } else if m % 2 == 0 {
                p(r - 1, m / 2) / (q(r, m - 1) * q(r, m + 1))
            } else {
                1.0 / (q(r, m - 1) * q(r, m + 1))
            }
        })
        .collect()
}

/// Positive solution of the constant Y-system from a start `f` in `(0,1)^N`.
///
/// Iterates `log Y <- (log Y + log RHS / 2) / 2`, which keeps every `Y`
/// positive; the K-form residual `max |f - Φ(f)|` is the stopping rule.
pub fn solve_constant_y_from(cfg: &BrConfig, start: &[f64], tol: f64) -> Result<ConstantYSolution, Error> {
    if tol <= 0.0 || !tol.is_finite() {
        return Err(Error::Config(format!("tolerance must be positive, got {tol}")));
    }
    let kmat = build_k(cfg);
    let k = kmat.to_f64();
    let n = kmat.pairs.len();
    if start.len() != n || start.iter().any(|&f| !(f > 0.0 && f < 1.0)) {
        return Err(Error::Domain("start must lie in (0,1)^N".into()));
    }
    let log_f = |ly: &[f64]| -> Vec<f64> { ly.iter().map(|&x| -(-x).exp().ln_1p()).collect() };
    let mut ly: Vec<f64> = start.iter().map(|f| (f / (1.0 - f)).ln()).collect();
    let mut method = SolverMethod::Damped;
    let mut iterations = 0;
    let mut converged = false;
    while iterations < MAX_ITER {
        if residual(&k, &log_f(&ly)) < tol {
            converged = true;
            break;
        }
        let y: Vec<f64> = ly.iter().map(|x| x.exp()).collect();
        let rhs = ybc_rhs(cfg, &kmat.pairs, &y);
        if rhs.iter().any(|v| !(v.is_finite() && *v > 0.0)) {
            return Err(Error::NoConvergence(format!("iterate left (0,inf)^N at step {iterations}")));
        }
        ly = ly.iter().zip(&rhs).map(|(a, b)| 0.5 * a + 0.25 * b.ln()).collect();
        iterations += 1;
    }
    let mut g = log_f(&ly);
    if !converged {
        let (ng, it) = newton(&k, g, tol).ok_or_else(|| {
            Error::NoConvergence(format!("r={}, level={}: damped iteration and Newton both failed", cfg.r, cfg.level))
        })?;
        g = ng;
        iterations += it;
        method = SolverMethod::Newton;
    }
    let f: Vec<f64> = g.iter().map(|x| x.exp()).collect();
    let y = f.iter().map(|&f| f / (1.0 - f)).collect();
    Ok(ConstantYSolution {
        cfg: *cfg,
        pairs: kmat.pairs,
        residual: residual(&k, &g),
        f,
        y,
        iterations,
        method,
    })
}

pub fn solve_constant_y(cfg: &BrConfig, tol: f64) -> Result<ConstantYSolution, Error> {
    let n = cfg.pairs().len();
    solve_constant_y_from(cfg, &vec![0.5; n], tol)
}

/// Largest `|2 log Y - log RHS|` over the constant Y-system relations.
pub fn constant_y_residual(sol: &ConstantYSolution) -> f64 {
    let rhs = ybc_rhs(&sol.cfg, &sol.pairs, &sol.y);
    sol.y.iter().zip(&rhs).map(|(y, r)| (2.0 * y.ln() - r.ln()).abs()).fold(0.0, f64::max)
}

/// `r(ℓh - h∨)/(h∨ + ℓ)`.
pub fn central_charge(cfg: &BrConfig) -> f64 {
    let (r, l) = (cfg.r as f64, cfg.level as f64);
    r * (l * cfg.h() as f64 - cfg.h_dual() as f64) / (cfg.h_dual() as f64 + l)
}

/// `ℓ dim g/(h∨ + ℓ) - r` with `dim g = r(h + 1)`.
pub fn central_charge_from_dim(cfg: &BrConfig) -> f64 {
    let (r, l) = (cfg.r as f64, cfg.level as f64);
    let dim = r * (cfg.h() as f64 + 1.0);
    l * dim / (cfg.h_dual() as f64 + l) - r
}

#[derive(Clone, Debug)]
pub struct ConstantDi {
    pub lhs: f64,
    pub rhs: f64,
    pub solution: ConstantYSolution,
    pub yb_residual: f64,
}

impl ConstantDi {
    pub fn error(&self) -> f64 {
        (self.lhs - self.rhs).abs()
    }
}

/// `(6/π²) Σ L(f)` at the constant solution against the central charge.
pub fn check_constant_di(cfg: &BrConfig, tol: f64) -> Result<ConstantDi, Error> {
    let solution = solve_constant_y(cfg, tol)?;
    let sum: f64 = solution.f.iter().map(|&f| rogers_l(f)).sum::<Result<f64, _>>()?;
    Ok(ConstantDi {
        lhs: 6.0 / (PI * PI) * sum,
        rhs: central_charge(cfg),
        yb_residual: constant_y_residual(&solution),
        solution,
    })
}

/// Random positive rational `y(0)` for the coefficient walk.
pub fn random_initial(cfg: &BrConfig, rng: &mut impl Rng) -> Vec<PosRational> {
    positive_point(rng, cfg.n_vertices())
        .into_iter()
        .map(|q| PosRational::new(q).expect("positive"))
        .collect()
}

fn l_of_ratio(q: &BigRational) -> Result<f64, Error> {
    rogers_l(q.to_f64().ok_or_else(|| Error::Domain("ratio not representable".into()))?)
}

/// Sums of `L(Y/(1+Y))` and `L(1/(1+Y))` over one period of the P'+ points.
pub fn functional_sums(cfg: &BrConfig, y0: Vec<PosRational>) -> Result<(f64, f64), Error> {
    let h = 2 * cfg.period();
    let walk = Walk::run(cfg, Seed::coefficients(cfg.matrix(), y0)?, 0, h)?;
    let mut s_pos = 0.0;
    let mut s_neg = 0.0;
    for (idx, y) in y_values(&walk) {
        if !(0..h).contains(&idx.u2) {
            continue;
        }
        let one_plus = BigRational::one() + y.value();
        s_pos += l_of_ratio(&(y.value() / &one_plus))?;
        s_neg += l_of_ratio(&(BigRational::one() / one_plus))?;
    }
    let c = 6.0 / (PI * PI);
    Ok((c * s_pos, c * s_neg))
}

#[derive(Clone, Debug)]
pub struct FunctionalDi {
    /// Over the whole index set: two independent solutions on the P'+ points.
    pub di2: (f64, f64),
    pub di3: (f64, f64),
    /// Over one period of the P'+ points of the first solution.
    pub di4: (f64, f64),
}

fn rel(v: (f64, f64)) -> f64 {
    (v.0 - v.1).abs() / v.1.abs().max(1.0)
}

impl FunctionalDi {
    pub fn max_relative_error(&self) -> f64 {
        rel(self.di2).max(rel(self.di3)).max(rel(self.di4))
    }
}

/// `4r(2rℓ - 2r + 1)`.
pub fn di2_target(cfg: &BrConfig) -> f64 {
    let (r, l) = (cfg.r as f64, cfg.level as f64);
    4.0 * r * (2.0 * r * l - 2.0 * r + 1.0)
}

/// `4ℓ(rℓ + ℓ - 1)`.
pub fn di3_target(cfg: &BrConfig) -> f64 {
    let (r, l) = (cfg.r as f64, cfg.level as f64);
    4.0 * l * (r * l + l - 1.0)
}

/// Functional identities from random positive data drawn with `seed`.
pub fn check_functional_di(cfg: &BrConfig, seed: u64) -> Result<FunctionalDi, Error> {
    let mut g = rng(seed);
    let first = functional_sums(cfg, random_initial(cfg, &mut g))?;
    let second = functional_sums(cfg, random_initial(cfg, &mut g))?;
    Ok(FunctionalDi {
        di2: (first.0 + second.0, di2_target(cfg)),
        di3: (first.1 + second.1, di3_target(cfg)),
        di4: (first.0, di2_target(cfg) / 2.0),
    })
}

#[derive(Clone, Debug)]
pub struct ConstantDataWalk {
    /// `y(0)` that makes every P'+ value equal the constant solution.
    pub initial: Vec<f64>,
    /// `(6/π²) Σ L(Y/(1+Y))` over one period of P'+ points.
    pub sum: f64,
    /// Largest relative deviation of a P'+ value from the constant solution.
    pub deviation: f64,
}

/// Walks one period in floating point from initial data chosen so that each
/// vertex meets the constant solution at its first mutation.
pub fn constant_data_walk(cfg: &BrConfig, sol: &ConstantYSolution) -> Result<ConstantDataWalk, Error> {
    let n = cfg.n_vertices();
    let h = 2 * cfg.period();
    let mut y = vec![1.0f64; n];
    let mut known = vec![false; n];
    let mut initial = vec![f64::NAN; n];
    let mut sum = 0.0;
    let mut deviation: f64 = 0.0;
    for u2 in 0..h {
        let b = cfg.expected_matrix(u2);
        let batch = cfg.forward_batch(u2);
        for &k in &batch {
            debug_assert_eq!(cfg.parity(k, u2), Parity::Plus);
            let SystemIndex { a, m, .. } = g_prime_inverse(cfg, k, u2)?;
            let want = sol.y_at(a, m).ok_or_else(|| Error::Domain(format!("no constant value for ({a},{m})")))?;
            if known[k] {
                deviation = deviation.max((y[k] / want - 1.0).abs());
            } else {
                // y holds the accumulated factor since u = 0
                initial[k] = want / y[k];
                y[k] = want;
                known[k] = true;
            }
            sum += rogers_l(y[k] / (1.0 + y[k]))?;
        }
        for &k in &batch {
            let yk = y[k];
            for j in 0..n {
                let bkj = b.get(k, j);
                if j == k || bkj == 0 {
                    continue;
                }
                y[j] *= if bkj > 0 { (yk / (1.0 + yk)).powi(bkj as i32) } else { (1.0 + yk).powi(-bkj as i32) };
            }
            y[k] = 1.0 / yk;
        }
    }
    if known.iter().any(|k| !k) {
        return Err(Error::Domain("some vertex is never mutated in one period".into()));
    }
    Ok(ConstantDataWalk { initial, sum: 6.0 / (PI * PI) * sum, deviation })
}
