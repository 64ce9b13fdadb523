use serde::{Deserialize, Serialize};

use super::BrConfig;
use crate::Error;

/// Parity of a vertex at a time point: mutated going forward (`Plus`),
/// going backward (`Minus`), or static.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Parity {
    Plus,
    Minus,
    None,
}

impl Parity {
    pub fn symbol(self) -> &'static str {
        match self {
            Parity::Plus => "p+",
            Parity::Minus => "p-",
            Parity::None => "none",
        }
    }
}

/// An index `(a, m, u)` of the T/Y-systems, with `u2 = 2u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SystemIndex {
    pub a: usize,
    pub m: usize,
    pub u2: i64,
}

impl SystemIndex {
    pub fn new(a: usize, m: usize, u2: i64) -> Self {
        SystemIndex { a, m, u2 }
    }
}

impl BrConfig {
    pub fn max_m(&self, a: usize) -> usize {
        self.t(a) * self.level - 1
    }

    pub fn contains(&self, idx: SystemIndex) -> bool {
        (1..=self.r).contains(&idx.a) && (1..=self.max_m(idx.a)).contains(&idx.m)
    }

    /// Condition P+ (T-variables that the cluster realises).
    pub fn is_p_plus(&self, idx: SystemIndex) -> bool {
        if idx.a == self.r {
            (idx.m as i64 + idx.u2).rem_euclid(2) == 0
        } else {
            idx.u2.rem_euclid(2) == 0
        }
    }

    /// Condition P'+ (Y-variables that the coefficients realise).
    pub fn is_p_prime_plus(&self, idx: SystemIndex) -> bool {
        if idx.a == self.r {
            (idx.m as i64 + idx.u2).rem_euclid(2) == 1
        } else {
            idx.u2.rem_euclid(2) == 0
        }
    }

    /// The `(a, m)` pairs of the index set, in order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (1..=self.r)
            .flat_map(|a| (1..=self.max_m(a)).map(move |m| (a, m)))
            .collect()
    }

    fn place(&self, a: usize, m: usize, u2: i64) -> Result<usize, Error> {
        let col = if a == self.r {
            a
        } else {
            let u = u2.div_euclid(2);
            if (self.r as i64 + a as i64 + m as i64 + u).rem_euclid(2) == 1 {
                a
            } else {
                2 * self.r - a
            }
        };
        self.index(col, m)
            .ok_or_else(|| Error::Config(format!("no vertex for ({a},{m})")))
    }
}

/// `(a, m, u)` with P+ to the p+ point `(i, u + 1/t_a)` carrying `x^{(a)}_m(u)`.
pub fn g_map(cfg: &BrConfig, idx: SystemIndex) -> Result<(usize, i64), Error> {
    if !cfg.contains(idx) || !cfg.is_p_plus(idx) {
        return Err(Error::Domain(format!("{idx:?} does not satisfy P+")));
    }
    let u2 = idx.u2 + 2 / cfg.t(idx.a) as i64;
    Ok((cfg.place(idx.a, idx.m, u2)?, u2))
}

/// `(a, m, u)` with P'+ to the p+ point `(i, u)` carrying `y^{(a)}_m(u)`.
pub fn g_prime_map(cfg: &BrConfig, idx: SystemIndex) -> Result<(usize, i64), Error> {
    if !cfg.contains(idx) || !cfg.is_p_prime_plus(idx) {
        return Err(Error::Domain(format!("{idx:?} does not satisfy P'+")));
    }
    Ok((cfg.place(idx.a, idx.m, idx.u2)?, idx.u2))
}

fn unplace(cfg: &BrConfig, i: usize, u2: i64) -> Result<(usize, usize), Error> {
    if cfg.parity(i, u2) != Parity::Plus {
        return Err(Error::Domain(format!("vertex {} at 2u={u2} is not a p+ point", cfg.label(i))));
    }
    let (c, k) = cfg.vertex(i);
    let a = c.min(2 * cfg.r - c);
    Ok((a, k))
}

pub fn g_inverse(cfg: &BrConfig, i: usize, u2: i64) -> Result<SystemIndex, Error> {
    let (a, m) = unplace(cfg, i, u2)?;
    let idx = SystemIndex::new(a, m, u2 - 2 / cfg.t(a) as i64);
    match g_map(cfg, idx) {
        Ok(p) if p == (i, u2) => Ok(idx),
        _ => Err(Error::Domain(format!("no preimage of ({}, {u2}) under g", cfg.label(i)))),
    }
}

pub fn g_prime_inverse(cfg: &BrConfig, i: usize, u2: i64) -> Result<SystemIndex, Error> {
    let (a, m) = unplace(cfg, i, u2)?;
    let idx = SystemIndex::new(a, m, u2);
    match g_prime_map(cfg, idx) {
        Ok(p) if p == (i, u2) => Ok(idx),
        _ => Err(Error::Domain(format!("no preimage of ({}, {u2}) under g'", cfg.label(i)))),
    }
}

/// The factors of the second product in the T-relation centred at `c`,
/// with unit-boundary factors dropped.
pub fn t_support(cfg: &BrConfig, c: SystemIndex) -> Vec<SystemIndex> {
    let r = cfg.r;
    let SystemIndex { a, m, u2 } = c;
    let mut out = Vec::new();
    let mut push = |b: usize, k: usize, v2: i64| {
        let d = SystemIndex::new(b, k, v2);
        if b >= 1 && k >= 1 && cfg.contains(d) {
            out.push(d);
        }
    };
    if a + 1 < r {
        push(a.wrapping_sub(1), m, u2);
        push(a + 1, m, u2);
    } else if a + 1 == r {
        push(r.wrapping_sub(2), m, u2);
        push(r, 2 * m, u2);
    } else if m % 2 == 0 {
        push(r - 1, m / 2, u2 - 1);
        push(r - 1, m / 2, u2 + 1);
    } else {
        push(r - 1, m / 2, u2);
        push(r - 1, m / 2 + 1, u2);
    }
    out
}

/// `G(b,k,v; a,m,u)`: the exponent of `T^{(b)}_k(v)` in the relation centred at `(a,m,u)`.
pub fn g_exponent(cfg: &BrConfig, d: SystemIndex, c: SystemIndex) -> u32 {
    t_support(cfg, c).iter().filter(|&&x| x == d).count() as u32
}

/// The Y-variables whose `1 + Y` appears in the numerator of the Y-relation
/// centred at `c`, i.e. the transpose of `G`.
pub fn y_support(cfg: &BrConfig, c: SystemIndex) -> Vec<SystemIndex> {
    let mut out = Vec::new();
    for b in c.a.saturating_sub(1).max(1)..=(c.a + 1).min(cfg.r) {
        for k in 1..=cfg.max_m(b) {
            for v2 in c.u2 - 2..=c.u2 + 2 {
                let d = SystemIndex::new(b, k, v2);
                if cfg.is_p_prime_plus(d) {
                    for _ in 0..g_exponent(cfg, c, d) {
                        out.push(d);
                    }
                }
            }
        }
    }
    out
}
