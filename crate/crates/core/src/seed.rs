//! Seeds and the exchange relations for coefficients and clusters.

use crate::laurent::LaurentPoly;
use crate::matrix::SkewMatrix;
use crate::semifield::{classify_sign, CoeffRatio, PosRational, Semifield, SignClass, Trivial, TropMonomial};
use crate::Error;

/// Which generators the cluster entries are written in. Variables are
/// ordered x_1..x_n, then y_1..y_n.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClusterMode {
    /// Laurent polynomials in x; coefficients are trivial.
    Trivial,
    /// Laurent in x, polynomial in y (principal coefficients).
    Principal,
    /// Principal coefficients with x specialised to 1: the entries are F-polynomials.
    FOnly,
}

impl ClusterMode {
    pub fn has_x(self) -> bool {
        !matches!(self, ClusterMode::FOnly)
    }

    pub fn has_y(self) -> bool {
        !matches!(self, ClusterMode::Trivial)
    }

    pub fn nvars(self, n: usize) -> usize {
        n * (self.has_x() as usize + self.has_y() as usize)
    }

    pub fn y_offset(self, n: usize) -> usize {
        if self.has_x() {
            n
        } else {
            0
        }
    }

    pub fn initial_entry(self, i: usize, n: usize) -> LaurentPoly {
        if self.has_x() {
            LaurentPoly::var(i, self.nvars(n))
        } else {
            LaurentPoly::one(self.nvars(n))
        }
    }
}

/// Coefficients that can drive a cluster exchange: supplies the two
/// monomial weights `y/(1⊕y)` and `1/(1⊕y)` as Laurent polynomials.
pub trait Coefficient: Semifield {
    fn exchange_weights(&self, mode: ClusterMode, n: usize) -> Result<(LaurentPoly, LaurentPoly), Error>;
}

impl Coefficient for Trivial {
    fn exchange_weights(&self, mode: ClusterMode, n: usize) -> Result<(LaurentPoly, LaurentPoly), Error> {
        if mode != ClusterMode::Trivial {
            return Err(Error::Unsupported("trivial coefficients need trivial cluster mode".into()));
        }
        let one = LaurentPoly::one(mode.nvars(n));
        Ok((one.clone(), one))
    }
}

impl Coefficient for TropMonomial {
    fn exchange_weights(&self, mode: ClusterMode, n: usize) -> Result<(LaurentPoly, LaurentPoly), Error> {
        if !mode.has_y() || self.len() != n {
            return Err(Error::Unsupported("tropical coefficients need principal cluster mode".into()));
        }
        let off = mode.y_offset(n);
        let lift = |m: TropMonomial| {
            let mut e = vec![0i32; mode.nvars(n)];
            for (i, &k) in m.exps().iter().enumerate() {
                e[off + i] = i32::try_from(k).expect("small exponent");
            }
            LaurentPoly::monomial(e)
        };
        Ok((lift(self.positive_part()), lift(self.negative_part())))
    }
}

impl Coefficient for PosRational {
    fn exchange_weights(&self, _: ClusterMode, _: usize) -> Result<(LaurentPoly, LaurentPoly), Error> {
        Err(Error::Unsupported("cluster tracking over positive rationals".into()))
    }
}

impl Coefficient for CoeffRatio {
    fn exchange_weights(&self, _: ClusterMode, _: usize) -> Result<(LaurentPoly, LaurentPoly), Error> {
        Err(Error::Unsupported("cluster tracking over polynomial ratios".into()))
    }
}

/// Coefficient mutation in any semifield.
pub fn mutate_coeffs<Y: Semifield>(y: &[Y], b: &SkewMatrix, k: usize) -> Result<Vec<Y>, Error> {
    check_index(b, y.len(), k)?;
    let yk = &y[k];
    let one = yk.one_like();
    let denom = one.oplus(yk);
    let pos = yk.div(&denom);
    Ok(y
        .iter()
        .enumerate()
        .map(|(i, yi)| {
            if i == k {
                yk.inv()
            } else {
                let bki = b.get(k, i);
                if bki >= 0 {
                    yi.mul(&pos.pow(bki))
                } else {
                    yi.mul(&denom.pow(-bki))
                }
            }
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq)]
pub struct FastOutcome {
    pub y: Vec<TropMonomial>,
    /// Set when y_k was neither positive nor negative and the generic rule was used.
    pub fell_back: bool,
}

/// Tropical coefficient mutation using the sign rule: `y_i` picks up a
/// factor `y_k^{|B_ki|}` exactly when the sign of `B_ki` agrees with the sign of `y_k`.
pub fn mutate_coeffs_tropical_fast(y: &[TropMonomial], b: &SkewMatrix, k: usize) -> Result<FastOutcome, Error> {
    check_index(b, y.len(), k)?;
    let sign = classify_sign(&y[k]);
    let s = match sign {
        SignClass::Positive => 1,
        SignClass::Negative => -1,
        SignClass::One => 0,
        SignClass::Mixed => {
            return Ok(FastOutcome {
                y: mutate_coeffs(y, b, k)?,
                fell_back: true,
            })
        }
    };
    let out = y
        .iter()
        .enumerate()
        .map(|(i, yi)| {
            if i == k {
                y[k].inv()
            } else {
                let bki = b.get(k, i);
                if s != 0 && bki.signum() == s {
                    yi.mul(&y[k].pow(bki.abs()))
                } else {
                    yi.clone()
                }
            }
        })
        .collect();
    Ok(FastOutcome { y: out, fell_back: false })
}

/// Cluster exchange at `k` with precomputed weights `(y/(1⊕y), 1/(1⊕y))`.
pub fn mutate_cluster(
    x: &[LaurentPoly],
    weights: &(LaurentPoly, LaurentPoly),
    b: &SkewMatrix,
    k: usize,
) -> Result<Vec<LaurentPoly>, Error> {
    check_index(b, x.len(), k)?;
    let mut plus = weights.0.clone();
    let mut minus = weights.1.clone();
    for (j, xj) in x.iter().enumerate() {
        let bjk = b.get(j, k);
        if bjk > 0 {
            plus = plus.mul(&xj.pow(bjk as u32));
        } else if bjk < 0 {
            minus = minus.mul(&xj.pow((-bjk) as u32));
        }
    }
    let xk = plus.add(&minus).div_exact(&x[k])?;
    let mut out = x.to_vec();
    out[k] = xk;
    Ok(out)
}

fn check_index(b: &SkewMatrix, len: usize, k: usize) -> Result<(), Error> {
    if b.size() != len {
        return Err(Error::Shape(format!("matrix size {} vs tuple length {len}", b.size())));
    }
    if k >= len {
        return Err(Error::IndexOutOfRange { index: k, size: len });
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq)]
pub struct Seed<Y> {
    pub b: SkewMatrix,
    pub x: Option<Vec<LaurentPoly>>,
    pub mode: ClusterMode,
    pub y: Vec<Y>,
}

impl<Y: Coefficient> Seed<Y> {
    /// A seed that only tracks `B` and `y`.
    pub fn coefficients(b: SkewMatrix, y: Vec<Y>) -> Result<Self, Error> {
        if b.size() != y.len() {
            return Err(Error::Shape("coefficient tuple length".into()));
        }
        Ok(Seed {
            b,
            x: None,
            mode: ClusterMode::Trivial,
            y,
        })
    }

    pub fn size(&self) -> usize {
        self.b.size()
    }

    pub fn mutate(&self, k: usize) -> Result<Self, Error> {
        let n = self.size();
        let x = match &self.x {
            Some(x) => {
                let w = self.y.get(k).ok_or(Error::IndexOutOfRange { index: k, size: n })?.exchange_weights(self.mode, n)?;
                let x = mutate_cluster(x, &w, &self.b, k)?;
                if self.mode.has_y() {
                    let off = self.mode.y_offset(n);
                    let bad = (off..off + n).any(|v| x[k].min_exponent(v).is_some_and(|e| e < 0));
                    if bad || !x[k].all_coeffs_nonnegative() {
                        return Err(Error::LaurentViolation(k));
                    }
                }
                Some(x)
            }
            None => None,
        };
        Ok(Seed {
            b: self.b.mutate(k)?,
            x,
            mode: self.mode,
            y: mutate_coeffs(&self.y, &self.b, k)?,
        })
    }

    /// Mutates at every vertex of `batch`. The vertices must be pairwise
    /// unconnected, so the order does not matter.
    pub fn mutate_batch(&self, batch: &[usize]) -> Result<Self, Error> {
        for (p, &i) in batch.iter().enumerate() {
            for &j in &batch[p + 1..] {
                if self.b.get(i, j) != 0 {
                    return Err(Error::BatchNotCommuting(i, j));
                }
            }
        }
        let mut s = self.clone();
        for &k in batch {
            s = s.mutate(k)?;
        }
        Ok(s)
    }
}

impl Seed<Trivial> {
    pub fn trivial(b: SkewMatrix) -> Self {
        let n = b.size();
        Seed {
            x: Some((0..n).map(|i| ClusterMode::Trivial.initial_entry(i, n)).collect()),
            mode: ClusterMode::Trivial,
            y: vec![Trivial; n],
            b,
        }
    }
}

impl Seed<TropMonomial> {
    /// Principal coefficients; `FOnly` drops the x-variables.
    pub fn principal(b: SkewMatrix, mode: ClusterMode) -> Result<Self, Error> {
        if !mode.has_y() {
            return Err(Error::Unsupported("principal seeds need y-variables".into()));
        }
        let n = b.size();
        Ok(Seed {
            x: Some((0..n).map(|i| mode.initial_entry(i, n)).collect()),
            mode,
            y: (0..n).map(|i| TropMonomial::generator(i, n)).collect(),
            b,
        })
    }

    pub fn tropical(b: SkewMatrix) -> Self {
        let n = b.size();
        Seed {
            x: None,
            mode: ClusterMode::Trivial,
            y: (0..n).map(|i| TropMonomial::generator(i, n)).collect(),
            b,
        }
    }
}

pub fn mutate_seed<Y: Coefficient>(s: &Seed<Y>, k: usize) -> Result<Seed<Y>, Error> {
    s.mutate(k)
}

/// Polynomial in y with nonnegative coefficients and constant term 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FPolynomial(LaurentPoly);

impl FPolynomial {
    pub fn new(p: LaurentPoly) -> Result<Self, Error> {
        let nonneg_exps = (0..p.nvars()).all(|v| p.min_exponent(v).is_none_or(|e| e >= 0));
        if !nonneg_exps || !p.all_coeffs_nonnegative() {
            return Err(Error::Domain(format!("not a nonnegative polynomial: {p}")));
        }
        if !num_traits::One::is_one(&p.constant_term()) {
            return Err(Error::Domain(format!("constant term is not 1: {p}")));
        }
        Ok(FPolynomial(p))
    }

    pub fn poly(&self) -> &LaurentPoly {
        &self.0
    }

    pub fn into_poly(self) -> LaurentPoly {
        self.0
    }
}

/// Specialises every x-variable of a principal-mode entry to 1.
pub fn f_polynomial(x_entry: &LaurentPoly, mode: ClusterMode, n: usize) -> Result<FPolynomial, Error> {
    let p = match mode {
        ClusterMode::Principal => x_entry.specialize_to_one(0..n),
        ClusterMode::FOnly => x_entry.clone(),
        ClusterMode::Trivial => return Err(Error::Unsupported("F-polynomials need principal coefficients".into())),
    };
    FPolynomial::new(p)
}
