//! Multivariate Laurent polynomials with big-integer coefficients.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::Error;

/// Terms are kept in a `BTreeMap`, so iteration (and the text form) is in
/// ascending lexicographic exponent order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i32>, BigInt>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut p = LaurentPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        LaurentPoly::constant(nvars, 1)
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        LaurentPoly::monomial(e)
    }

    pub fn monomial(exps: Vec<i32>) -> Self {
        let nvars = exps.len();
        let mut terms = BTreeMap::new();
        terms.insert(exps, BigInt::one());
        LaurentPoly { nvars, terms }
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<i32>, BigInt)>) -> Self {
        let mut p = LaurentPoly::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent length");
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i32>, BigInt> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(e, c)| c.is_one() && e.iter().all(|&k| k == 0))
    }

    fn add_term(&mut self, e: Vec<i32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.nvars, o.nvars);
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.nvars, o.nvars);
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.nvars, o.nvars);
        if self.terms.len() == 1 || o.terms.len() == 1 {
            let (m, p) = if self.terms.len() == 1 { (self, o) } else { (o, self) };
            let (me, mc) = m.terms.iter().next().expect("one term");
            return LaurentPoly {
                nvars: self.nvars,
                terms: p
                    .terms
                    .iter()
                    .map(|(e, c)| (add_exps(e, me), c * mc))
                    .collect(),
            };
        }
        let mut acc: HashMap<Vec<i32>, BigInt> = HashMap::with_capacity(self.terms.len() * o.terms.len());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                *acc.entry(add_exps(e1, e2)).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = LaurentPoly::one(self.nvars);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact division; fails if `d` does not divide `self` in the Laurent ring.
    pub fn div_exact(&self, d: &Self) -> Result<Self, Error> {
        assert_eq!(self.nvars, d.nvars);
        let (lead_e, lead_c) = d.terms.iter().next_back().ok_or(Error::NotDivisible)?;
        if self.is_zero() {
            return Ok(self.clone());
        }
        if d.terms.len() == 1 {
            let mut out = LaurentPoly::zero(self.nvars);
            for (e, c) in &self.terms {
                let (q, rem) = c.div_rem(lead_c);
                if !rem.is_zero() {
                    return Err(Error::NotDivisible);
                }
                out.terms.insert(sub_exps(e, lead_e), q);
            }
            return Ok(out);
        }
        // Lex order is a group order, so the lowest quotient term is fixed in advance.
        let low_p = self.terms.keys().next().expect("nonzero");
        let low_d = d.terms.keys().next().expect("nonzero");
        let floor = sub_exps(low_p, low_d);
        let mut r = self.clone();
        let mut q = LaurentPoly::zero(self.nvars);
        while let Some((e, c)) = r.terms.iter().next_back() {
            let qe = sub_exps(e, lead_e);
            if qe < floor {
                return Err(Error::NotDivisible);
            }
            let (qc, rem) = c.div_rem(lead_c);
            if !rem.is_zero() {
                return Err(Error::NotDivisible);
            }
            for (de, dc) in &d.terms {
                r.add_term(add_exps(de, &qe), -(&qc * dc));
            }
            q.terms.insert(qe, qc);
        }
        Ok(q)
    }

    /// Sets the variables in `range` to 1 and drops them.
    pub fn specialize_to_one(&self, range: std::ops::Range<usize>) -> Self {
        let nvars = self.nvars - range.len();
        let mut out = LaurentPoly::zero(nvars);
        for (e, c) in &self.terms {
            let ne: Vec<i32> = e
                .iter()
                .enumerate()
                .filter(|(i, _)| !range.contains(i))
                .map(|(_, &k)| k)
                .collect();
            out.add_term(ne, c.clone());
        }
        out
    }

    /// Keeps variables in `range` and sets all others to 1.
    pub fn restrict_vars(&self, range: std::ops::Range<usize>) -> Self {
        let nvars = range.len();
        let mut out = LaurentPoly::zero(nvars);
        for (e, c) in &self.terms {
            out.add_term(e[range.clone()].to_vec(), c.clone());
        }
        out
    }

    pub fn min_exponent(&self, var: usize) -> Option<i32> {
        self.terms.keys().map(|e| e[var]).min()
    }

    pub fn all_coeffs_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn constant_term(&self) -> BigInt {
        self.terms
            .get(&vec![0; self.nvars])
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Substitutes `x_i -> x_{p[i]}`.
    pub fn permute_vars(&self, p: &[usize]) -> Self {
        let mut out = LaurentPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; self.nvars];
            for (i, &k) in e.iter().enumerate() {
                ne[p[i]] = k;
            }
            out.terms.insert(ne, c.clone());
        }
        out
    }

    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.nvars);
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t *= num_traits::pow(x.clone(), k as usize);
                } else if k < 0 {
                    t *= num_traits::pow(x.recip(), (-k) as usize);
                }
            }
            acc += t;
        }
        acc
    }

    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        use num_traits::ToPrimitive;
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut t = c.to_f64().unwrap_or(f64::NAN);
                for (x, &k) in point.iter().zip(e) {
                    t *= x.powi(k);
                }
                t
            })
            .sum()
    }

    /// Canonical text form with the given variable names.
    pub fn format_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (n, (e, c)) in self.terms.iter().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k != 0)
                .map(|(i, &k)| if k == 1 { names[i].clone() } else { format!("{}^{}", names[i], k) })
                .collect();
            let neg = c.is_negative();
            if n > 0 {
                s.push_str(if neg { " - " } else { " + " });
            } else if neg {
                s.push('-');
            }
            let a = c.abs();
            if mono.is_empty() {
                s.push_str(&a.to_string());
            } else {
                if !a.is_one() {
                    s.push_str(&a.to_string());
                    s.push('*');
                }
                s.push_str(&mono.join("*"));
            }
        }
        s
    }
}

fn add_exps(a: &[i32], b: &[i32]) -> Vec<i32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub_exps(a: &[i32], b: &[i32]) -> Vec<i32> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("v{i}")).collect();
        f.write_str(&self.format_with(&names))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> LaurentPoly {
        LaurentPoly::var(i, 3)
    }

    #[test]
    fn exact_division_round_trips() {
        let a = x(0).add(&x(1)).add(&LaurentPoly::constant(3, 2));
        let b = x(2).add(&LaurentPoly::monomial(vec![-1, 0, 0]));
        let p = a.mul(&b);
        assert_eq!(p.div_exact(&b).unwrap(), a);
        assert_eq!(p.div_exact(&a).unwrap(), b);
        assert_eq!(p.div_exact(&LaurentPoly::monomial(vec![1, 1, -2])).unwrap().mul(&LaurentPoly::monomial(vec![1, 1, -2])), p);
    }

    #[test]
    fn non_divisible_is_reported() {
        let a = x(0).add(&LaurentPoly::one(3));
        let b = x(0).add(&LaurentPoly::constant(3, 2));
        assert!(matches!(a.div_exact(&b), Err(Error::NotDivisible)));
        let c = LaurentPoly::constant(3, 3);
        assert!(a.div_exact(&c).is_err());
    }

    #[test]
    fn canonical_text() {
        let p = x(0).sub(&LaurentPoly::constant(3, 2)).add(&LaurentPoly::monomial(vec![0, -1, 2]).mul(&LaurentPoly::constant(3, 3)));
        assert_eq!(p.to_string(), "3*v2^-1*v3^2 - 2 + v1");
    }

    #[test]
    fn specialization() {
        let p = x(0).mul(&x(2)).add(&x(1));
        assert_eq!(p.specialize_to_one(0..1), LaurentPoly::var(0, 2).add(&LaurentPoly::var(1, 2)));
        assert_eq!(p.restrict_vars(1..3).len(), 2);
    }
}
