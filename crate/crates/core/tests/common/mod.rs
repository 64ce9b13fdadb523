//! Strategies shared by the property suites.
#![allow(dead_code)]

use brlab::semifield::{CoeffPoly, CoeffRatio, PosRational, Semifield, TropMonomial};
use brlab::SkewMatrix;
use num_rational::BigRational;
use proptest::prelude::*;

pub const CASES: u32 = 10_000;

pub fn skew(max_n: usize, max_entry: i64) -> impl Strategy<Value = SkewMatrix> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(-max_entry..=max_entry, n * (n - 1) / 2).prop_map(move |upper| {
            let mut rows = vec![vec![0i64; n]; n];
            let mut it = upper.into_iter();
            for i in 0..n {
                for j in i + 1..n {
                    let v = it.next().expect("enough entries");
                    rows[i][j] = v;
                    rows[j][i] = -v;
                }
            }
            SkewMatrix::from_rows(&rows).expect("skew by construction")
        })
    })
}

pub fn with_vertex(max_n: usize, max_entry: i64) -> impl Strategy<Value = (SkewMatrix, usize)> {
    skew(max_n, max_entry).prop_flat_map(|b| {
        let n = b.size();
        (Just(b), 0..n)
    })
}

pub fn rational() -> impl Strategy<Value = PosRational> {
    (1i64..50, 1i64..50).prop_map(|(a, b)| PosRational::from_ratio(a, b).expect("positive"))
}

pub fn monomial(n: usize) -> impl Strategy<Value = TropMonomial> {
    proptest::collection::vec(-4i64..=4, n).prop_map(TropMonomial::from_exps)
}

pub fn poly() -> impl Strategy<Value = CoeffPoly> {
    proptest::collection::vec((1u64..3, 0u32..3, 0u32..3), 1..4).prop_map(|terms| {
        let mut p: Option<CoeffPoly> = None;
        for (c, a, b) in terms {
            let mut t = CoeffPoly::constant(2, c);
            for _ in 0..a {
                t = t.mul(&CoeffPoly::generator(0, 2));
            }
            for _ in 0..b {
                t = t.mul(&CoeffPoly::generator(1, 2));
            }
            p = Some(match p {
                Some(q) => q.add(&t),
                None => t,
            });
        }
        p.expect("at least one term")
    })
}

pub fn ratio() -> impl Strategy<Value = CoeffRatio> {
    (poly(), poly()).prop_map(|(num, den)| CoeffRatio { num, den })
}

pub fn axioms<S: Semifield>(a: &S, b: &S, c: &S) -> Result<(), TestCaseError> {
    let one = a.one_like();
    prop_assert_eq!(a.mul(b), b.mul(a));
    prop_assert_eq!(a.mul(&b.mul(c)), a.mul(b).mul(c));
    prop_assert_eq!(a.oplus(b), b.oplus(a));
    prop_assert_eq!(a.oplus(&b.oplus(c)), a.oplus(b).oplus(c));
    prop_assert_eq!(a.mul(&b.oplus(c)), a.mul(b).oplus(&a.mul(c)));
    prop_assert_eq!(a.mul(&a.inv()), one.clone());
    prop_assert_eq!(a.mul(&one), a.clone());
    Ok(())
}

pub fn eval_point() -> Vec<BigRational> {
    vec![BigRational::new(2.into(), 3.into()), BigRational::new(5.into(), 2.into())]
}
