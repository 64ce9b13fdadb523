//! Skew-symmetric exchange matrices and matrix mutation.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::Error;

/// An integer skew-symmetric matrix, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl SkewMatrix {
    pub fn zero(n: usize) -> Self {
        SkewMatrix {
            n,
            entries: vec![0; n * n],
        }
    }

    /// Builds a matrix from rows, rejecting anything that is not square and skew-symmetric.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self, Error> {
        let n = rows.len();
        let mut m = SkewMatrix::zero(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Shape(format!("row {i} has length {}, expected {n}", row.len())));
            }
            for (j, &v) in row.iter().enumerate() {
                m.entries[i * n + j] = v;
            }
        }
        m.check_skew()?;
        Ok(m)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    /// Sets `B_ij = v` and `B_ji = -v`.
    pub fn set_pair(&mut self, i: usize, j: usize, v: i64) {
        assert!(i != j || v == 0, "diagonal must stay zero");
        self.entries[i * self.n + j] = v;
        self.entries[j * self.n + i] = -v;
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.n.max(1)).take(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn check_skew(&self) -> Result<(), Error> {
        for i in 0..self.n {
            for j in 0..self.n {
                if self.get(i, j) != -self.get(j, i) {
                    return Err(Error::NotSkew { i, j });
                }
            }
        }
        Ok(())
    }

    pub fn neg(&self) -> Self {
        SkewMatrix {
            n: self.n,
            entries: self.entries.iter().map(|v| -v).collect(),
        }
    }

    /// Matrix mutation at `k`.
    pub fn mutate(&self, k: usize) -> Result<Self, Error> {
        let n = self.n;
        if k >= n {
            return Err(Error::IndexOutOfRange { index: k, size: n });
        }
        let mut out = self.clone();
        for i in 0..n {
            for j in 0..n {
                let v = if i == k || j == k {
                    -self.get(i, j)
                } else {
                    let bik = self.get(i, k);
                    let bkj = self.get(k, j);
                    // (|b_ik| b_kj + b_ik |b_kj|) / 2 is nonzero only when both have the same sign
                    let extra = if bik > 0 && bkj > 0 {
                        bik.checked_mul(bkj)
                    } else if bik < 0 && bkj < 0 {
                        bik.checked_mul(bkj).and_then(i64::checked_neg)
                    } else {
                        Some(0)
                    };
                    extra
                        .and_then(|e| self.get(i, j).checked_add(e))
                        .ok_or(Error::Overflow)?
                };
                out.entries[i * n + j] = v;
            }
        }
        debug_assert!(out.check_skew().is_ok());
        Ok(out)
    }

    /// Relabels vertices: the result `B'` satisfies `B'[p[i]][p[j]] = B[i][j]`.
    pub fn apply_vertex_map(&self, p: &[usize]) -> Result<Self, Error> {
        let n = self.n;
        if p.len() != n {
            return Err(Error::NotBijective);
        }
        let mut seen = vec![false; n];
        for &t in p {
            if t >= n || seen[t] {
                return Err(Error::NotBijective);
            }
            seen[t] = true;
        }
        let mut out = SkewMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.entries[p[i] * n + p[j]] = self.get(i, j);
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for SkewMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewMatrix{:?}", self.rows())
    }
}

pub fn mutate_matrix(b: &SkewMatrix, k: usize) -> Result<SkewMatrix, Error> {
    b.mutate(k)
}

pub fn apply_vertex_map(b: &SkewMatrix, p: &[usize]) -> Result<SkewMatrix, Error> {
    b.apply_vertex_map(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flip_rank_two() {
        let b = SkewMatrix::from_rows(&[vec![0, 1], vec![-1, 0]]).unwrap();
        assert_eq!(b.mutate(0).unwrap().rows(), vec![vec![0, -1], vec![1, 0]]);
    }

    #[test]
    fn path_of_three() {
        let b = SkewMatrix::from_rows(&[vec![0, 1, 0], vec![-1, 0, 1], vec![0, -1, 0]]).unwrap();
        let m = b.mutate(1).unwrap();
        assert_eq!(m.rows(), vec![vec![0, -1, 1], vec![1, 0, -1], vec![-1, 1, 0]]);
        assert_eq!(m.mutate(1).unwrap(), b);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(SkewMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).is_err());
        let b = SkewMatrix::zero(2);
        assert!(matches!(b.mutate(2), Err(Error::IndexOutOfRange { .. })));
        assert!(b.apply_vertex_map(&[0, 0]).is_err());
    }

    #[test]
    fn overflow_is_an_error() {
        let big = i64::MAX / 2;
        let b = SkewMatrix::from_rows(&[
            vec![0, big, 0],
            vec![-big, 0, big],
            vec![0, -big, 0],
        ])
        .unwrap();
        assert!(matches!(b.mutate(1), Err(Error::Overflow)));
    }
}
