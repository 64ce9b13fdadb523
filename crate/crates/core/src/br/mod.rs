//! Type B_r data: the quiver Q_ℓ(B_r), its mutation schedule, index sets,
//! labelings and the T/Y relation checks.

mod labels;
mod systems;
mod walk;

pub use labels::{
    g_exponent, g_inverse, g_map, g_prime_inverse, g_prime_map, t_support, y_support, Parity, SystemIndex,
};
pub use systems::{
    check_t_periodicity, check_t_relations, check_y_periodicity, check_y_relations, t_values, y_values, TValues,
    YValues,
};
pub use walk::{schedule_step, Direction, Walk};

use serde::{Deserialize, Serialize};

use crate::matrix::SkewMatrix;
use crate::quiver::{Color, Quiver, Sign, Vertex, VertexId};
use crate::Error;

/// Rank and level of a B_r system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BrConfig {
    pub r: usize,
    pub level: usize,
}

impl BrConfig {
    pub fn new(r: usize, level: usize) -> Result<Self, Error> {
        if r < 2 || level < 2 {
            return Err(Error::Config(format!("need r >= 2 and level >= 2, got r={r}, level={level}")));
        }
        Ok(BrConfig { r, level })
    }

    pub fn h(&self) -> i64 {
        2 * self.r as i64
    }

    pub fn h_dual(&self) -> i64 {
        2 * self.r as i64 - 1
    }

    pub fn t(&self, a: usize) -> usize {
        if a == self.r {
            2
        } else {
            1
        }
    }

    /// `h∨ + ℓ` in units of u.
    pub fn half_period(&self) -> i64 {
        self.h_dual() + self.level as i64
    }

    /// Full period `2(h∨ + ℓ)` in units of u.
    pub fn period(&self) -> i64 {
        2 * self.half_period()
    }

    pub fn column_height(&self, col: usize) -> usize {
        if col == self.r {
            2 * self.level - 1
        } else {
            self.level - 1
        }
    }

    pub fn n_vertices(&self) -> usize {
        (2 * self.r - 2) * (self.level - 1) + 2 * self.level - 1
    }

    /// Vertices `(col, row)` in column-major order; this fixes matrix indexing.
    pub fn vertices(&self) -> Vec<(usize, usize)> {
        (1..2 * self.r)
            .flat_map(|c| (1..=self.column_height(c)).map(move |k| (c, k)))
            .collect()
    }

    pub fn index(&self, col: usize, row: usize) -> Option<usize> {
        if col == 0 || col >= 2 * self.r || row == 0 || row > self.column_height(col) {
            return None;
        }
        let before: usize = (1..col).map(|c| self.column_height(c)).sum();
        Some(before + row - 1)
    }

    pub fn vertex(&self, idx: usize) -> (usize, usize) {
        self.vertices()[idx]
    }

    pub fn label(&self, idx: usize) -> String {
        let (c, k) = self.vertex(idx);
        format!("{c},{k}")
    }

    pub fn labels(&self) -> Vec<String> {
        self.vertices().iter().map(|(c, k)| format!("{c},{k}")).collect()
    }

    pub fn color(&self, col: usize) -> Color {
        if col == self.r {
            Color::Filled
        } else {
            Color::Open
        }
    }

    pub fn sign(&self, col: usize, row: usize) -> Sign {
        let r = self.r;
        let plus = if col == r {
            row % 2 == 1
        } else if col < r {
            (r - col + row) % 2 == 1
        } else {
            (col - r + row) % 2 == 0
        };
        if plus {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn sign_of(&self, idx: usize) -> Sign {
        let (c, k) = self.vertex(idx);
        self.sign(c, k)
    }

    pub fn is_filled(&self, idx: usize) -> bool {
        self.vertex(idx).0 == self.r
    }

    /// Left-right reflection `(i,i') -> (2r-i, i')` as an index permutation.
    pub fn reflection(&self) -> Vec<usize> {
        self.vertices()
            .iter()
            .map(|&(c, k)| self.index(2 * self.r - c, k).expect("reflected vertex"))
            .collect()
    }

    /// 180° rotation of the quiver picture.
    pub fn rotation(&self) -> Vec<usize> {
        self.vertices()
            .iter()
            .map(|&(c, k)| {
                if c == self.r {
                    self.index(c, 2 * self.level - k)
                } else {
                    self.index(2 * self.r - c, self.level - k)
                }
                .expect("rotated vertex")
            })
            .collect()
    }

    /// Builds Q_ℓ(B_r) with decorations.
    pub fn build_quiver(&self) -> Quiver {
        let r = self.r;
        let l = self.level;
        let vs = self
            .vertices()
            .into_iter()
            .map(|(c, k)| Vertex {
                id: VertexId::Grid { col: c, row: k },
                color: Some(self.color(c)),
                sign: Some(self.sign(c, k)),
            })
            .collect();
        let mut q = Quiver::new(vs).expect("distinct vertices");
        let g = |c, k| VertexId::Grid { col: c, row: k };
        let mut arrow = |a: (usize, usize), b: (usize, usize)| {
            q.add_arrows(g(a.0, a.1), g(b.0, b.1), 1).expect("valid arrow");
        };
        for c in (1..2 * r).filter(|&c| c != r) {
            for k in 1..l {
                // horizontal: minus -> plus, same side of the middle column
                let c2 = c + 1;
                if c2 != r && c2 < 2 * r && (c2 < r) == (c < r) {
                    if self.sign(c, k) == Sign::Minus {
                        arrow((c, k), (c2, k));
                    } else {
                        arrow((c2, k), (c, k));
                    }
                }
                // vertical: plus -> minus
                if k + 1 < l {
                    if self.sign(c, k) == Sign::Plus {
                        arrow((c, k), (c, k + 1));
                    } else {
                        arrow((c, k + 1), (c, k));
                    }
                }
            }
        }
        for k in 1..2 * l - 1 {
            if k % 2 == 1 {
                arrow((r, k), (r, k + 1));
            } else {
                arrow((r, k + 1), (r, k));
            }
        }
        for k in 1..l {
            for c in [r - 1, r + 1] {
                arrow((r, 2 * k), (c, k));
                if self.sign(c, k) == Sign::Minus {
                    arrow((c, k), (r, 2 * k - 1));
                    arrow((c, k), (r, 2 * k + 1));
                }
            }
        }
        q
    }

    pub fn matrix(&self) -> SkewMatrix {
        self.build_quiver().to_matrix().expect("small multiplicities")
    }

    /// Which vertices are mutated forward at time `u2 = 2u`.
    pub fn forward_batch(&self, u2: i64) -> Vec<usize> {
        (0..self.n_vertices())
            .filter(|&i| self.parity(i, u2) == Parity::Plus)
            .collect()
    }

    /// Which vertices are mutated going backward from time `u2`.
    pub fn backward_batch(&self, u2: i64) -> Vec<usize> {
        (0..self.n_vertices())
            .filter(|&i| self.parity(i, u2) == Parity::Minus)
            .collect()
    }

    /// The parity p± of a vertex at time `u2 = 2u`.
    pub fn parity(&self, idx: usize, u2: i64) -> Parity {
        let (c, k) = self.vertex(idx);
        let sign = self.sign(c, k);
        let filled = c == self.r;
        let phase = u2.rem_euclid(4);
        // (i,u):p+ iff (i,u+1/2):p-
        let plus_at = |ph: i64| match (ph, filled, sign) {
            (0, _, Sign::Plus) => true,
            (1 | 3, true, Sign::Minus) => true,
            (2, true, Sign::Plus) => true,
            (2, false, Sign::Minus) => true,
            _ => false,
        };
        if plus_at(phase) {
            Parity::Plus
        } else if plus_at((phase + 3) % 4) {
            Parity::Minus
        } else {
            Parity::None
        }
    }

    /// The exchange matrix the schedule must hold at time `u2`.
    pub fn expected_matrix(&self, u2: i64) -> SkewMatrix {
        let b = self.matrix();
        let rb = b.apply_vertex_map(&self.reflection()).expect("permutation");
        match u2.rem_euclid(4) {
            0 => b,
            1 => b.neg(),
            2 => rb,
            _ => rb.neg(),
        }
    }

    /// All p+ points `(vertex, u2)` with `from <= u2 < to`.
    pub fn plus_points(&self, from: i64, to: i64) -> Vec<(usize, i64)> {
        (from..to)
            .flat_map(|u2| self.forward_batch(u2).into_iter().map(move |i| (i, u2)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        for (r, l) in [(2, 2), (3, 2), (2, 3), (4, 5)] {
            let c = BrConfig::new(r, l).unwrap();
            assert_eq!(c.vertices().len(), c.n_vertices());
            for (i, &(a, b)) in c.vertices().iter().enumerate() {
                assert_eq!(c.index(a, b), Some(i));
            }
        }
        assert_eq!(BrConfig::new(2, 2).unwrap().n_vertices(), 5);
        assert_eq!(BrConfig::new(3, 2).unwrap().n_vertices(), 7);
        assert!(BrConfig::new(1, 2).is_err());
        assert!(BrConfig::new(2, 1).is_err());
    }

    #[test]
    fn parity_shift_rule() {
        let c = BrConfig::new(3, 3).unwrap();
        for i in 0..c.n_vertices() {
            for u2 in -8..8 {
                assert_eq!(c.parity(i, u2) == Parity::Plus, c.parity(i, u2 + 1) == Parity::Minus);
            }
        }
    }

    #[test]
    fn open_plus_vertex_parities() {
        let c = BrConfig::new(3, 2).unwrap();
        let i = (0..c.n_vertices())
            .find(|&i| !c.is_filled(i) && c.sign_of(i) == Sign::Plus)
            .unwrap();
        assert_eq!(c.parity(i, 0), Parity::Plus);
        assert_eq!(c.parity(i, 2), Parity::None);
        assert_eq!(c.parity(i, 3), Parity::None);
    }
}
