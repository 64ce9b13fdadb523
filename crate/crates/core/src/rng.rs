//! Reproducible random evaluation points.

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Default seed used by tests and the CLI.
pub const DEFAULT_SEED: u64 = 20_100;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n` positive rationals with numerator and denominator in `1..=7`.
pub fn positive_point(rng: &mut impl Rng, n: usize) -> Vec<BigRational> {
    (0..n)
        .map(|_| BigRational::new(rng.gen_range(1..=7i64).into(), rng.gen_range(1..=7i64).into()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible() {
        let a = positive_point(&mut rng(3), 10);
        let b = positive_point(&mut rng(3), 10);
        assert_eq!(a, b);
        assert!(a.iter().all(|q| q > &BigRational::from_integer(0.into())));
    }
}
