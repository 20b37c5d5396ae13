//! Reproducible random rational test data.

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cumulant::{CumulantSpec, WeightMatrix};
use crate::scalar::rational;

/// Seed used by the verification suites unless another is given.
pub const DEFAULT_SEED: u64 = 20_240_917;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Numerator in `[-3, 3]`, denominator in `{1, 2, 3}`.
pub fn random_rational<R: Rng>(rng: &mut R) -> BigRational {
    rational(rng.gen_range(-3..=3), rng.gen_range(1..=3))
}

/// `κ_1 … κ_order` drawn independently; strict beyond `order`.
pub fn random_spec<R: Rng>(rng: &mut R, order: usize) -> CumulantSpec<BigRational> {
    let spec = CumulantSpec::strict((0..order).map(|_| random_rational(rng)).collect());
    let name = format!("random:{spec}");
    spec.named(name)
}

/// Like [`random_spec`] with every odd cumulant zero.
pub fn random_even_spec<R: Rng>(rng: &mut R, order: usize) -> CumulantSpec<BigRational> {
    let values = (1..=order)
        .map(|j| {
            if j % 2 == 1 {
                rational(0, 1)
            } else {
                random_rational(rng)
            }
        })
        .collect();
    let spec = CumulantSpec::strict(values);
    let name = format!("random-even:{spec}");
    spec.named(name)
}

/// Symmetric `k × k` matrix with entries from [`random_rational`].
pub fn random_weights<R: Rng>(rng: &mut R, k: usize) -> WeightMatrix<BigRational> {
    let mut entries = vec![vec![rational(0, 1); k]; k];
    for i in 0..k {
        for j in i..k {
            let x = random_rational(rng);
            entries[i][j] = x.clone();
            entries[j][i] = x;
        }
    }
    WeightMatrix::new(entries).expect("symmetric by construction")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_in_range() {
        let a: Vec<_> = (0..50)
            .map({
                let mut r = rng(7);
                move |_| random_rational(&mut r)
            })
            .collect();
        let mut r = rng(7);
        for x in &a {
            assert_eq!(*x, random_rational(&mut r));
            assert!(x.numer().magnitude() <= &3u32.into());
        }
        let spec = random_even_spec(&mut r, 6);
        assert!(spec.is_even_up_to(6).unwrap());
        assert!(spec.kappa(7).is_err());
        assert_eq!(random_weights(&mut r, 3).size(), 3);
    }
}
