// SPDX-License-Identifier: Apache-2.0

use num_complex::Complex;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use super::ComplexMatrix;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Haar-random unitary of dimension 2 or 4, deterministic per seed.
///
/// Orthonormalizes the columns of a complex Ginibre matrix with modified
/// Gram–Schmidt. That is a QR factorization whose `R` has a positive real
/// diagonal, which is the phase normalization that makes `Q` Haar-distributed.
pub fn random_unitary<T: Real>(dim: usize, seed: u64) -> Result<ComplexMatrix<T>> {
    if dim != 2 && dim != 4 {
        return Err(Error::UnsupportedDimension(dim));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let half = T::lit(0.5).sqrt();
    // Resample on the (measure-zero) event of a rank-deficient draw.
    loop {
        let mut cols: Vec<Vec<Complex<T>>> = (0..dim)
            .map(|_| {
                (0..dim)
                    .map(|_| {
                        let re: f64 = StandardNormal.sample(&mut rng);
                        let im: f64 = StandardNormal.sample(&mut rng);
                        Complex::new(T::lit(re), T::lit(im)) * half
                    })
                    .collect()
            })
            .collect();
        if gram_schmidt(&mut cols) {
            return Ok(ComplexMatrix::from_fn(dim, dim, |r, c| cols[c][r]));
        }
    }
}

fn gram_schmidt<T: Real>(cols: &mut [Vec<Complex<T>>]) -> bool {
    for j in 0..cols.len() {
        for i in 0..j {
            let (done, rest) = cols.split_at_mut(j);
            let qi = &done[i];
            let proj: Complex<T> = qi
                .iter()
                .zip(rest[0].iter())
                .map(|(a, b)| a.conj() * b)
                .sum();
            for (v, q) in rest[0].iter_mut().zip(qi) {
                *v -= proj * q;
            }
        }
        let norm = cols[j]
            .iter()
            .map(|z| z.norm_sqr())
            .fold(T::zero(), |a, b| a + b)
            .sqrt();
        if norm <= T::epsilon() || norm.is_zero() {
            return false;
        }
        for v in cols[j].iter_mut() {
            *v /= norm;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unitary_by_construction() {
        for seed in 0..200 {
            for dim in [2, 4] {
                let u = random_unitary::<f64>(dim, seed).unwrap();
                assert!(u.unitarity_deviation() <= 1e-10, "seed {seed} dim {dim}");
            }
        }
    }

    #[test]
    fn deterministic_per_seed() {
        let a = random_unitary::<f64>(4, 42).unwrap();
        let b = random_unitary::<f64>(4, 42).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, random_unitary::<f64>(4, 43).unwrap());
    }

    #[test]
    fn unsupported_dim() {
        assert_eq!(
            random_unitary::<f64>(3, 0).unwrap_err(),
            Error::UnsupportedDimension(3)
        );
        assert!(random_unitary::<f64>(8, 0).is_err());
    }

    #[test]
    fn haar_first_moment() {
        // For Haar U(2), |U_00|^2 is uniform on [0, 1].
        let n = 10_000;
        let mean: f64 = (0..n)
            .map(|s| random_unitary::<f64>(2, s).unwrap()[(0, 0)].norm_sqr())
            .sum::<f64>()
            / n as f64;
        assert!((mean - 0.5).abs() < 0.02, "mean {mean}");
    }

    #[test]
    fn single_precision() {
        let u = random_unitary::<f32>(4, 7).unwrap();
        assert!(u.is_unitary());
    }
}
