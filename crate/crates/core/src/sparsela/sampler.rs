//! Weighted discrete sampling with constant expected draw time.
//!
//! Uses Walker's alias method (Vose construction). Zero-weight items are
//! excluded from the support and an index remap returns original indices.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Alias-table sampler over a weighted finite support.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DiscreteSampler<T> {
    /// Original indices of the (strictly positive weight) support items.
    support: Vec<usize>,
    /// Normalized probabilities aligned with `support`.
    probabilities: Vec<T>,
    /// Alias table: acceptance threshold per cell.
    prob: Vec<T>,
    /// Alias table: fallback item per cell (index into `support`).
    alias: Vec<usize>,
}

impl<T: Scalar> DiscreteSampler<T> {
    /// Builds a sampler with `P(draw = k) = weights[k] / sum(weights)`.
    /// Weights must be nonnegative with at least one strictly positive entry.
    pub fn from_weights(weights: &[T]) -> Result<Self> {
        if weights.iter().any(|w| *w < T::zero() || !w.is_finite()) {
            return Err(Error::InvalidDistribution(
                "weights must be finite and nonnegative".into(),
            ));
        }
        let total: T = weights.iter().copied().fold(T::zero(), |a, b| a + b);
        if total <= T::zero() {
            return Err(Error::InvalidDistribution(
                "all weights are zero".into(),
            ));
        }
        let mut support = Vec::new();
        let mut probabilities = Vec::new();
        for (k, &w) in weights.iter().enumerate() {
            if w > T::zero() {
                support.push(k);
                probabilities.push(w / total);
            }
        }

        let n = support.len();
        let n_t = T::from_usize(n).unwrap();
        // Vose's construction: scale to mean 1 and split into small/large.
        let mut scaled: Vec<T> = probabilities.iter().map(|&p| p * n_t).collect();
        let mut prob = vec![T::zero(); n];
        let mut alias = vec![0usize; n];
        let mut small: Vec<usize> = Vec::with_capacity(n);
        let mut large: Vec<usize> = Vec::with_capacity(n);
        for (c, &s) in scaled.iter().enumerate() {
            if s < T::one() {
                small.push(c);
            } else {
                large.push(c);
            }
        }
        while let (Some(&s), Some(&l)) = (small.last(), large.last()) {
            small.pop();
            prob[s] = scaled[s];
            alias[s] = l;
            scaled[l] = (scaled[l] + scaled[s]) - T::one();
            if scaled[l] < T::one() {
                large.pop();
                small.push(l);
            }
        }
        for &l in &large {
            prob[l] = T::one();
            alias[l] = l;
        }
        for &s in &small {
            // Residual of floating-point accounting; these cells are full.
            prob[s] = T::one();
            alias[s] = s;
        }

        Ok(Self {
            support,
            probabilities,
            prob,
            alias,
        })
    }

    /// Number of items with strictly positive probability.
    pub fn support_size(&self) -> usize {
        self.support.len()
    }

    /// Original indices of the support, aligned with [`Self::probabilities`].
    pub fn support(&self) -> &[usize] {
        &self.support
    }

    /// Normalized probabilities over the support.
    pub fn probabilities(&self) -> &[T] {
        &self.probabilities
    }

    /// Probability of drawing original index `k` (zero off support).
    pub fn probability_of(&self, k: usize) -> T {
        match self.support.binary_search(&k) {
            Ok(c) => self.probabilities[c],
            Err(_) => T::zero(),
        }
    }

    /// Draws one original index. Consumes exactly one cell draw and one unit
    /// uniform from `rng`.
    pub fn draw<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        let cell = rng.gen_range(0..self.prob.len());
        let u = T::unit_uniform(rng);
        let c = if u < self.prob[cell] {
            cell
        } else {
            self.alias[cell]
        };
        self.support[c]
    }

    /// Exact per-item probability implied by the alias table, by enumerating
    /// every cell. Intended for small supports in tests and verification.
    pub fn table_probabilities(&self) -> Vec<T> {
        let n = self.prob.len();
        let n_t = T::from_usize(n).unwrap();
        let mut acc = vec![T::zero(); n];
        for c in 0..n {
            acc[c] += self.prob[c] / n_t;
            acc[self.alias[c]] += (T::one() - self.prob[c]) / n_t;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn normalization() {
        let s = DiscreteSampler::<f64>::from_weights(&[1.0, 3.0]).unwrap();
        assert_eq!(s.probabilities(), &[0.25, 0.75]);
        assert_eq!(s.support_size(), 2);
    }

    #[test]
    fn uniform_weights() {
        let s = DiscreteSampler::<f64>::from_weights(&[1.0; 4]).unwrap();
        for &p in s.probabilities() {
            assert!((p - 0.25).abs() < 1e-15);
        }
    }

    #[test]
    fn row_norm_weights_from_2x2() {
        // rows of [[1,2],[3,4]]: squared norms (5, 25), ||A||_F^2 = 30
        let s = DiscreteSampler::<f64>::from_weights(&[5.0, 25.0]).unwrap();
        assert!((s.probabilities()[0] - 1.0 / 6.0).abs() < 1e-15);
        assert!((s.probabilities()[1] - 5.0 / 6.0).abs() < 1e-15);
    }

    #[test]
    fn all_zero_weights_rejected() {
        let err = DiscreteSampler::<f64>::from_weights(&[0.0, 0.0]).unwrap_err();
        assert!(matches!(err, Error::InvalidDistribution(_)));
    }

    #[test]
    fn zero_weights_remapped() {
        let s = DiscreteSampler::<f64>::from_weights(&[0.0, 2.0, 0.0, 6.0]).unwrap();
        assert_eq!(s.support(), &[1, 3]);
        assert!((s.probability_of(1) - 0.25).abs() < 1e-15);
        assert!((s.probability_of(3) - 0.75).abs() < 1e-15);
        assert_eq!(s.probability_of(0), 0.0);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            let k = s.draw(&mut rng);
            assert!(k == 1 || k == 3);
        }
    }

    #[test]
    fn singleton_always_drawn() {
        let s = DiscreteSampler::<f64>::from_weights(&[2.0]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..50 {
            assert_eq!(s.draw(&mut rng), 0);
        }
    }

    #[test]
    fn table_enumeration_reproduces_probabilities() {
        // supports of size <= 12, exact to 1e-12
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for trial in 0..200 {
            let n = rng.gen_range(1..=12usize);
            let weights: Vec<f64> = (0..n).map(|_| rng.gen::<f64>() * 10.0).collect();
            if weights.iter().all(|&w| w == 0.0) {
                continue;
            }
            let s = DiscreteSampler::from_weights(&weights).unwrap();
            let table = s.table_probabilities();
            for (c, &p) in s.probabilities().iter().enumerate() {
                assert!(
                    (table[c] - p).abs() <= 1e-12,
                    "trial {trial}: cell {c} table {} vs exact {p}",
                    table[c]
                );
            }
        }
    }

    #[test]
    fn deterministic_under_seed() {
        let s = DiscreteSampler::<f64>::from_weights(&[1.0, 2.0, 3.0]).unwrap();
        let a: Vec<usize> = {
            let mut rng = ChaCha8Rng::seed_from_u64(99);
            (0..64).map(|_| s.draw(&mut rng)).collect()
        };
        let b: Vec<usize> = {
            let mut rng = ChaCha8Rng::seed_from_u64(99);
            (0..64).map(|_| s.draw(&mut rng)).collect()
        };
        assert_eq!(a, b);
    }

    #[test]
    fn empirical_frequencies_match() {
        // (0.25, 0.75) over 10^6 draws within 3 sigma of the binomial
        let s = DiscreteSampler::<f64>::from_weights(&[1.0, 3.0]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(12345);
        let n = 1_000_000usize;
        let mut count1 = 0usize;
        for _ in 0..n {
            if s.draw(&mut rng) == 1 {
                count1 += 1;
            }
        }
        let p = 0.75;
        let sigma = (p * (1.0 - p) * n as f64).sqrt();
        let dev = (count1 as f64 - p * n as f64).abs();
        assert!(dev <= 3.0 * sigma, "dev {dev} > 3 sigma {sigma}");
    }
}
