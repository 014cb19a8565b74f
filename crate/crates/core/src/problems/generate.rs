//! Instance generators with deterministic seeds, plus the built-in
//! inequality-form counterexample instance.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::sparsela::SparseMatrixDual;

use super::{BilinearProblem, Iterate, StandardLpProblem};

/// Generates an m×n bilinear instance of rank at most `rank` and expected
/// density `density`, with a nonempty optimal set by construction:
/// `A = UVᵀ` for sparse factors, `b = Ax̂`, `c = −Aᵀŷ` for sampled `(x̂, ŷ)`.
pub fn generate_bilinear<T: Scalar>(
    m: usize,
    n: usize,
    rank: usize,
    density: f64,
    seed: u64,
) -> Result<BilinearProblem<T>> {
    if m == 0 || n == 0 || rank == 0 || rank > m.min(n) {
        return Err(Error::InvalidArgument(format!(
            "rank {rank} must satisfy 1 <= rank <= min({m}, {n})"
        )));
    }
    if !(0.0 < density && density <= 1.0) {
        return Err(Error::InvalidArgument(format!(
            "density {density} must lie in (0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // Factor density q chosen so the product density is `density` in
    // expectation: P(entry nonzero) = 1 − (1 − q²)^rank.
    let q = (1.0 - (1.0 - density).powf(1.0 / rank as f64)).sqrt();

    let a = (0..50)
        .find_map(|_| {
            let u = sparse_factor::<T>(m, rank, q, &mut rng);
            let v = sparse_factor::<T>(n, rank, q, &mut rng);
            let mut triplets = Vec::new();
            for i in 0..m {
                for j in 0..n {
                    let mut acc = T::zero();
                    for k in 0..rank {
                        acc += u[i * rank + k] * v[j * rank + k];
                    }
                    if acc != T::zero() {
                        triplets.push((i, j, acc));
                    }
                }
            }
            if triplets.is_empty() {
                None
            } else {
                SparseMatrixDual::from_triplets(m, n, &triplets).ok()
            }
        })
        .ok_or_else(|| Error::Generation("factor product stayed empty".into()))?;

    let x_hat: Vec<T> = (0..n).map(|_| T::uniform_in(&mut rng, -T::one(), T::one())).collect();
    let y_hat: Vec<T> = (0..m).map(|_| T::uniform_in(&mut rng, -T::one(), T::one())).collect();
    let mut b = vec![T::zero(); m];
    a.mat_vec(&x_hat, &mut b);
    let mut c = vec![T::zero(); n];
    a.mat_t_vec(&y_hat, &mut c);
    for ci in c.iter_mut() {
        *ci = -*ci;
    }

    let mut problem = BilinearProblem::new(a, c, b)?;
    problem.known_saddle = Some(Iterate::from_parts(&x_hat, &y_hat));
    Ok(problem)
}

fn sparse_factor<T: Scalar>(rows: usize, rank: usize, q: f64, rng: &mut ChaCha8Rng) -> Vec<T> {
    let mut f = vec![T::zero(); rows * rank];
    for v in f.iter_mut() {
        // Consume the value draw even for masked entries so the instance is
        // a deterministic function of the seed alone.
        let value = T::uniform_in(rng, -T::one(), T::one());
        if rng.gen::<f64>() < q {
            *v = value;
        }
    }
    f
}

/// Maximum basis resampling attempts before giving up.
const LP_RETRIES: usize = 20;

/// Generates a standard-form LP with a certified unique primal-dual optimum:
/// an invertible basis block, strictly positive basic primal values, and
/// strictly positive reduced costs off the basis.
pub fn generate_lp_known_solution<T: Scalar>(
    m: usize,
    n: usize,
    seed: u64,
) -> Result<StandardLpProblem<T>> {
    if m == 0 || n <= m {
        return Err(Error::InvalidArgument(format!(
            "need n > m >= 1, got m={m}, n={n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..LP_RETRIES {
        let dense: Vec<T> = (0..m * n)
            .map(|_| T::uniform_in(&mut rng, -T::one(), T::one()))
            .collect();
        // Basis = first m columns.
        let mut basis = vec![T::zero(); m * m];
        for i in 0..m {
            for j in 0..m {
                basis[i * m + j] = dense[i * n + j];
            }
        }
        if !is_invertible(&mut basis, m) {
            continue;
        }

        let mut triplets = Vec::with_capacity(m * n);
        for i in 0..m {
            for j in 0..n {
                let v = dense[i * n + j];
                if v != T::zero() {
                    triplets.push((i, j, v));
                }
            }
        }
        let a = SparseMatrixDual::from_triplets(m, n, &triplets)?;

        let mut x_star = vec![T::zero(); n];
        for xj in x_star.iter_mut().take(m) {
            *xj = T::uniform_in(&mut rng, T::one(), T::cst(2.0));
        }
        let y_star: Vec<T> = (0..m)
            .map(|_| T::uniform_in(&mut rng, -T::one(), T::one()))
            .collect();

        let mut b = vec![T::zero(); m];
        a.mat_vec(&x_star, &mut b);
        // c = Aᵀ y* everywhere, plus a strictly positive slack off the basis.
        let mut c = vec![T::zero(); n];
        a.mat_t_vec(&y_star, &mut c);
        for cj in c.iter_mut().skip(m) {
            *cj += T::uniform_in(&mut rng, T::cst(0.1), T::one());
        }

        let mut problem = StandardLpProblem::new(a, c, b)?;
        problem.known_optimum = Some(Iterate::from_parts(&x_star, &y_star));
        return Ok(problem);
    }
    Err(Error::Generation(format!(
        "no invertible basis block after {LP_RETRIES} attempts"
    )))
}

/// Gaussian elimination with partial pivoting; the matrix is invertible when
/// every pivot clears a relative threshold.
fn is_invertible<T: Scalar>(a: &mut [T], m: usize) -> bool {
    let scale = a.iter().fold(T::zero(), |acc, &v| acc.max(v.abs()));
    if scale == T::zero() {
        return false;
    }
    let tol = T::cst(1e-6) * scale;
    for k in 0..m {
        let (pivot_row, pivot) = (k..m)
            .map(|i| (i, a[i * m + k].abs()))
            .max_by(|x, y| x.1.partial_cmp(&y.1).unwrap())
            .unwrap();
        if pivot < tol {
            return false;
        }
        if pivot_row != k {
            for j in 0..m {
                a.swap(k * m + j, pivot_row * m + j);
            }
        }
        for i in (k + 1)..m {
            let factor = a[i * m + k] / a[k * m + k];
            for j in k..m {
                let upper = a[k * m + j];
                a[i * m + j] = a[i * m + j] - factor * upper;
            }
        }
    }
    true
}

/// The built-in inequality-form instance `min 1ᵀx s.t. x₂ ≤ 1, x ≥ 0`
/// recast in saddle form with `A = (0 1)`, `b = 1`, `c = (1, 1)` and the
/// dual constrained to `y ≥ 0`. Its unique optimum is `((0, 0), 0)`, and the
/// ratio of subdifferential distance to optimal-set distance decays along
/// the ray `z = (t, 0, 0)` — the witness that LP lacks a global sharpness
/// constant.
pub fn counterexample_lp<T: Scalar>() -> StandardLpProblem<T> {
    let a = SparseMatrixDual::from_triplets(1, 2, &[(0, 1, T::one())]).expect("static instance");
    let mut problem =
        StandardLpProblem::new(a, vec![T::one(), T::one()], vec![T::one()]).expect("static");
    problem.known_optimum = Some(Iterate::from_parts(
        &[T::zero(), T::zero()],
        &[T::zero()],
    ));
    problem.dual_nonneg = true;
    problem
}
