//! Dense singular values via one-sided Jacobi orthogonalization.
//!
//! Only singular values are needed (for the smallest nonzero singular value
//! and for exact spectral norms at desk scale), so the rotations are applied
//! to a dense copy of the matrix columns without accumulating U or V.

use crate::scalar::Scalar;
use crate::sparsela::SparseMatrixDual;

const MAX_SWEEPS: usize = 60;

/// All singular values of `a`, sorted in decreasing order. Returns `None`
/// for an empty matrix dimension.
pub fn singular_values<T: Scalar>(a: &SparseMatrixDual<T>) -> Option<Vec<T>> {
    let (m, n) = (a.nrows(), a.ncols());
    if m == 0 || n == 0 {
        return None;
    }
    // Work on the transpose when that gives fewer columns.
    let transpose = n > m;
    let (rows, cols) = if transpose { (n, m) } else { (m, n) };
    let mut w = vec![T::zero(); rows * cols];
    for (i, j, v) in a.triplets() {
        let (r, c) = if transpose { (j, i) } else { (i, j) };
        w[c * rows + r] = v;
    }
    jacobi_singular_values(&mut w, rows, cols)
}

/// Smallest nonzero singular value, filtering at `1e-10 * sigma_max`.
pub fn sigma_min_plus<T: Scalar>(a: &SparseMatrixDual<T>) -> Option<T> {
    let sv = singular_values(a)?;
    let sigma_max = *sv.first()?;
    if sigma_max == T::zero() {
        return None;
    }
    let threshold = T::cst(1e-10) * sigma_max;
    sv.iter().rev().find(|&&s| s > threshold).copied()
}

/// One-sided Jacobi on column-major `w` (`rows x cols`): rotates column pairs
/// until all are mutually orthogonal; the singular values are the resulting
/// column norms.
fn jacobi_singular_values<T: Scalar>(w: &mut [T], rows: usize, cols: usize) -> Option<Vec<T>> {
    let eps = T::epsilon() * T::cst(16.0);
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..cols {
            for q in (p + 1)..cols {
                let (mut app, mut aqq, mut apq) = (T::zero(), T::zero(), T::zero());
                for r in 0..rows {
                    let x = w[p * rows + r];
                    let y = w[q * rows + r];
                    app += x * x;
                    aqq += y * y;
                    apq += x * y;
                }
                if apq.abs() <= eps * (app * aqq).sqrt() || apq == T::zero() {
                    continue;
                }
                rotated = true;
                // Classic Jacobi rotation angle for the 2x2 Gram block.
                let tau = (aqq - app) / (T::cst(2.0) * apq);
                let t = if tau >= T::zero() {
                    T::one() / (tau + (T::one() + tau * tau).sqrt())
                } else {
                    -T::one() / (-tau + (T::one() + tau * tau).sqrt())
                };
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = c * t;
                for r in 0..rows {
                    let x = w[p * rows + r];
                    let y = w[q * rows + r];
                    w[p * rows + r] = c * x - s * y;
                    w[q * rows + r] = s * x + c * y;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let mut sv: Vec<T> = (0..cols)
        .map(|p| {
            (0..rows)
                .map(|r| w[p * rows + r] * w[p * rows + r])
                .fold(T::zero(), |a, b| a + b)
                .sqrt()
        })
        .collect();
    sv.sort_by(|a, b| b.partial_cmp(a).unwrap());
    Some(sv)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_singular_values() {
        let a = SparseMatrixDual::<f64>::from_dense(&[&[3.0, 0.0], &[0.0, -4.0]]).unwrap();
        let sv = singular_values(&a).unwrap();
        assert!((sv[0] - 4.0).abs() < 1e-12);
        assert!((sv[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn known_2x2() {
        // A = [[1,2],[3,4]]: singular values sqrt((15 ± sqrt(221))/... ) —
        // use the trace/determinant identities instead of a literal:
        // s1^2 + s2^2 = ||A||_F^2 = 30, s1*s2 = |det| = 2.
        let a = SparseMatrixDual::<f64>::from_dense(&[&[1.0, 2.0], &[3.0, 4.0]]).unwrap();
        let sv = singular_values(&a).unwrap();
        assert!((sv[0] * sv[0] + sv[1] * sv[1] - 30.0).abs() < 1e-10);
        assert!((sv[0] * sv[1] - 2.0).abs() < 1e-10);
    }

    #[test]
    fn rank_deficient_filtering() {
        // rank-1: second row is a multiple of the first
        let a = SparseMatrixDual::<f64>::from_dense(&[&[1.0, 2.0], &[2.0, 4.0]]).unwrap();
        let smp = sigma_min_plus(&a).unwrap();
        let sv = singular_values(&a).unwrap();
        assert!((smp - sv[0]).abs() < 1e-10, "only one nonzero singular value");
    }

    #[test]
    fn wide_matrix_transposes() {
        let a = SparseMatrixDual::<f64>::from_dense(&[&[1.0, 0.0, 0.0, 2.0]]).unwrap();
        let sv = singular_values(&a).unwrap();
        assert!((sv[0] - 5.0f64.sqrt()).abs() < 1e-12);
    }
}
