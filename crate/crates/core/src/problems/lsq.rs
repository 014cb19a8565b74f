//! Minimum-norm least-squares corrections via CGLS.
//!
//! Solves `min ‖d‖ s.t. M d = r` for `M = A` or `M = Aᵀ` without forming
//! normal equations explicitly. Starting from zero keeps the iterates in
//! `range(Mᵀ)`, so the limit is the minimum-norm solution. An inconsistent
//! system is reported through the final residual.

use crate::error::{Error, Result};
use crate::scalar::{norm2, Scalar};
use crate::sparsela::SparseMatrixDual;

use super::{INFEASIBLE_TOL, LSQ_TOL};

/// Norm of the minimum-norm correction, or [`Error::Infeasible`] when the
/// system has no solution.
pub fn min_norm_solution<T: Scalar>(
    a: &SparseMatrixDual<T>,
    r: &[T],
    transpose: bool,
) -> Result<T> {
    Ok(norm2(&min_norm_correction(a, r, transpose)?))
}

/// The minimum-norm correction itself.
pub fn min_norm_correction<T: Scalar>(
    a: &SparseMatrixDual<T>,
    r: &[T],
    transpose: bool,
) -> Result<Vec<T>> {
    // M is rows_m x cols_m
    let (rows_m, cols_m) = if transpose {
        (a.ncols(), a.nrows())
    } else {
        (a.nrows(), a.ncols())
    };
    debug_assert_eq!(r.len(), rows_m);
    let mv = |v: &[T], out: &mut [T]| {
        if transpose {
            a.mat_t_vec(v, out)
        } else {
            a.mat_vec(v, out)
        }
    };
    let mtv = |v: &[T], out: &mut [T]| {
        if transpose {
            a.mat_vec(v, out)
        } else {
            a.mat_t_vec(v, out)
        }
    };

    let r_norm = norm2(r);
    if r_norm == T::zero() {
        return Ok(vec![T::zero(); cols_m]);
    }

    // CGLS on min ‖M d − r‖.
    let mut d = vec![T::zero(); cols_m];
    let mut s = r.to_vec(); // s = r − M d
    let mut t = vec![T::zero(); cols_m];
    mtv(&s, &mut t);
    let mut p = t.clone();
    let mut gamma = crate::scalar::dot(&t, &t);
    let t0_norm = gamma.sqrt();
    let tol = T::cst(LSQ_TOL);
    let mut q = vec![T::zero(); rows_m];

    let max_iters = 20 * (rows_m + cols_m) + 100;
    if t0_norm > T::zero() {
        for _ in 0..max_iters {
            mv(&p, &mut q);
            let qq = crate::scalar::dot(&q, &q);
            if qq == T::zero() {
                break;
            }
            let alpha = gamma / qq;
            for (di, &pi) in d.iter_mut().zip(&p) {
                *di += alpha * pi;
            }
            for (si, &qi) in s.iter_mut().zip(&q) {
                *si -= alpha * qi;
            }
            mtv(&s, &mut t);
            let gamma_new = crate::scalar::dot(&t, &t);
            if gamma_new.sqrt() <= tol * t0_norm {
                break;
            }
            let beta = gamma_new / gamma;
            for (pi, &ti) in p.iter_mut().zip(&t) {
                *pi = ti + beta * *pi;
            }
            gamma = gamma_new;
        }
    }

    // Residual after the least-squares solve decides feasibility.
    let residual = norm2(&s) / r_norm;
    if residual > T::cst(INFEASIBLE_TOL) {
        return Err(Error::Infeasible {
            residual: residual.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_system() {
        let a = SparseMatrixDual::<f64>::from_dense(&[&[1.0, 0.0], &[0.0, 1.0]]).unwrap();
        let d = min_norm_correction(&a, &[3.0, 4.0], false).unwrap();
        assert!((d[0] - 3.0).abs() < 1e-10);
        assert!((d[1] - 4.0).abs() < 1e-10);
    }

    #[test]
    fn min_norm_on_underdetermined() {
        // one equation x1 + x2 = 2: min-norm solution (1, 1)
        let a = SparseMatrixDual::<f64>::from_dense(&[&[1.0, 1.0]]).unwrap();
        let d = min_norm_correction(&a, &[2.0], false).unwrap();
        assert!((d[0] - 1.0).abs() < 1e-10);
        assert!((d[1] - 1.0).abs() < 1e-10);
    }

    #[test]
    fn inconsistent_detected() {
        // rows demand x = 1 and x = 2 simultaneously
        let a = SparseMatrixDual::<f64>::from_dense(&[&[1.0], &[1.0]]).unwrap();
        let err = min_norm_correction(&a, &[1.0, 2.0], false).unwrap_err();
        assert!(matches!(err, Error::Infeasible { .. }));
    }

    #[test]
    fn transpose_route() {
        let a = SparseMatrixDual::<f64>::from_dense(&[&[2.0, 0.0]]).unwrap();
        // Aᵀ y = (2y, 0): solvable for rhs (4, 0) with y = 2
        let d = min_norm_correction(&a, &[4.0, 0.0], true).unwrap();
        assert!((d[0] - 2.0).abs() < 1e-10);
    }
}
