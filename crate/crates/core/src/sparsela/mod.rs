//! Sparse matrix storage with simultaneous row and column access, norm
//! computations, and weighted discrete sampling.
//!
//! The solvers sample individual rows, columns and entries of one matrix, so
//! the matrix is kept in compressed row-major *and* column-major form at the
//! same time. Both forms always hold the same `(i, j, value)` triples.

mod market;
mod sampler;
mod svd;

pub use market::{read_matrix_market, write_matrix_market};
pub use sampler::DiscreteSampler;
pub use svd::singular_values;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A sparse matrix stored in compressed row-major and column-major form
/// simultaneously. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SparseMatrixDual<T> {
    nrows: usize,
    ncols: usize,
    // row-major (CSR)
    row_ptr: Vec<usize>,
    row_cols: Vec<usize>,
    row_vals: Vec<T>,
    // column-major (CSC)
    col_ptr: Vec<usize>,
    col_rows: Vec<usize>,
    col_vals: Vec<T>,
}

impl<T: Scalar> SparseMatrixDual<T> {
    /// Builds a matrix from `(row, col, value)` triplets. Duplicates are
    /// summed; entries that sum to exactly zero are dropped.
    pub fn from_triplets(
        nrows: usize,
        ncols: usize,
        triplets: &[(usize, usize, T)],
    ) -> Result<Self> {
        for &(i, j, _) in triplets {
            if i >= nrows || j >= ncols {
                return Err(Error::Structural(format!(
                    "entry ({i}, {j}) out of bounds for {nrows}x{ncols} matrix"
                )));
            }
        }
        let mut entries: Vec<(usize, usize, T)> =
            triplets.iter().map(|&(i, j, v)| (i, j, v)).collect();
        entries.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));

        // Sum duplicates, then drop exact zeros.
        let mut merged: Vec<(usize, usize, T)> = Vec::with_capacity(entries.len());
        for (i, j, v) in entries {
            match merged.last_mut() {
                Some(last) if last.0 == i && last.1 == j => last.2 += v,
                _ => merged.push((i, j, v)),
            }
        }
        merged.retain(|&(_, _, v)| v != T::zero());

        let nnz = merged.len();
        let mut row_ptr = vec![0usize; nrows + 1];
        let mut row_cols = Vec::with_capacity(nnz);
        let mut row_vals = Vec::with_capacity(nnz);
        for &(i, j, v) in &merged {
            row_ptr[i + 1] += 1;
            row_cols.push(j);
            row_vals.push(v);
        }
        for i in 0..nrows {
            row_ptr[i + 1] += row_ptr[i];
        }

        let mut col_ptr = vec![0usize; ncols + 1];
        for &(_, j, _) in &merged {
            col_ptr[j + 1] += 1;
        }
        for j in 0..ncols {
            col_ptr[j + 1] += col_ptr[j];
        }
        let mut next = col_ptr.clone();
        let mut col_rows = vec![0usize; nnz];
        let mut col_vals = vec![T::zero(); nnz];
        for &(i, j, v) in &merged {
            let slot = next[j];
            col_rows[slot] = i;
            col_vals[slot] = v;
            next[j] += 1;
        }

        Ok(Self {
            nrows,
            ncols,
            row_ptr,
            row_cols,
            row_vals,
            col_ptr,
            col_rows,
            col_vals,
        })
    }

    /// Dense constructor for small matrices, mostly used in tests and
    /// built-in instances. `rows` is a slice of equal-length rows.
    pub fn from_dense(rows: &[&[T]]) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut triplets = Vec::new();
        for (i, r) in rows.iter().enumerate() {
            if r.len() != ncols {
                return Err(Error::Structural("ragged dense rows".into()));
            }
            for (j, &v) in r.iter().enumerate() {
                if v != T::zero() {
                    triplets.push((i, j, v));
                }
            }
        }
        Self::from_triplets(nrows, ncols, &triplets)
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nnz(&self) -> usize {
        self.row_vals.len()
    }

    /// Column indices and values of row `i`.
    pub fn row(&self, i: usize) -> (&[usize], &[T]) {
        let span = self.row_ptr[i]..self.row_ptr[i + 1];
        (&self.row_cols[span.clone()], &self.row_vals[span])
    }

    /// Row indices and values of column `j`.
    pub fn col(&self, j: usize) -> (&[usize], &[T]) {
        let span = self.col_ptr[j]..self.col_ptr[j + 1];
        (&self.col_rows[span.clone()], &self.col_vals[span])
    }

    pub fn row_nnz(&self, i: usize) -> usize {
        self.row_ptr[i + 1] - self.row_ptr[i]
    }

    pub fn col_nnz(&self, j: usize) -> usize {
        self.col_ptr[j + 1] - self.col_ptr[j]
    }

    /// Entry of the `e`-th stored nonzero in row-major order, as `(i, j, value)`.
    pub fn entry(&self, e: usize) -> (usize, usize, T) {
        let i = match self.row_ptr.binary_search(&e) {
            // row_ptr may contain repeated values for empty rows; pick the
            // last row whose range starts at or before e.
            Ok(mut r) => {
                while r + 1 < self.row_ptr.len() && self.row_ptr[r + 1] == e {
                    r += 1;
                }
                r
            }
            Err(r) => r - 1,
        };
        (i, self.row_cols[e], self.row_vals[e])
    }

    /// All stored entries as `(row, col, value)` triplets in row-major order.
    pub fn triplets(&self) -> Vec<(usize, usize, T)> {
        let mut out = Vec::with_capacity(self.nnz());
        for i in 0..self.nrows {
            let (cols, vals) = self.row(i);
            for (&j, &v) in cols.iter().zip(vals) {
                out.push((i, j, v));
            }
        }
        out
    }

    /// `out = A x` (length `nrows`).
    pub fn mat_vec(&self, x: &[T], out: &mut [T]) {
        debug_assert_eq!(x.len(), self.ncols);
        debug_assert_eq!(out.len(), self.nrows);
        for i in 0..self.nrows {
            let (cols, vals) = self.row(i);
            let mut acc = T::zero();
            for (&j, &v) in cols.iter().zip(vals) {
                acc += v * x[j];
            }
            out[i] = acc;
        }
    }

    /// `out = Aᵀ y` (length `ncols`).
    pub fn mat_t_vec(&self, y: &[T], out: &mut [T]) {
        debug_assert_eq!(y.len(), self.nrows);
        debug_assert_eq!(out.len(), self.ncols);
        for j in 0..self.ncols {
            let (rows, vals) = self.col(j);
            let mut acc = T::zero();
            for (&i, &v) in rows.iter().zip(vals) {
                acc += v * y[i];
            }
            out[j] = acc;
        }
    }

    /// Internal consistency check: both forms hold the same triples, sorted,
    /// without duplicates or stored zeros.
    pub fn check_consistent(&self) -> Result<()> {
        if self.row_vals.len() != self.col_vals.len() {
            return Err(Error::Structural("row/col nnz mismatch".into()));
        }
        let mut from_cols = Vec::with_capacity(self.nnz());
        for j in 0..self.ncols {
            let (rows, vals) = self.col(j);
            let mut prev = None;
            for (&i, &v) in rows.iter().zip(vals) {
                if v == T::zero() {
                    return Err(Error::Structural("stored zero in col form".into()));
                }
                if prev.is_some() && prev >= Some(i) {
                    return Err(Error::Structural("col form not strictly sorted".into()));
                }
                prev = Some(i);
                from_cols.push((i, j, v));
            }
        }
        from_cols.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
        let from_rows = self.triplets();
        for w in from_rows.windows(2) {
            if (w[0].0, w[0].1) >= (w[1].0, w[1].1) {
                return Err(Error::Structural("row form not strictly sorted".into()));
            }
        }
        if from_rows.iter().any(|&(_, _, v)| v == T::zero()) {
            return Err(Error::Structural("stored zero in row form".into()));
        }
        if from_rows != from_cols {
            return Err(Error::Structural("row/col forms disagree".into()));
        }
        Ok(())
    }
}

/// Cached norm information for one matrix.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixNorms<T> {
    pub frobenius: T,
    /// Upper-leaning spectral norm estimate from power iteration.
    pub spectral: T,
    pub row_l2: Vec<T>,
    pub col_l2: Vec<T>,
    pub row_l1: Vec<T>,
    pub col_l1: Vec<T>,
    /// Smallest nonzero singular value, when requested and computable.
    pub sigma_min_plus: Option<T>,
}

/// Largest dense side admitted for the singular value decomposition behind
/// `sigma_min_plus`.
pub const SIGMA_MIN_SIZE_LIMIT: usize = 2000;

const POWER_ITERS: usize = 200;
const POWER_TOL: f64 = 1e-8;

/// Computes Frobenius, spectral (power-iteration estimate), per-row and
/// per-column norms, and optionally the smallest nonzero singular value via
/// a dense decomposition (desk scale only).
pub fn compute_norms<T: Scalar>(
    a: &SparseMatrixDual<T>,
    want_sigma_min_plus: bool,
) -> Result<MatrixNorms<T>> {
    let (m, n) = (a.nrows(), a.ncols());
    let mut row_l2 = vec![T::zero(); m];
    let mut row_l1 = vec![T::zero(); m];
    for i in 0..m {
        let (_, vals) = a.row(i);
        let mut s2 = T::zero();
        let mut s1 = T::zero();
        for &v in vals {
            s2 += v * v;
            s1 += v.abs();
        }
        row_l2[i] = s2.sqrt();
        row_l1[i] = s1;
    }
    let mut col_l2 = vec![T::zero(); n];
    let mut col_l1 = vec![T::zero(); n];
    for j in 0..n {
        let (_, vals) = a.col(j);
        let mut s2 = T::zero();
        let mut s1 = T::zero();
        for &v in vals {
            s2 += v * v;
            s1 += v.abs();
        }
        col_l2[j] = s2.sqrt();
        col_l1[j] = s1;
    }
    let frobenius = row_l2
        .iter()
        .map(|&r| r * r)
        .fold(T::zero(), |acc, v| acc + v)
        .sqrt();

    let spectral = power_iteration_spectral(a);

    let sigma_min_plus = if want_sigma_min_plus {
        if m.min(n) > SIGMA_MIN_SIZE_LIMIT {
            return Err(Error::UnsupportedSize(format!(
                "sigma_min_plus requested for min(m,n)={} > {}",
                m.min(n),
                SIGMA_MIN_SIZE_LIMIT
            )));
        }
        svd::sigma_min_plus(a)
    } else {
        None
    };

    Ok(MatrixNorms {
        frobenius,
        spectral,
        row_l2,
        col_l2,
        row_l1,
        col_l1,
        sigma_min_plus,
    })
}

/// Spectral norm estimate by power iteration on AᵀA.
fn power_iteration_spectral<T: Scalar>(a: &SparseMatrixDual<T>) -> T {
    let (m, n) = (a.nrows(), a.ncols());
    if a.nnz() == 0 || m == 0 || n == 0 {
        return T::zero();
    }
    // Deterministic pseudo-random start so the estimate is reproducible.
    let mut v: Vec<T> = (0..n)
        .map(|j| T::cst(((j * 2654435761 + 1013904223) % 1000) as f64 / 1000.0 + 0.5))
        .collect();
    let mut av = vec![T::zero(); m];
    let mut atav = vec![T::zero(); n];
    let tol = T::cst(POWER_TOL);
    let mut lambda = T::zero();
    for _ in 0..POWER_ITERS {
        a.mat_vec(&v, &mut av);
        a.mat_t_vec(&av, &mut atav);
        let norm = crate::scalar::norm2(&atav);
        if norm == T::zero() {
            return T::zero();
        }
        for (vi, &wi) in v.iter_mut().zip(&atav) {
            *vi = wi / norm;
        }
        let new_lambda = norm; // Rayleigh quotient of AᵀA for the normalized iterate
        if (new_lambda - lambda).abs() <= tol * new_lambda {
            lambda = new_lambda;
            break;
        }
        lambda = new_lambda;
    }
    lambda.sqrt()
}

/// Exact largest singular value via the dense Jacobi decomposition. Used for
/// oracle Lipschitz constants at desk scale where the power-iteration
/// estimate is not tight enough.
pub fn spectral_norm_exact<T: Scalar>(a: &SparseMatrixDual<T>) -> Option<T> {
    svd::singular_values(a).map(|sv| sv.first().copied().unwrap_or(T::zero()))
}
