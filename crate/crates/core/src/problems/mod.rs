//! Saddle-point problem definitions: operator `F`, prox of `g`, the two
//! concrete problem families (unconstrained bilinear, standard-form LP),
//! instance generators, and distance to the optimal set where available.
//!
//! Both families run over the Lagrangian `L(x, y) = yᵀAx + cᵀx − bᵀy`. The
//! bilinear family keeps the linear terms inside the operator
//! (`F(z) = (Aᵀy + c, b − Ax)`) with `g ≡ 0`; the LP family keeps them in
//! `g` (`g₁(x) = cᵀx + ι_{x≥0}`, `g₂(y) = bᵀy`) so `F(z) = (Aᵀy, −Ax)`.

mod generate;
mod io;
mod lsq;

pub use generate::{counterexample_lp, generate_bilinear, generate_lp_known_solution};
pub use io::{load_problem, save_problem, MatrixSource, ProblemFile};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{dist2, norm2, Scalar};
use crate::sparsela::{compute_norms, MatrixNorms, SparseMatrixDual};

/// Side limit below which problem constructors compute `sigma_min_plus`
/// automatically when caching norms.
pub const AUTO_SIGMA_LIMIT: usize = 300;

/// Relative tolerance of the iterative least-squares solve behind the
/// bilinear distance.
pub const LSQ_TOL: f64 = 1e-10;
/// Relative residual above which the bilinear optimality system is declared
/// inconsistent (empty optimal set).
pub const INFEASIBLE_TOL: f64 = 1e-8;

/// A primal-dual point `z = (x, y)` stored contiguously.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Iterate<T> {
    z: Vec<T>,
    n: usize,
}

impl<T: Scalar> Iterate<T> {
    pub fn from_parts(x: &[T], y: &[T]) -> Self {
        let mut z = Vec::with_capacity(x.len() + y.len());
        z.extend_from_slice(x);
        z.extend_from_slice(y);
        Self { z, n: x.len() }
    }

    pub fn from_vec(z: Vec<T>, n: usize) -> Self {
        assert!(n <= z.len());
        Self { z, n }
    }

    pub fn zeros(n: usize, m: usize) -> Self {
        Self {
            z: vec![T::zero(); n + m],
            n,
        }
    }

    /// Primal dimension.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Dual dimension.
    pub fn m(&self) -> usize {
        self.z.len() - self.n
    }

    pub fn x(&self) -> &[T] {
        &self.z[..self.n]
    }

    pub fn y(&self) -> &[T] {
        &self.z[self.n..]
    }

    pub fn as_slice(&self) -> &[T] {
        &self.z
    }

    pub fn as_mut_slice(&mut self) -> &mut [T] {
        &mut self.z
    }

    pub fn into_vec(self) -> Vec<T> {
        self.z
    }

    pub fn is_finite(&self) -> bool {
        self.z.iter().all(|v| v.is_finite())
    }

    pub fn norm(&self) -> T {
        norm2(&self.z)
    }

    pub fn distance_to(&self, other: &Self) -> T {
        dist2(&self.z, &other.z)
    }
}

/// Which prox rule and optimality conditions a problem uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProblemKind {
    Bilinear,
    Lp,
}

/// Unconstrained bilinear saddle problem `min_x max_y yᵀAx + cᵀx − bᵀy`.
#[derive(Debug, Clone)]
pub struct BilinearProblem<T> {
    pub a: SparseMatrixDual<T>,
    pub c: Vec<T>,
    pub b: Vec<T>,
    pub norms: MatrixNorms<T>,
    /// A point of the optimal set `Z* = {Ax = b, Aᵀy = −c}`, when one is
    /// known by construction.
    pub known_saddle: Option<Iterate<T>>,
}

/// Standard-form LP saddle problem `min_{x≥0} max_y yᵀAx + cᵀx − bᵀy`.
#[derive(Debug, Clone)]
pub struct StandardLpProblem<T> {
    pub a: SparseMatrixDual<T>,
    pub c: Vec<T>,
    pub b: Vec<T>,
    pub norms: MatrixNorms<T>,
    /// Unique primal-dual optimum, when certified by construction.
    pub known_optimum: Option<Iterate<T>>,
    /// Hoffman constant of the KKT system. Metadata only; never computed.
    pub hoffman_constant: Option<T>,
    /// Dual nonnegativity `y ≥ 0` carried by inequality-form instances.
    pub dual_nonneg: bool,
}

/// A saddle-point problem of either family.
#[derive(Debug, Clone)]
pub enum SaddleProblem<T> {
    Bilinear(BilinearProblem<T>),
    Lp(StandardLpProblem<T>),
}

impl<T: Scalar> BilinearProblem<T> {
    pub fn new(a: SparseMatrixDual<T>, c: Vec<T>, b: Vec<T>) -> Result<Self> {
        check_dims(&a, &c, &b)?;
        let want_sigma = a.nrows().min(a.ncols()) <= AUTO_SIGMA_LIMIT;
        let norms = compute_norms(&a, want_sigma)?;
        Ok(Self {
            a,
            c,
            b,
            norms,
            known_saddle: None,
        })
    }
}

impl<T: Scalar> StandardLpProblem<T> {
    pub fn new(a: SparseMatrixDual<T>, c: Vec<T>, b: Vec<T>) -> Result<Self> {
        check_dims(&a, &c, &b)?;
        let want_sigma = a.nrows().min(a.ncols()) <= AUTO_SIGMA_LIMIT;
        let norms = compute_norms(&a, want_sigma)?;
        Ok(Self {
            a,
            c,
            b,
            norms,
            known_optimum: None,
            hoffman_constant: None,
            dual_nonneg: false,
        })
    }
}

fn check_dims<T: Scalar>(a: &SparseMatrixDual<T>, c: &[T], b: &[T]) -> Result<()> {
    if c.len() != a.ncols() || b.len() != a.nrows() {
        return Err(Error::Structural(format!(
            "linear terms ({}, {}) do not match {}x{} matrix",
            c.len(),
            b.len(),
            a.nrows(),
            a.ncols()
        )));
    }
    Ok(())
}

impl<T: Scalar> SaddleProblem<T> {
    pub fn kind(&self) -> ProblemKind {
        match self {
            SaddleProblem::Bilinear(_) => ProblemKind::Bilinear,
            SaddleProblem::Lp(_) => ProblemKind::Lp,
        }
    }

    pub fn matrix(&self) -> &SparseMatrixDual<T> {
        match self {
            SaddleProblem::Bilinear(p) => &p.a,
            SaddleProblem::Lp(p) => &p.a,
        }
    }

    pub fn norms(&self) -> &MatrixNorms<T> {
        match self {
            SaddleProblem::Bilinear(p) => &p.norms,
            SaddleProblem::Lp(p) => &p.norms,
        }
    }

    pub fn b(&self) -> &[T] {
        match self {
            SaddleProblem::Bilinear(p) => &p.b,
            SaddleProblem::Lp(p) => &p.b,
        }
    }

    pub fn c(&self) -> &[T] {
        match self {
            SaddleProblem::Bilinear(p) => &p.c,
            SaddleProblem::Lp(p) => &p.c,
        }
    }

    /// Primal dimension `n`.
    pub fn primal_dim(&self) -> usize {
        self.matrix().ncols()
    }

    /// Dual dimension `m`.
    pub fn dual_dim(&self) -> usize {
        self.matrix().nrows()
    }

    pub fn dual_nonneg(&self) -> bool {
        matches!(self, SaddleProblem::Lp(p) if p.dual_nonneg)
    }

    /// Deterministic contribution of the linear terms to `F`: `(c, b)` for
    /// the bilinear family, zero for LP (where the terms live in `g`).
    pub fn linear_offset(&self) -> Vec<T> {
        let (n, m) = (self.primal_dim(), self.dual_dim());
        let mut offset = vec![T::zero(); n + m];
        if let SaddleProblem::Bilinear(p) = self {
            offset[..n].copy_from_slice(&p.c);
            offset[n..].copy_from_slice(&p.b);
        }
        offset
    }

    /// Known point of the optimal set, if the instance carries one.
    pub fn known_optimal_point(&self) -> Option<&Iterate<T>> {
        match self {
            SaddleProblem::Bilinear(p) => p.known_saddle.as_ref(),
            SaddleProblem::Lp(p) => p.known_optimum.as_ref(),
        }
    }

    fn check_point_dims(&self, z: &Iterate<T>) -> Result<()> {
        if z.n() != self.primal_dim() || z.m() != self.dual_dim() {
            return Err(Error::Structural(format!(
                "iterate dims ({}, {}) do not match problem dims ({}, {})",
                z.n(),
                z.m(),
                self.primal_dim(),
                self.dual_dim()
            )));
        }
        Ok(())
    }

    /// The monotone operator `F(z)`.
    ///
    /// Bilinear: `(Aᵀy + c, b − Ax)`. LP: `(Aᵀy, −Ax)`.
    pub fn full_operator(&self, z: &Iterate<T>) -> Result<Vec<T>> {
        self.check_point_dims(z)?;
        let mut out = vec![T::zero(); z.as_slice().len()];
        self.full_operator_into(z.x(), z.y(), &mut out);
        Ok(out)
    }

    /// Allocation-free form of [`Self::full_operator`] for solver loops.
    pub fn full_operator_into(&self, x: &[T], y: &[T], out: &mut [T]) {
        let n = self.primal_dim();
        let a = self.matrix();
        a.mat_t_vec(y, &mut out[..n]);
        {
            let (xs, ys) = out.split_at_mut(n);
            a.mat_vec(x, ys);
            for v in ys.iter_mut() {
                *v = -*v;
            }
            let _ = xs;
        }
        if let SaddleProblem::Bilinear(p) = self {
            for (o, &ci) in out[..n].iter_mut().zip(&p.c) {
                *o += ci;
            }
            for (o, &bi) in out[n..].iter_mut().zip(&p.b) {
                *o += bi;
            }
        }
    }

    /// `prox_{τg}(v)`: identity for bilinear; for LP the x-part is
    /// `max(v_x − τc, 0)` and the y-part `v_y − τb` (clamped at zero as well
    /// when the instance constrains `y ≥ 0`).
    pub fn prox_step(&self, v: &[T], tau: T) -> Iterate<T> {
        let n = self.primal_dim();
        match self {
            SaddleProblem::Bilinear(_) => Iterate::from_vec(v.to_vec(), n),
            SaddleProblem::Lp(p) => {
                let mut z = vec![T::zero(); v.len()];
                for i in 0..n {
                    z[i] = (v[i] - tau * p.c[i]).max(T::zero());
                }
                for i in 0..p.b.len() {
                    let yi = v[n + i] - tau * p.b[i];
                    z[n + i] = if p.dual_nonneg { yi.max(T::zero()) } else { yi };
                }
                Iterate::from_vec(z, n)
            }
        }
    }

    /// In-place prox for solver loops.
    pub fn prox_step_into(&self, v: &mut [T], tau: T) {
        let n = self.primal_dim();
        if let SaddleProblem::Lp(p) = self {
            for i in 0..n {
                v[i] = (v[i] - tau * p.c[i]).max(T::zero());
            }
            for i in 0..p.b.len() {
                v[n + i] = v[n + i] - tau * p.b[i];
                if p.dual_nonneg {
                    v[n + i] = v[n + i].max(T::zero());
                }
            }
        }
    }

    /// Coefficient vector `g` of `d = ẑ − z` in the duality-gap objective
    /// `L(x, ŷ) − L(x̂, y) = gᵀd`, namely `g = (−(Aᵀy + c), Ax − b)`.
    pub fn gap_linear_coefficients(&self, z: &Iterate<T>) -> Result<Vec<T>> {
        self.check_point_dims(z)?;
        let n = self.primal_dim();
        let a = self.matrix();
        let mut g = vec![T::zero(); z.as_slice().len()];
        a.mat_t_vec(z.y(), &mut g[..n]);
        for (gi, &ci) in g[..n].iter_mut().zip(self.c()) {
            *gi = -(*gi + ci);
        }
        a.mat_vec(z.x(), &mut g[n..]);
        for (gi, &bi) in g[n..].iter_mut().zip(self.b()) {
            *gi -= bi;
        }
        Ok(g)
    }

    /// Lagrangian value `L(x, y) = yᵀAx + cᵀx − bᵀy` (smooth part; indicator
    /// terms are zero on feasible points).
    pub fn lagrangian(&self, z: &Iterate<T>) -> T {
        let n = self.primal_dim();
        let a = self.matrix();
        let mut ax = vec![T::zero(); self.dual_dim()];
        a.mat_vec(z.x(), &mut ax);
        let y_ax = crate::scalar::dot(z.y(), &ax);
        let c_x = crate::scalar::dot(self.c(), &z.as_slice()[..n]);
        let b_y = crate::scalar::dot(self.b(), z.y());
        y_ax + c_x - b_y
    }

    /// Euclidean distance from `z` to the optimal set.
    ///
    /// Bilinear: exact via minimum-norm least-squares corrections of the two
    /// linear systems `Ax = b`, `Aᵀy = −c`; fails with
    /// [`Error::Infeasible`] when either system is inconsistent. LP: requires
    /// a certified `known_optimum`.
    pub fn distance_to_optimum(&self, z: &Iterate<T>) -> Result<T> {
        self.check_point_dims(z)?;
        match self {
            SaddleProblem::Bilinear(p) => {
                let a = &p.a;
                // x side: min-norm delta with A(x + delta) = b
                let mut rx = vec![T::zero(); a.nrows()];
                a.mat_vec(z.x(), &mut rx);
                for (r, &bi) in rx.iter_mut().zip(&p.b) {
                    *r = bi - *r;
                }
                let dx = lsq::min_norm_solution(a, &rx, false)?;
                // y side: min-norm delta with Aᵀ(y + delta) = −c
                let mut ry = vec![T::zero(); a.ncols()];
                a.mat_t_vec(z.y(), &mut ry);
                for (r, &ci) in ry.iter_mut().zip(&p.c) {
                    *r = -ci - *r;
                }
                let dy = lsq::min_norm_solution(a, &ry, true)?;
                Ok((dx * dx + dy * dy).sqrt())
            }
            SaddleProblem::Lp(p) => match &p.known_optimum {
                Some(opt) => Ok(z.distance_to(opt)),
                None => Err(Error::Unsupported(
                    "LP distance requires an instance with a certified optimum".into(),
                )),
            },
        }
    }

    /// Nearest point of the optimal set (bilinear only), via the same
    /// least-squares corrections as [`Self::distance_to_optimum`].
    pub fn project_to_optimum(&self, z: &Iterate<T>) -> Result<Iterate<T>> {
        match self {
            SaddleProblem::Bilinear(p) => {
                let a = &p.a;
                let mut rx = vec![T::zero(); a.nrows()];
                a.mat_vec(z.x(), &mut rx);
                for (r, &bi) in rx.iter_mut().zip(&p.b) {
                    *r = bi - *r;
                }
                let dx = lsq::min_norm_correction(a, &rx, false)?;
                let mut ry = vec![T::zero(); a.ncols()];
                a.mat_t_vec(z.y(), &mut ry);
                for (r, &ci) in ry.iter_mut().zip(&p.c) {
                    *r = -ci - *r;
                }
                let dy = lsq::min_norm_correction(a, &ry, true)?;
                let x: Vec<T> = z.x().iter().zip(&dx).map(|(&v, &d)| v + d).collect();
                let y: Vec<T> = z.y().iter().zip(&dy).map(|(&v, &d)| v + d).collect();
                Ok(Iterate::from_parts(&x, &y))
            }
            SaddleProblem::Lp(_) => Err(Error::Unsupported(
                "projection onto the optimal set is only defined for bilinear problems".into(),
            )),
        }
    }

    /// `cᵀx`, the primal objective of the LP family.
    pub fn primal_objective(&self, x: &[T]) -> T {
        crate::scalar::dot(self.c(), x)
    }
}
