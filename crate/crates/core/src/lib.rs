//! Stochastic extragradient solvers with variance reduction and restarts for
//! sharp primal-dual problems.
//!
//! The library covers:
//!
//! * standard-form LP saddle problems and unconstrained bilinear saddle
//!   problems over one sparse matrix ([`problems`]);
//! * five interchangeable gradient oracles — the deterministic full operator,
//!   uniform and importance row/column sampling, and two single-coordinate
//!   estimators ([`oracles`]);
//! * the variance-reduced stochastic extragradient inner loop, its restarted
//!   outer loop, deterministic baselines, and a lazy engine that advances
//!   coordinate-sampled bilinear iterates in O(1) per step ([`solvers`]);
//! * sharpness and optimality diagnostics: normalized duality gaps,
//!   subdifferential distances, multi-trial ensembles, rate fits
//!   ([`diagnostics`]), plus self-contained verification suites ([`verify`]).
//!
//! All numeric code is generic over the [`Scalar`] floating-point type;
//! `f64` aliases for the main types live at the crate root.

pub mod diagnostics;
pub mod error;
pub mod oracles;
pub mod problems;
pub mod scalar;
pub mod solvers;
pub mod sparsela;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// `f64` sparse matrix in simultaneous row/column form.
pub type Matrix = sparsela::SparseMatrixDual<f64>;
/// `f64` cached matrix norms.
pub type Norms = sparsela::MatrixNorms<f64>;
/// `f64` weighted discrete sampler.
pub type Sampler = sparsela::DiscreteSampler<f64>;
