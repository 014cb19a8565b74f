//! JSON problem files.
//!
//! Schema: `{kind, m, n, matrix, b, c, known_optimum?, dual_nonneg_flag?,
//! hoffman_constant?}` where `matrix` is either a path to a Matrix Market
//! file (resolved relative to the JSON file) or inline `[row, col, value]`
//! triplets.

use std::fs::File;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::sparsela::{read_matrix_market, write_matrix_market, SparseMatrixDual};

use super::{BilinearProblem, Iterate, ProblemKind, SaddleProblem, StandardLpProblem};

/// Inline triplets or a Matrix Market path.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MatrixSource<T> {
    Path(String),
    Triplets(Vec<(usize, usize, T)>),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct IterateFile<T> {
    x: Vec<T>,
    y: Vec<T>,
}

/// On-disk problem description.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProblemFile<T> {
    pub kind: ProblemKind,
    pub m: usize,
    pub n: usize,
    pub matrix: MatrixSource<T>,
    pub b: Vec<T>,
    pub c: Vec<T>,
    #[serde(skip_serializing_if = "Option::is_none")]
    known_optimum: Option<IterateFile<T>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dual_nonneg_flag: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hoffman_constant: Option<T>,
}

/// Loads a problem from a JSON file.
pub fn load_problem<T: Scalar>(path: &Path) -> Result<SaddleProblem<T>> {
    let file: ProblemFile<T> = serde_json::from_reader(File::open(path)?)?;
    let matrix = match &file.matrix {
        MatrixSource::Path(rel) => {
            let base = path.parent().unwrap_or_else(|| Path::new("."));
            read_matrix_market(File::open(base.join(rel))?)?
        }
        MatrixSource::Triplets(t) => SparseMatrixDual::from_triplets(file.m, file.n, t)?,
    };
    if matrix.nrows() != file.m || matrix.ncols() != file.n {
        return Err(Error::Structural(format!(
            "matrix is {}x{} but file declares {}x{}",
            matrix.nrows(),
            matrix.ncols(),
            file.m,
            file.n
        )));
    }
    let optimum = file
        .known_optimum
        .as_ref()
        .map(|it| Iterate::from_parts(&it.x, &it.y));
    if let Some(it) = &optimum {
        if it.n() != file.n || it.m() != file.m {
            return Err(Error::Structural("known_optimum dimension mismatch".into()));
        }
    }
    match file.kind {
        ProblemKind::Bilinear => {
            let mut p = BilinearProblem::new(matrix, file.c, file.b)?;
            p.known_saddle = optimum;
            Ok(SaddleProblem::Bilinear(p))
        }
        ProblemKind::Lp => {
            let mut p = StandardLpProblem::new(matrix, file.c, file.b)?;
            p.known_optimum = optimum;
            p.dual_nonneg = file.dual_nonneg_flag.unwrap_or(false);
            p.hoffman_constant = file.hoffman_constant;
            Ok(SaddleProblem::Lp(p))
        }
    }
}

/// Saves a problem as JSON. When `matrix_path` is given the matrix goes to
/// that Matrix Market file (referenced by relative path); otherwise the
/// triplets are embedded inline.
pub fn save_problem<T: Scalar>(
    problem: &SaddleProblem<T>,
    path: &Path,
    matrix_path: Option<&Path>,
) -> Result<()> {
    let matrix = match matrix_path {
        Some(mp) => {
            write_matrix_market(problem.matrix(), File::create(mp)?)?;
            let base = path.parent().unwrap_or_else(|| Path::new("."));
            let rel = mp.strip_prefix(base).unwrap_or(mp);
            MatrixSource::Path(rel.to_string_lossy().into_owned())
        }
        None => MatrixSource::Triplets(problem.matrix().triplets()),
    };
    let known_optimum = problem.known_optimal_point().map(|it| IterateFile {
        x: it.x().to_vec(),
        y: it.y().to_vec(),
    });
    let (dual_nonneg_flag, hoffman_constant) = match problem {
        SaddleProblem::Lp(p) => (
            if p.dual_nonneg { Some(true) } else { None },
            p.hoffman_constant,
        ),
        SaddleProblem::Bilinear(_) => (None, None),
    };
    let file = ProblemFile {
        kind: problem.kind(),
        m: problem.dual_dim(),
        n: problem.primal_dim(),
        matrix,
        b: problem.b().to_vec(),
        c: problem.c().to_vec(),
        known_optimum,
        dual_nonneg_flag,
        hoffman_constant,
    };
    let mut f = File::create(path)?;
    serde_json::to_writer_pretty(&mut f, &file)?;
    use std::io::Write;
    writeln!(f)?;
    Ok(())
}
