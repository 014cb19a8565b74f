//! Matrix Market coordinate format reader and writer (ASCII, 1-based
//! indices, `real general` matrices).

use std::io::{BufRead, BufReader, BufWriter, Read, Write};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::sparsela::SparseMatrixDual;

/// Reads a `%%MatrixMarket matrix coordinate real general` stream.
pub fn read_matrix_market<T: Scalar, R: Read>(reader: R) -> Result<SparseMatrixDual<T>> {
    let mut lines = BufReader::new(reader).lines();

    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty Matrix Market stream".into()))??;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.first() != Some(&"%%MatrixMarket") {
        return Err(Error::Parse("missing %%MatrixMarket header".into()));
    }
    if fields.get(1) != Some(&"matrix") || fields.get(2) != Some(&"coordinate") {
        return Err(Error::Parse(
            "only 'matrix coordinate' Matrix Market files are supported".into(),
        ));
    }
    match fields.get(3) {
        Some(&"real") | Some(&"integer") => {}
        other => {
            return Err(Error::Parse(format!(
                "unsupported value type {other:?}; expected real"
            )))
        }
    }
    if fields.get(4) != Some(&"general") {
        return Err(Error::Parse(
            "only 'general' symmetry is supported".into(),
        ));
    }

    let mut dims: Option<(usize, usize, usize)> = None;
    let mut triplets: Vec<(usize, usize, T)> = Vec::new();
    for line in lines {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('%') {
            continue;
        }
        let mut it = trimmed.split_whitespace();
        if dims.is_none() {
            let m = parse_usize(it.next(), "row count")?;
            let n = parse_usize(it.next(), "column count")?;
            let nnz = parse_usize(it.next(), "nnz count")?;
            dims = Some((m, n, nnz));
            continue;
        }
        let i = parse_usize(it.next(), "row index")?;
        let j = parse_usize(it.next(), "column index")?;
        let v = it
            .next()
            .and_then(T::parse_str)
            .ok_or_else(|| Error::Parse(format!("bad value on line: {trimmed}")))?;
        if i == 0 || j == 0 {
            return Err(Error::Parse("Matrix Market indices are 1-based".into()));
        }
        triplets.push((i - 1, j - 1, v));
    }

    let (m, n, nnz) = dims.ok_or_else(|| Error::Parse("missing dimensions line".into()))?;
    if triplets.len() != nnz {
        return Err(Error::Parse(format!(
            "declared {nnz} entries but found {}",
            triplets.len()
        )));
    }
    SparseMatrixDual::from_triplets(m, n, &triplets)
}

/// Writes the matrix in coordinate format, 1-based, row-major entry order.
pub fn write_matrix_market<T: Scalar, W: Write>(a: &SparseMatrixDual<T>, writer: W) -> Result<()> {
    let mut w = BufWriter::new(writer);
    writeln!(w, "%%MatrixMarket matrix coordinate real general")?;
    writeln!(w, "{} {} {}", a.nrows(), a.ncols(), a.nnz())?;
    for (i, j, v) in a.triplets() {
        // {:?} prints the shortest representation that round-trips.
        writeln!(w, "{} {} {:?}", i + 1, j + 1, v)?;
    }
    w.flush()?;
    Ok(())
}

fn parse_usize(field: Option<&str>, what: &str) -> Result<usize> {
    field
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Parse(format!("bad or missing {what}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn parse_simple_file() {
        let text = "%%MatrixMarket matrix coordinate real general\n\
                    % a comment\n\
                    2 3 3\n\
                    1 1 1.5\n\
                    2 3 -2e-3\n\
                    1 2 4\n";
        let a: SparseMatrixDual<f64> = read_matrix_market(text.as_bytes()).unwrap();
        assert_eq!((a.nrows(), a.ncols(), a.nnz()), (2, 3, 3));
        assert_eq!(a.row(0), (&[0usize, 1][..], &[1.5, 4.0][..]));
        assert_eq!(a.row(1), (&[2usize][..], &[-2e-3][..]));
    }

    #[test]
    fn rejects_non_coordinate() {
        let text = "%%MatrixMarket matrix array real general\n1 1\n1.0\n";
        assert!(read_matrix_market::<f64, _>(text.as_bytes()).is_err());
    }

    #[test]
    fn rejects_zero_based_indices() {
        let text = "%%MatrixMarket matrix coordinate real general\n1 1 1\n0 1 1.0\n";
        assert!(read_matrix_market::<f64, _>(text.as_bytes()).is_err());
    }

    #[test]
    fn round_trip_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..20 {
            let m = rng.gen_range(1..12);
            let n = rng.gen_range(1..12);
            let mut t = Vec::new();
            for i in 0..m {
                for j in 0..n {
                    if rng.gen::<f64>() < 0.3 {
                        t.push((i, j, rng.gen::<f64>() * 2e3 - 1e3));
                    }
                }
            }
            let a = SparseMatrixDual::from_triplets(m, n, &t).unwrap();
            let mut buf = Vec::new();
            write_matrix_market(&a, &mut buf).unwrap();
            let b: SparseMatrixDual<f64> = read_matrix_market(buf.as_slice()).unwrap();
            assert_eq!(a, b, "round trip must be exact");
        }
    }
}
