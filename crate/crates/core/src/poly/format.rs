//! V-format (`dim <n>` then `point x1 ... xn` lines) and the matrix file
//! format (`rows cols` header then row-major entries).

use crate::error::Result;
use crate::hrep::format::{parse_error, parse_header, parse_natural, parse_scalar, tokens};
use crate::{Matrix, Scalar, Vector};

/// Returns the ambient dimension and the listed points, in file order.
pub fn parse_vformat<T: Scalar>(text: &str) -> Result<(usize, Vec<Vector<T>>)> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let dim = parse_header(&mut lines)?;
    let mut points = Vec::new();
    for (no, line) in lines {
        let toks = tokens(line);
        let Some(kw) = toks.first() else { continue };
        if kw.text != "point" {
            return Err(parse_error(no, kw.column, format!("unknown keyword `{}`", kw.text)));
        }
        if toks.len() != dim + 1 {
            let col = toks.get(dim + 1).map_or(kw.column, |t| t.column);
            return Err(parse_error(no, col, format!("expected {dim} coordinates")));
        }
        let coords = toks[1..].iter().map(|t| parse_scalar(t, no)).collect::<Result<Vec<T>>>()?;
        points.push(Vector::new(coords));
    }
    Ok((dim, points))
}

pub fn to_vformat<T: Scalar>(dim: usize, points: &[Vector<T>]) -> String {
    let mut out = format!("dim {dim}\n");
    for p in points {
        out.push_str("point");
        for x in p.entries() {
            out.push(' ');
            out.push_str(&x.to_string());
        }
        out.push('\n');
    }
    out
}

pub fn parse_matrix<T: Scalar>(text: &str) -> Result<Matrix<T>> {
    let mut toks = text
        .lines()
        .enumerate()
        .flat_map(|(i, l)| tokens(l).into_iter().map(move |t| (i + 1, t)));
    let mut header = |what: &str| -> Result<usize> {
        let (no, t) = toks.next().ok_or_else(|| parse_error(1, 1, format!("missing {what} in matrix header")))?;
        parse_natural(&t, no)
    };
    let rows = header("row count")?;
    let cols = header("column count")?;
    let mut entries = Vec::with_capacity(rows * cols);
    let mut last = (1, 1);
    for (no, t) in toks {
        if entries.len() == rows * cols {
            return Err(parse_error(no, t.column, "too many matrix entries"));
        }
        last = (no, t.column);
        entries.push(parse_scalar(&t, no)?);
    }
    if entries.len() != rows * cols {
        return Err(parse_error(
            last.0,
            last.1,
            format!("expected {} matrix entries, found {}", rows * cols, entries.len()),
        ));
    }
    Matrix::new(rows, cols, entries)
}
