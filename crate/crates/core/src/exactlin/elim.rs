//! Gaussian elimination over an exact field.
//!
//! Pivots are the first nonzero entry in column order, so every result here
//! is a deterministic function of the input.

use crate::error::{check_dim, Result};
use crate::{LinRel, Matrix, Scalar, Vector};

/// Reduced row echelon form: pivot entries are one and pivot columns are
/// zero elsewhere. Zero rows are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon<T> {
    pub cols: usize,
    pub rows: Vec<Vec<T>>,
    pub pivots: Vec<usize>,
}

impl<T: Scalar> Echelon<T> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `v` against the echelon rows; the result is zero iff `v` lies
    /// in the row space.
    pub fn reduce(&self, v: &[T]) -> Vec<T> {
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (o, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    *o = o.clone() - f.clone() * r.clone();
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[T]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Basis of the null space `{x : row·x = 0 for every row}`, one vector
    /// per free column in increasing order.
    pub fn kernel(&self) -> Vec<Vector<T>> {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![T::zero(); self.cols];
                v[f] = T::one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    v[p] = -row[f].clone();
                }
                Vector::new(v)
            })
            .collect()
    }
}

/// Row-reduces `rows`, each of length `cols`.
pub fn rref<T: Scalar>(mut rows: Vec<Vec<T>>, cols: usize) -> Echelon<T> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, found);
        let inv = T::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            if !x.is_zero() {
                *x = x.clone() * inv.clone();
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x = x.clone() - f.clone() * p.clone();
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    Echelon { cols, rows, pivots }
}

pub fn rank<T: Scalar>(m: &Matrix<T>) -> usize {
    rref(m.to_row_vecs(), m.cols()).rank()
}

/// Basis of `{x : Mx = 0}`; empty iff `M` has full column rank.
pub fn kernel_basis<T: Scalar>(m: &Matrix<T>) -> Vec<Vector<T>> {
    rref(m.to_row_vecs(), m.cols()).kernel()
}

/// A particular solution of `Mx = rhs` together with a basis of the kernel of `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolution<T> {
    pub particular: Vector<T>,
    pub kernel: Vec<Vector<T>>,
}

/// Solves `Mx = rhs`; `None` iff the system is inconsistent. The particular
/// solution has every free variable set to zero.
pub fn solve_affine<T: Scalar>(m: &Matrix<T>, rhs: &Vector<T>) -> Result<Option<AffineSolution<T>>> {
    check_dim(m.rows(), rhs.dim())?;
    let n = m.cols();
    let rows: Vec<Vec<T>> = (0..m.rows())
        .map(|r| {
            let mut row = m.row(r).to_vec();
            row.push(rhs[r].clone());
            row
        })
        .collect();
    let ech = rref(rows, n + 1);
    if ech.pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut particular = vec![T::zero(); n];
    for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
        particular[p] = row[n].clone();
    }
    let coeffs = Echelon {
        cols: n,
        rows: ech.rows.iter().map(|r| r[..n].to_vec()).collect(),
        pivots: ech.pivots.clone(),
    };
    Ok(Some(AffineSolution { particular: Vector::new(particular), kernel: coeffs.kernel() }))
}

/// Dimension of the span of `rels` inside the space of relations, i.e. the
/// rank of the stacked `(normal | offset)` rows.
pub fn span_dim<T: Scalar>(rels: &[LinRel<T>]) -> usize {
    let Some(first) = rels.first() else {
        return 0;
    };
    let cols = first.dim() + 1;
    rref(rels.iter().map(|r| r.augmented()).collect(), cols).rank()
}
