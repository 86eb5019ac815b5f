//! Affine subspaces: the empty set, or an origin plus a direction space.
//!
//! Dimensions follow the shifted convention `adim`: 0 for the empty set and
//! `1 + dim(directions)` otherwise, so a point has `adim` 1.

use serde_json::{json, Value};

use crate::error::{check_dim, Result};
use crate::exactlin::{rref, solve_affine, Echelon};
use crate::{LinRel, Matrix, Scalar, Vector};

/// An affine subspace in canonical form.
///
/// The direction basis is the reduced row echelon basis of the direction
/// space and the origin is reduced against it, so two flats are equal as
/// sets iff they are structurally equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AffineSpace<T> {
    Empty { dim: usize },
    Flat { origin: Vector<T>, dir: Vec<Vector<T>> },
}

impl<T: Scalar> AffineSpace<T> {
    /// The flat through `origin` spanned by `directions` (any spanning set).
    pub fn flat(origin: Vector<T>, directions: &[Vector<T>]) -> Result<Self> {
        let n = origin.dim();
        for d in directions {
            check_dim(n, d.dim())?;
        }
        let ech = rref(directions.iter().map(|d| d.entries().to_vec()).collect(), n);
        let origin = Vector::new(ech.reduce(origin.entries()));
        Ok(AffineSpace::Flat { origin, dir: ech.rows.into_iter().map(Vector::new).collect() })
    }

    pub fn point(x: Vector<T>) -> Self {
        AffineSpace::Flat { origin: x, dir: Vec::new() }
    }

    pub fn whole(dim: usize) -> Self {
        AffineSpace::Flat { origin: Vector::zeros(dim), dir: (0..dim).map(|i| Vector::unit(dim, i)).collect() }
    }

    /// Common solutions of `normal·x = offset` over `rels`.
    pub fn of_rels(dim: usize, rels: &[LinRel<T>]) -> Result<Self> {
        for r in rels {
            check_dim(dim, r.dim())?;
        }
        let normals: Vec<Vector<T>> = rels.iter().map(|r| r.normal.clone()).collect();
        let m = Matrix::from_rows(dim, &normals)?;
        let rhs = Vector::new(rels.iter().map(|r| r.offset.clone()).collect());
        Ok(match solve_affine(&m, &rhs)? {
            None => AffineSpace::Empty { dim },
            Some(sol) => Self::flat(sol.particular, &sol.kernel)?,
        })
    }

    pub fn ambient(&self) -> usize {
        match self {
            AffineSpace::Empty { dim } => *dim,
            AffineSpace::Flat { origin, .. } => origin.dim(),
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, AffineSpace::Empty { .. })
    }

    /// Shifted dimension: 0 when empty, `1 + |dir|` otherwise.
    pub fn adim(&self) -> usize {
        match self {
            AffineSpace::Empty { .. } => 0,
            AffineSpace::Flat { dir, .. } => dir.len() + 1,
        }
    }

    pub fn origin(&self) -> Option<&Vector<T>> {
        match self {
            AffineSpace::Empty { .. } => None,
            AffineSpace::Flat { origin, .. } => Some(origin),
        }
    }

    pub fn directions(&self) -> &[Vector<T>] {
        match self {
            AffineSpace::Empty { .. } => &[],
            AffineSpace::Flat { dir, .. } => dir,
        }
    }

    fn echelon(&self) -> Echelon<T> {
        let n = self.ambient();
        // dir is already in reduced echelon form
        let rows: Vec<Vec<T>> = self.directions().iter().map(|d| d.entries().to_vec()).collect();
        let pivots = rows
            .iter()
            .map(|r| r.iter().position(|x| !x.is_zero()).expect("nonzero basis vector"))
            .collect();
        Echelon { cols: n, rows, pivots }
    }

    pub fn contains(&self, x: &Vector<T>) -> Result<bool> {
        check_dim(self.ambient(), x.dim())?;
        Ok(match self {
            AffineSpace::Empty { .. } => false,
            AffineSpace::Flat { origin, .. } => self.echelon().contains(x.sub(origin).entries()),
        })
    }

    /// Coefficients `t` with `x = origin + Σ t_i dir_i`, when `x` lies on the flat.
    pub fn coordinates(&self, x: &Vector<T>) -> Result<Option<Vec<T>>> {
        if !self.contains(x)? {
            return Ok(None);
        }
        let origin = self.origin().expect("nonempty");
        let delta = x.sub(origin);
        let ech = self.echelon();
        Ok(Some(ech.pivots.iter().map(|&p| delta[p].clone()).collect()))
    }

    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        check_dim(self.ambient(), other.ambient())?;
        Ok(match self {
            AffineSpace::Empty { .. } => true,
            AffineSpace::Flat { origin, dir } => {
                if !other.contains(origin)? {
                    return Ok(false);
                }
                let ech = other.echelon();
                dir.iter().all(|d| ech.contains(d.entries()))
            }
        })
    }

    /// Intersection with the hyperplane `e.normal·x = e.offset`.
    pub fn slice(&self, e: &LinRel<T>) -> Result<Self> {
        check_dim(self.ambient(), e.dim())?;
        let AffineSpace::Flat { origin, dir } = self else {
            return Ok(self.clone());
        };
        let coeffs: Vec<T> = dir.iter().map(|d| e.normal.inner(d)).collect();
        let gap = e.offset.clone() - e.normal.inner(origin);
        let Some(k) = coeffs.iter().position(|c| !c.is_zero()) else {
            return Ok(if gap.is_zero() { self.clone() } else { AffineSpace::Empty { dim: origin.dim() } });
        };
        // move along dir[k] onto the hyperplane; the new directions are the
        // combinations of dir that stay parallel to it
        let new_origin = origin.add_scaled(&(gap / coeffs[k].clone()), &dir[k]);
        let new_dir: Vec<Vector<T>> = dir
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != k)
            .map(|(i, d)| d.add_scaled(&(-coeffs[i].clone() / coeffs[k].clone()), &dir[k]))
            .collect();
        Self::flat(new_origin, &new_dir)
    }

    pub fn to_json(&self) -> Value {
        match self {
            AffineSpace::Empty { .. } => json!("empty"),
            AffineSpace::Flat { origin, dir } => json!({
                "origin": vector_json(origin),
                "dir": dir.iter().map(vector_json).collect::<Vec<_>>(),
            }),
        }
    }
}

pub(crate) fn vector_json<T: Scalar>(v: &Vector<T>) -> Value {
    Value::Array(v.entries().iter().map(|x| Value::String(x.to_string())).collect())
}
