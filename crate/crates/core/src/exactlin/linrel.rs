use std::fmt;

use crate::error::{check_dim, Result};
use crate::{Scalar, Vector};

/// An affine relation `(normal, offset)`. Read as the inequality
/// `normal·x >= offset` or as the equality `normal·x = offset` depending on
/// context. Relations form a vector space under componentwise operations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinRel<T> {
    pub normal: Vector<T>,
    pub offset: T,
}

impl<T: Scalar> LinRel<T> {
    pub fn new(normal: Vector<T>, offset: T) -> Self {
        LinRel { normal, offset }
    }

    pub fn from_i64s(normal: &[i64], offset: i64) -> Self {
        LinRel { normal: Vector::from_i64s(normal), offset: T::from_i64(offset) }
    }

    pub fn dim(&self) -> usize {
        self.normal.dim()
    }

    /// `normal·x`
    pub fn eval(&self, x: &Vector<T>) -> Result<T> {
        check_dim(self.dim(), x.dim())?;
        Ok(self.normal.inner(x))
    }

    /// `normal·x - offset`
    pub(crate) fn slack(&self, x: &Vector<T>) -> T {
        self.normal.inner(x) - self.offset.clone()
    }

    pub(crate) fn holds_at(&self, x: &Vector<T>) -> bool {
        !self.slack(x).is_negative()
    }

    pub(crate) fn tight_at(&self, x: &Vector<T>) -> bool {
        self.slack(x).is_zero()
    }

    pub fn scale(&self, factor: &T) -> Self {
        LinRel { normal: self.normal.scale(factor), offset: self.offset.clone() * factor.clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        LinRel { normal: self.normal.add(&other.normal), offset: self.offset.clone() + other.offset.clone() }
    }

    /// The opposite relation: `-normal·x >= -offset`.
    pub fn neg(&self) -> Self {
        LinRel { normal: self.normal.neg(), offset: -self.offset.clone() }
    }

    pub fn is_trivial_normal(&self) -> bool {
        self.normal.is_zero()
    }

    /// Positive rescaling to a primitive integer row. Preserves the halfspace;
    /// two rows describe the same halfspace iff their normalized forms agree
    /// (for nonzero normals).
    pub fn normalized(&self) -> Self {
        let mut all: Vec<T> = self.normal.entries().to_vec();
        all.push(self.offset.clone());
        let f = T::primitive_factor(&all);
        self.scale(&f)
    }

    /// `(normal | offset)` as a flat row.
    pub(crate) fn augmented(&self) -> Vec<T> {
        let mut row = self.normal.entries().to_vec();
        row.push(self.offset.clone());
        row
    }

    /// Coordinate `axis` dropped from the normal.
    pub(crate) fn drop_coord(&self, axis: usize) -> Self {
        LinRel { normal: self.normal.remove(axis), offset: self.offset.clone() }
    }
}

impl<T: fmt::Display> fmt::Display for LinRel<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} . x >= {}", self.normal, self.offset)
    }
}
