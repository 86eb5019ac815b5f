use std::fmt;
use std::ops::Index;

use crate::error::{check_dim, Result};
use crate::Scalar;

/// A column vector with exact entries. Its length is the ambient dimension.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector<T>(Vec<T>);

impl<T: Scalar> Vector<T> {
    pub fn new(entries: Vec<T>) -> Self {
        Vector(entries)
    }

    pub fn zeros(dim: usize) -> Self {
        Vector(vec![T::zero(); dim])
    }

    pub fn unit(dim: usize, axis: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[axis] = T::one();
        v
    }

    pub fn from_i64s(values: &[i64]) -> Self {
        Vector(values.iter().map(|&v| T::from_i64(v)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[T] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<T> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    /// Scalar product; fails when the lengths differ.
    pub fn dot(&self, other: &Self) -> Result<T> {
        check_dim(self.dim(), other.dim())?;
        Ok(self.inner(other))
    }

    pub(crate) fn inner(&self, other: &Self) -> T {
        debug_assert_eq!(self.dim(), other.dim());
        let mut acc = T::zero();
        for (a, b) in self.0.iter().zip(&other.0) {
            if !a.is_zero() && !b.is_zero() {
                acc = acc + a.clone() * b.clone();
            }
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a.clone() + b.clone()).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a.clone() - b.clone()).collect())
    }

    pub fn scale(&self, factor: &T) -> Self {
        Vector(self.0.iter().map(|a| a.clone() * factor.clone()).collect())
    }

    pub fn neg(&self) -> Self {
        Vector(self.0.iter().map(|a| -a.clone()).collect())
    }

    /// `self + factor * other`
    pub fn add_scaled(&self, factor: &T, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Vector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.clone() + factor.clone() * b.clone())
                .collect(),
        )
    }

    /// Isobarycenter of a nonempty family of points.
    pub fn barycenter<'a, I>(points: I) -> Option<Self>
    where
        I: IntoIterator<Item = &'a Self>,
    {
        let mut iter = points.into_iter();
        let first = iter.next()?.clone();
        let mut count = 1usize;
        let sum = iter.fold(first, |acc, p| {
            count += 1;
            acc.add(p)
        });
        Some(sum.scale(&(T::one() / T::from_usize(count))))
    }

    /// Drops the coordinate at `axis`.
    pub fn remove(&self, axis: usize) -> Self {
        let mut e = self.0.clone();
        e.remove(axis);
        Vector(e)
    }

    /// Concatenation `(self, other)`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut e = self.0.clone();
        e.extend(other.0.iter().cloned());
        Vector(e)
    }
}

impl<T> Index<usize> for Vector<T> {
    type Output = T;

    fn index(&self, index: usize) -> &T {
        &self.0[index]
    }
}

impl<T: Scalar> From<Vec<T>> for Vector<T> {
    fn from(entries: Vec<T>) -> Self {
        Vector(entries)
    }
}

impl<T: fmt::Display> fmt::Display for Vector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}
