use std::collections::BTreeSet;

use super::Poly;
use crate::error::{check_dim, Error, Result};
use crate::{HPoly, LinRel, Scalar};

/// An indexed set of halfspaces. Rows are stored normalized and duplicates
/// are merged, so indices are stable identifiers for the halfspaces.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Base<T> {
    ambient: usize,
    items: Vec<LinRel<T>>,
}

impl<T: Scalar> Base<T> {
    pub fn new(ambient: usize, rels: impl IntoIterator<Item = LinRel<T>>) -> Result<Self> {
        let mut items: Vec<LinRel<T>> = Vec::new();
        for r in rels {
            check_dim(ambient, r.dim())?;
            let r = r.normalized();
            if !items.contains(&r) {
                items.push(r);
            }
        }
        Ok(Base { ambient, items })
    }

    pub fn from_hpoly(p: &HPoly<T>) -> Self {
        Self::new(p.dim(), p.rows().iter().cloned()).expect("rows share the dimension")
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn items(&self) -> &[LinRel<T>] {
        &self.items
    }

    pub fn get(&self, i: usize) -> Option<&LinRel<T>> {
        self.items.get(i)
    }

    pub fn all_indices(&self) -> BTreeSet<usize> {
        (0..self.items.len()).collect()
    }

    /// `∩ hs(e)` over the base.
    pub fn poly(&self) -> Poly<T> {
        Poly::new(HPoly::new_unchecked(self.ambient, self.items.clone()))
    }

    /// The base polyhedron with the rows in `eqs` forced to equality.
    pub fn poly_eq(&self, eqs: &BTreeSet<usize>) -> Result<Poly<T>> {
        Ok(Poly::new(self.eq_hpoly(eqs)?))
    }

    pub(crate) fn eq_hpoly(&self, eqs: &BTreeSet<usize>) -> Result<HPoly<T>> {
        let mut rows = self.items.clone();
        for &i in eqs {
            let r = self.items.get(i).ok_or_else(|| {
                Error::Usage(format!("index {i} out of range for a base of {} rows", self.items.len()))
            })?;
            rows.push(r.neg());
        }
        Ok(HPoly::new_unchecked(self.ambient, rows))
    }

    /// Indices whose rows are tight at `x`.
    pub(crate) fn tight_at(&self, x: &crate::Vector<T>) -> BTreeSet<usize> {
        (0..self.items.len()).filter(|&i| self.items[i].tight_at(x)).collect()
    }
}

/// A base together with the indices forced to equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EqSpec<T> {
    pub base: Base<T>,
    pub eqs: BTreeSet<usize>,
}

impl<T: Scalar> EqSpec<T> {
    pub fn new(base: Base<T>, eqs: BTreeSet<usize>) -> Result<Self> {
        if let Some(&bad) = eqs.iter().find(|&&i| i >= base.len()) {
            return Err(Error::Usage(format!("index {bad} out of range for a base of {} rows", base.len())));
        }
        Ok(EqSpec { base, eqs })
    }

    pub fn poly(&self) -> Poly<T> {
        self.base.poly_eq(&self.eqs).expect("indices validated")
    }
}
