//! Face lattices: the faces of a polyhedron ordered by inclusion.

mod export;
mod order;
mod vertex_figure;

pub use order::{is_order_isomorphism, RankedOrder};
pub use vertex_figure::{vertex_figure, VertexFigure};

use crate::error::{Error, Result};
use crate::faces::{face_set, Face, FaceSet};
use crate::{Base, Poly, Scalar, Vector};

#[derive(Clone, Debug)]
pub struct FaceLattice<T> {
    base: Base<T>,
    faces: Vec<Face<T>>,
    order: RankedOrder,
    compact: bool,
}

impl<T: Scalar> FaceLattice<T> {
    pub fn build(p: &Poly<T>) -> Self {
        Self::from_face_set(face_set(p), p.compact())
    }

    pub fn from_face_set(fs: FaceSet<T>, compact: bool) -> Self {
        let n = fs.faces.len();
        let leq: Vec<Vec<bool>> = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        let (fa, fb) = (&fs.faces[a], &fs.faces[b]);
                        fa.is_empty() || (!fb.is_empty() && fa.active.is_superset(&fb.active))
                    })
                    .collect()
            })
            .collect();
        let ranks = fs.faces.iter().map(|f| f.rank).collect();
        let order = RankedOrder::new(ranks, leq).expect("inclusion of faces is a partial order");
        FaceLattice { base: fs.base, faces: fs.faces, order, compact }
    }

    pub fn base(&self) -> &Base<T> {
        &self.base
    }

    pub fn faces(&self) -> &[Face<T>] {
        &self.faces
    }

    pub fn face(&self, i: usize) -> &Face<T> {
        &self.faces[i]
    }

    pub fn order(&self) -> &RankedOrder {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn is_compact(&self) -> bool {
        self.compact
    }

    /// Rank within this lattice; intervals are re-ranked from 0.
    pub fn rank(&self, i: usize) -> usize {
        self.order.rank(i)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.order.leq(a, b)
    }

    pub fn hasse(&self) -> &[(usize, usize)] {
        self.order.hasse()
    }

    pub fn bottom(&self) -> usize {
        self.order.bottom()
    }

    pub fn top(&self) -> usize {
        self.order.top()
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.order.meet(a, b).expect("face lattices have all meets")
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.order.join(a, b).expect("face lattices have all joins")
    }

    /// Index of the face equal to `q` as a point set.
    pub fn locate(&self, q: &Poly<T>) -> Option<usize> {
        if q.is_empty() {
            return self.faces.iter().position(Face::is_empty);
        }
        let act = crate::faces::active(&self.base, q);
        self.faces.iter().position(|f| !f.is_empty() && f.active == act)
    }

    /// Index of the vertex `{v}`.
    pub fn vertex_index(&self, v: &Vector<T>) -> Option<usize> {
        self.faces.iter().position(|f| f.point() == Some(v))
    }

    /// Vertices of face `i` that belong to this lattice, sorted.
    pub fn vertices_of(&self, i: usize) -> Vec<Vector<T>> {
        let mut out: Vec<Vector<T>> = (0..self.len())
            .filter(|&a| self.leq(a, i))
            .filter_map(|a| self.faces[a].point().cloned())
            .collect();
        out.sort();
        out
    }

    pub fn vertices(&self) -> Vec<Vector<T>> {
        let mut out: Vec<Vector<T>> = self.faces.iter().filter_map(|f| f.point().cloned()).collect();
        out.sort();
        out
    }

    /// Count of faces per rank, indexed by rank.
    pub fn f_vector(&self) -> Vec<usize> {
        let max = self.order.ranks().iter().copied().max().unwrap_or(0);
        let mut out = vec![0; max + 1];
        for &r in self.order.ranks() {
            out[r] += 1;
        }
        out
    }

    pub fn check_lattice_axioms(&self) -> bool {
        self.order.check_lattice_axioms()
    }

    pub fn check_graded(&self) -> bool {
        self.order.check_graded()
    }

    /// Only meaningful for polytopes: unbounded polyhedra lack enough vertices.
    pub fn check_atomistic(&self) -> Result<bool> {
        if !self.compact {
            return Err(Error::Precondition("atomicity needs a compact polyhedron".into()));
        }
        Ok(self.order.check_atomistic())
    }

    pub fn check_coatomistic(&self) -> bool {
        self.order.check_coatomistic()
    }

    pub fn check_diamond(&self) -> bool {
        self.order.check_diamond()
    }

    /// `Σ (-1)^(r+1) f_r` over all ranks, empty face included; zero for
    /// every nonempty polytope.
    pub fn euler_sum(&self) -> i64 {
        self.f_vector().iter().enumerate().map(|(r, &c)| if r % 2 == 1 { c as i64 } else { -(c as i64) }).sum()
    }

    /// The faces between `lo` and `hi`, re-ranked so `lo` has rank 0.
    pub fn interval(&self, lo: usize, hi: usize) -> Result<Self> {
        if lo >= self.len() || hi >= self.len() {
            return Err(Error::Usage(format!("face index out of range (lattice has {} faces)", self.len())));
        }
        if !self.leq(lo, hi) {
            return Err(Error::Usage(format!("faces {lo} and {hi} are not comparable as an interval")));
        }
        let elems = self.order.interval(lo, hi);
        Ok(FaceLattice {
            base: self.base.clone(),
            faces: elems.iter().map(|&i| self.faces[i].clone()).collect(),
            order: self.order.restrict(&elems),
            compact: self.compact,
        })
    }

    /// Indices into `self` of the faces of an interval, in interval order.
    pub fn interval_indices(&self, lo: usize, hi: usize) -> Vec<usize> {
        self.order.interval(lo, hi)
    }
}

#[cfg(test)]
mod tests;
