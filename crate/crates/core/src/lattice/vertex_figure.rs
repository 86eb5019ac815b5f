//! Vertex figures: slicing a polytope just past one vertex.

use super::{is_order_isomorphism, FaceLattice};
use crate::error::{Error, Result};
use crate::{LinRel, Poly, Scalar, Vector};

#[derive(Clone, Debug)]
pub struct VertexFigure<T> {
    /// Hyperplane `cut` with `v` strictly on its negative side and every
    /// other vertex strictly on its positive side.
    pub cut: LinRel<T>,
    /// `P ∩ hp(cut)`.
    pub slice: Poly<T>,
    /// The interval `[{v}, P]` of the face lattice of `P`, re-ranked.
    pub upper: FaceLattice<T>,
    pub slice_lattice: FaceLattice<T>,
    /// Pairs `(i, j)`: face `i` of `upper` meets the cut in face `j` of `slice_lattice`.
    pub correspondence: Vec<(usize, usize)>,
}

impl<T: Scalar> VertexFigure<T> {
    /// Whether the correspondence is an order isomorphism.
    pub fn is_isomorphism(&self) -> bool {
        is_order_isomorphism(self.upper.order(), self.slice_lattice.order(), &self.correspondence)
    }
}

/// The vertex figure of a compact `p` of shifted dimension at least 2 at vertex `v`.
pub fn vertex_figure<T: Scalar>(p: &Poly<T>, v: &Vector<T>) -> Result<VertexFigure<T>> {
    p.require_compact("a vertex figure")?;
    if p.pdim() < 2 {
        return Err(Error::Precondition(format!("a vertex figure needs pdim >= 2, got {}", p.pdim())));
    }
    let lattice = FaceLattice::build(p);
    let vi = lattice
        .vertex_index(v)
        .ok_or_else(|| Error::Precondition(format!("{v} is not a vertex")))?;
    let others: Vec<Vector<T>> = lattice.vertices().into_iter().filter(|w| w != v).collect();
    let sep = Poly::separation(&others, v)?
        .ok_or_else(|| Error::Invariant(format!("vertex {v} lies in the hull of the other vertices")))?;
    let two = T::one() + T::one();
    let nearest = others
        .iter()
        .map(|w| sep.normal.inner(w))
        .min()
        .expect("pdim >= 2 gives a second vertex");
    let alpha = (sep.normal.inner(v) + nearest) / two;
    let cut = LinRel::new(sep.normal.clone(), alpha);
    let slice = p.intersect(&Poly::hp(&cut))?;
    let slice_lattice = FaceLattice::build(&slice);

    let members = lattice.interval_indices(vi, lattice.top());
    let upper = lattice.interval(vi, lattice.top())?;
    let mut correspondence = Vec::with_capacity(members.len());
    for (i, &f) in members.iter().enumerate() {
        let j = if f == vi {
            slice_lattice.bottom()
        } else {
            let g = lattice.face(f).poly.intersect(&Poly::hp(&cut))?;
            slice_lattice
                .locate(&g)
                .ok_or_else(|| Error::Invariant(format!("face {f} does not meet the cut in a face")))?
        };
        correspondence.push((i, j));
    }
    Ok(VertexFigure { cut, slice, upper, slice_lattice, correspondence })
}
