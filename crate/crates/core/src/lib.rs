//! Exact-arithmetic face lattices of convex polyhedra.
//!
//! Polyhedra are given by inequality systems `A x >= b` over an exact
//! ordered field. Every geometric predicate (inclusion, emptiness, activity
//! of an inequality, dimension) is decided by an exact simplex solver that
//! also emits checkable certificates. On top of that the crate builds faces,
//! affine hulls, facets and vertices, the face lattice with its structural
//! checks, vertex figures, and the vertex-edge graph with Balinski paths.
//!
//! All algorithms are generic over [`Scalar`]; the aliases below fix the
//! scalar to arbitrary-precision rationals.

extern crate self as polyface;

pub mod affine;
pub mod error;
pub mod exactlin;
pub mod faces;
pub mod graph;
pub mod hrep;
pub mod lattice;
pub mod lp;
pub mod poly;
pub mod scalar;

pub use affine::AffineSpace;
pub use error::{Error, Result};
pub use exactlin::{LinRel, Matrix, Vector};
pub use faces::{Face, FaceSet};
pub use graph::{Path, Polytope, VertexGraph};
pub use hrep::{FmConfig, HPoly};
pub use lattice::{FaceLattice, RankedOrder, VertexFigure};
pub use lp::{LinProgram, LpOutcome};
pub use poly::{Base, ConvexWitness, EqSpec, Poly};
pub use scalar::Scalar;

/// Arbitrary-precision rationals, always in lowest terms.
pub type Rational = num_rational::BigRational;
pub type QVector = Vector<Rational>;
pub type QMatrix = Matrix<Rational>;
pub type QLinRel = LinRel<Rational>;
pub type QHPoly = HPoly<Rational>;
pub type QPoly = Poly<Rational>;
pub type QBase = Base<Rational>;
pub type QAffineSpace = AffineSpace<Rational>;
pub type QFaceLattice = FaceLattice<Rational>;
pub type QPolytope = Polytope<Rational>;

/// Integer literal as a rational.
pub fn rat(value: i64) -> Rational {
    Rational::from_i64(value)
}

/// `numer / denom` as a rational. Panics on a zero denominator.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(numer.into(), denom.into())
}
