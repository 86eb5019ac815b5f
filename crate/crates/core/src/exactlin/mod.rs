//! Exact vectors, matrices, affine relations and Gaussian elimination.

mod elim;
mod linrel;
mod matrix;
mod vector;

pub use elim::{kernel_basis, rank, rref, solve_affine, span_dim, AffineSolution, Echelon};
pub use linrel::LinRel;
pub use matrix::Matrix;
pub use vector::Vector;
