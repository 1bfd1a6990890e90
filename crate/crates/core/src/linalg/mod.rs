//! Dense linear algebra over `GF(q)`: echelon forms, solving, and subspaces
//! in canonical form.

mod mat;
mod subspace;
pub mod text;

pub use mat::{axpy, dot, rank, rref, solve, Mat, Rref};
pub use subspace::Subspace;
