//! Dense matrices, Hermitian eigenproblems, SVD and subspaces.

mod eigen;
mod matrix;
mod subspace;
mod svd;
pub mod vector;

pub use eigen::{hermitian_eigen, reconstruct, spectral_map, HermitianEigen, HERMITIAN_TOL};
pub use matrix::{Field, Matrix, C64, I, ONE, ZERO};
pub use subspace::{
    intersect, top_singular, top_singular_subspace, SubspaceBasis, TopSubspace, INTERSECT_COS,
};
pub use svd::{singular_values, spectral_norm, svd, Svd};
pub(crate) use svd::orthogonalize;

/// Conjugate transpose.
pub fn adjoint(m: &Matrix) -> Matrix {
    m.adjoint()
}
