//! Exact dense linear algebra over the rationals and prime fields.

mod matrix;
mod subspace;

pub use matrix::{nullspace_basis, nullspace_from_rcf, rcf, support_size, DenseMatrix, RcfResult};
pub use subspace::Subspace;
