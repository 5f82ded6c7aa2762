//! Exact linear algebra: dense matrices, canonical subspaces and quotients.

mod map;
mod matrix;
mod quotient;
pub mod subspace;

pub use map::{intersect, invert_map, kernel, quotient_by, solve_linear, LinearMap, VSpace};
pub use matrix::{Matrix, Rref};
pub use quotient::QuotientSpace;
pub use subspace::{dense_from_sparse, sparse_from_dense, SparseVec, Subspace};
