//! Exact linear algebra over ℚ.
//!
//! Every space-valued answer in the crate (derivation spaces, cocycles,
//! coboundaries, annihilators) is a [`Subspace`] in canonical reduced
//! row-echelon form, so equality of spaces is structural equality.

mod matrix;
mod scalar;
mod subspace;

pub use matrix::{rank, rref, Matrix, Vector};
pub use scalar::Scalar;
pub use subspace::{image, nullspace, quotient_basis, Subspace};
