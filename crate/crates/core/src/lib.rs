//! Exact computations for finite-dimensional Hom-Jacobi-Jordan algebras.
//!
//! An algebra is given by symmetric structure constants and a twist map α.
//! On top of that the crate provides representations, α^k-derivations and
//! antiderivations, the zigzag cochain complex with its cohomology,
//! relative Rota-Baxter operators, and linear and formal deformations.
//! All arithmetic is over ℚ with arbitrary-precision integers.

pub mod algebra;
pub mod catalog;
pub mod cohomology;
pub mod deformation;
pub mod derivation;
pub mod error;
pub mod exactlin;
pub mod io;
pub mod representation;
pub mod rotabaxter;

pub use error::{Error, Result};
pub use exactlin::{Matrix, Scalar, Subspace, Vector};
