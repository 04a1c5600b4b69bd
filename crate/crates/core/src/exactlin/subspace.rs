//! Linear subspaces of ℚⁿ in canonical reduced row-echelon form.

use serde::{Deserialize, Serialize};

use super::matrix::{pivot_columns, rref, Matrix, Vector};
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// A subspace of `ℚ^ambient_dim`, stored as the nonzero rows of an RREF basis.
///
/// Two subspaces are equal exactly when their canonical bases are equal,
/// so the derived `PartialEq` is subspace equality.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::zeros(0, ambient_dim),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(ambient_dim),
        }
    }

    /// Span of the given vectors.
    pub fn span(vectors: &[Vector], ambient_dim: usize) -> Self {
        Self::from_row_matrix(&Matrix::from_rows(vectors.to_vec(), ambient_dim))
    }

    /// Span of the rows of `m`.
    pub fn from_row_matrix(m: &Matrix) -> Self {
        let (r, k) = rref(m);
        let rows = r.to_rows().into_iter().take(k).collect();
        Subspace {
            ambient_dim: m.cols(),
            basis: Matrix::from_rows(rows, m.cols()),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Canonical basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.to_rows()
    }

    fn pivots(&self) -> Vec<usize> {
        pivot_columns(&self.basis, self.dim())
    }

    /// Reduces `v` modulo this subspace: clears every pivot coordinate.
    ///
    /// The result is the canonical representative of `v` in the quotient.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.ambient_dim, "vector length mismatch");
        let mut out = v.to_vec();
        for (row, p) in self.pivots().into_iter().enumerate() {
            let c = out[p].clone();
            if c.is_zero() {
                continue;
            }
            for (j, b) in self.basis.row(row).iter().enumerate() {
                if !b.is_zero() {
                    out[j] -= &c * b;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.ambient_dim == self.ambient_dim
            && other.basis.to_rows().iter().all(|v| self.contains(v))
    }

    /// Orthogonal complement for the standard pairing: the linear functionals
    /// vanishing on this subspace.
    pub fn annihilator(&self) -> Subspace {
        nullspace(&self.basis)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim, "ambient mismatch");
        let constraints = self.annihilator().basis.vstack(&other.annihilator().basis);
        nullspace(&constraints)
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim, "ambient mismatch");
        Self::from_row_matrix(&self.basis.vstack(&other.basis))
    }

    /// Image of this subspace under the linear map `m` (acting on column vectors).
    pub fn map(&self, m: &Matrix) -> Subspace {
        let images: Vec<Vector> = self.basis_vectors().iter().map(|v| m.apply(v)).collect();
        Subspace::span(&images, m.rows())
    }

    /// Coordinates of `v` in the canonical basis, `None` when `v` is outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots().into_iter().map(|p| v[p].clone()).collect())
    }
}

/// Canonical basis of `{v : m·v = 0}`.
pub fn nullspace(m: &Matrix) -> Subspace {
    let cols = m.cols();
    let (r, k) = rref(m);
    let pivots = pivot_columns(&r, k);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let vectors: Vec<Vector> = (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Scalar::zero(); cols];
            v[f] = Scalar::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -&r[(row, f)];
            }
            v
        })
        .collect();
    Subspace::span(&vectors, cols)
}

/// Canonical basis of the column span of `m`.
pub fn image(m: &Matrix) -> Subspace {
    Subspace::from_row_matrix(&m.transpose())
}

/// Representatives of a basis of `z / b`, each reduced modulo `b`.
///
/// Returns `dim z − dim b` vectors in reduced row-echelon order.
pub fn quotient_basis(z: &Subspace, b: &Subspace) -> Result<Vec<Vector>> {
    if z.ambient_dim != b.ambient_dim || !z.contains_subspace(b) {
        return Err(Error::NotASubspace);
    }
    let reduced: Vec<Vector> = z.basis_vectors().iter().map(|v| b.reduce(v)).collect();
    let q = Subspace::span(&reduced, z.ambient_dim);
    debug_assert_eq!(q.dim(), z.dim() - b.dim());
    Ok(q.basis_vectors())
}
