//! Representations `(V, ρ, φ)` of a Hom-algebra.
//!
//! A representation satisfies, for all `x, y` in the algebra,
//! - `φ ρ(x) = ρ(α x) φ`
//! - `ρ(x∗y) φ = −ρ(α x) ρ(y) − ρ(α y) ρ(x)`

use serde::Serialize;

use crate::algebra::HomAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar};

/// A module `V` over a Hom-algebra: one action matrix per basis element and a twist `φ`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Representation {
    algebra: HomAlgebra,
    dim: usize,
    rho: Vec<Matrix>,
    phi: Matrix,
}

impl Representation {
    /// Builds a representation, checking only the shapes.
    pub fn new(algebra: HomAlgebra, rho: Vec<Matrix>, phi: Matrix) -> Result<Self> {
        let dim = phi.rows();
        if !phi.is_square() {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: phi.cols(),
            });
        }
        if rho.len() != algebra.dim() {
            return Err(Error::DimensionMismatch {
                expected: algebra.dim(),
                found: rho.len(),
            });
        }
        if let Some(bad) = rho.iter().find(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: bad.rows(),
            });
        }
        Ok(Representation { algebra, dim, rho, phi })
    }

    pub fn algebra(&self) -> &HomAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Action of the `i`-th basis element.
    pub fn rho(&self, i: usize) -> &Matrix {
        &self.rho[i]
    }

    pub fn rho_all(&self) -> &[Matrix] {
        &self.rho
    }

    pub fn phi(&self) -> &Matrix {
        &self.phi
    }

    /// `ρ(x) = Σ x_i ρ(e_i)`.
    pub fn action(&self, x: &[Scalar]) -> Matrix {
        assert_eq!(x.len(), self.algebra.dim(), "vector length mismatch");
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (c, r) in x.iter().zip(&self.rho) {
            if !c.is_zero() {
                m = m.add(&r.scale(c));
            }
        }
        m
    }

    /// The same module with `ρ` replaced by `−ρ`.
    pub fn negated(&self) -> Representation {
        Representation {
            rho: self.rho.iter().map(Matrix::neg).collect(),
            ..self.clone()
        }
    }
}

/// Result of [`verify_representation`].
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RepresentationReport {
    pub twist_compatible: bool,
    /// First basis index with `φρ(e_i) ≠ ρ(αe_i)φ`.
    pub twist_witness: Option<usize>,
    pub action_identity: bool,
    /// First basis pair in lexicographic order violating the action identity.
    pub action_witness: Option<(usize, usize)>,
}

impl RepresentationReport {
    pub fn all_hold(&self) -> bool {
        self.twist_compatible && self.action_identity
    }
}

pub fn verify_representation(r: &Representation) -> RepresentationReport {
    let a = &r.algebra;
    let n = a.dim();
    let rho_alpha: Vec<Matrix> = (0..n).map(|i| r.action(&a.alpha().col(i))).collect();

    let twist_witness = (0..n).find(|&i| r.phi.mul(&r.rho[i]) != rho_alpha[i].mul(&r.phi));

    let action_witness = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| {
            let lhs = r.action(a.mul_basis(i, j)).mul(&r.phi);
            let rhs = rho_alpha[i]
                .mul(&r.rho[j])
                .add(&rho_alpha[j].mul(&r.rho[i]))
                .neg();
            lhs != rhs
        });

    RepresentationReport {
        twist_compatible: twist_witness.is_none(),
        twist_witness,
        action_identity: action_witness.is_none(),
        action_witness,
    }
}

/// The α^s-adjoint representation: `ρ(e_i) = L_{α^s e_i}` and `φ = α`.
pub fn adjoint_rep(a: &HomAlgebra, s: i32) -> Result<Representation> {
    let alpha_s = a.alpha_pow(s)?;
    let rho = (0..a.dim()).map(|i| a.left_mul(&alpha_s.col(i))).collect();
    Representation::new(a.clone(), rho, a.alpha().clone())
}

/// One-dimensional representation with `ρ = 0` and `φ = 1`.
pub fn trivial_rep(a: &HomAlgebra) -> Representation {
    let rho = vec![Matrix::zeros(1, 1); a.dim()];
    Representation::new(a.clone(), rho, Matrix::identity(1)).expect("trivial shapes")
}

/// `(V₁ ⊕ V₂, ρ₁ ⊕ ρ₂, φ₁ ⊕ φ₂)`.
pub fn direct_sum_rep(r1: &Representation, r2: &Representation) -> Result<Representation> {
    if r1.algebra != r2.algebra {
        return Err(Error::AlgebraMismatch);
    }
    let rho = r1.rho.iter().zip(&r2.rho).map(|(a, b)| a.block_diag(b)).collect();
    Representation::new(r1.algebra.clone(), rho, r1.phi.block_diag(&r2.phi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{abel1, alg2, alg3};

    #[test]
    fn adjoint_of_alg2() {
        let r = adjoint_rep(&alg2(), 0).unwrap();
        assert_eq!(r.rho(0), &Matrix::from_i64(&[&[0, 0], &[1, 0]]));
        assert!(r.rho(1).is_zero());
        assert_eq!(r.phi(), alg2().alpha());
        assert!(verify_representation(&r).all_hold());
        assert_eq!(adjoint_rep(&alg2(), -1).unwrap(), r);
    }

    #[test]
    fn adjoint_of_abel1_is_zero() {
        for s in [-2, 0, 3] {
            let r = adjoint_rep(&abel1(), s).unwrap();
            assert!(r.rho(0).is_zero());
        }
    }

    #[test]
    fn negative_power_needs_invertible_twist() {
        use crate::algebra::BilinearMap;
        let a = HomAlgebra::with_default_labels(BilinearMap::zero(1, 1), Matrix::zeros(1, 1)).unwrap();
        assert_eq!(adjoint_rep(&a, -1), Err(Error::SingularTwist));
        assert!(adjoint_rep(&a, 2).is_ok());
    }

    #[test]
    fn trivial_reps() {
        let r = trivial_rep(&alg2());
        assert_eq!(r.dim(), 1);
        assert_eq!(r.phi(), &Matrix::identity(1));
        assert!(verify_representation(&r).all_hold());
        assert!(verify_representation(&trivial_rep(&alg3())).all_hold());
    }

    #[test]
    fn flipped_sign_convention_fails_at_e1_e1() {
        // A representation of alg2 whose quadratic terms do not vanish.
        let rho = vec![
            Matrix::from_i64(&[&[0, 0, 0], &[-1, 0, 0], &[-1, -1, 0]]),
            Matrix::from_i64(&[&[0, 0, 0], &[0, 0, 0], &[-1, 0, 0]]),
        ];
        let phi = Matrix::from_i64(&[&[2, 0, 0], &[-2, 2, 0], &[1, 0, 2]]);
        let r = Representation::new(alg2(), rho, phi).unwrap();
        assert!(verify_representation(&r).all_hold());
        let flipped = verify_representation(&r.negated());
        assert!(flipped.twist_compatible);
        assert_eq!(flipped.action_witness, Some((0, 0)));
    }

    #[test]
    fn direct_sums() {
        let a = alg2();
        let t = trivial_rep(&a);
        let tt = direct_sum_rep(&t, &t).unwrap();
        assert_eq!(tt.phi(), &Matrix::identity(2));
        assert!(tt.rho(0).is_zero());
        let mixed = direct_sum_rep(&adjoint_rep(&a, 0).unwrap(), &t).unwrap();
        assert_eq!(mixed.dim(), 3);
        assert!(verify_representation(&mixed).all_hold());
        assert_eq!(direct_sum_rep(&t, &trivial_rep(&abel1())), Err(Error::AlgebraMismatch));
    }
}
