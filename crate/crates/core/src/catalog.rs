//! Small named algebras used throughout tests, fixtures and documentation.

use crate::algebra::{BilinearMap, HomAlgebra};
use crate::exactlin::{Matrix, Scalar};

fn product(dim: usize, entries: &[(usize, usize, &[i64])]) -> BilinearMap {
    let mut m = BilinearMap::zero(dim, dim);
    for &(i, j, value) in entries {
        for (k, &c) in value.iter().enumerate() {
            m.set(i, j, k, Scalar::from_int(c));
            m.set(j, i, k, Scalar::from_int(c));
        }
    }
    m
}

/// Two-dimensional: `e1∗e1 = e2`, other products zero, `α(e1) = e1+e2`, `α(e2) = e2`.
pub fn alg2() -> HomAlgebra {
    HomAlgebra::with_default_labels(
        product(2, &[(0, 0, &[0, 1])]),
        Matrix::from_i64(&[&[1, 0], &[1, 1]]),
    )
    .expect("alg2 is well formed")
}

/// Three-dimensional: `e2∗e2 = e3`, `e2∗e3 = 2e1`, `e3∗e3 = 2e3`, `α = diag(1,2,2)`.
///
/// Fails multiplicativity and the Hom-Jacobi identity.
pub fn alg3() -> HomAlgebra {
    HomAlgebra::with_default_labels(
        product(3, &[(1, 1, &[0, 0, 1]), (1, 2, &[2, 0, 0]), (2, 2, &[0, 0, 2])]),
        Matrix::diag(&[Scalar::from_int(1), Scalar::from_int(2), Scalar::from_int(2)]),
    )
    .expect("alg3 is well formed")
}

/// One-dimensional, zero product, `α = Id`.
pub fn abel1() -> HomAlgebra {
    HomAlgebra::with_default_labels(BilinearMap::zero(1, 1), Matrix::identity(1))
        .expect("abel1 is well formed")
}
