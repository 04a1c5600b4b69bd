//! α^k-derivations and α^k-antiderivations, with values in a representation.
//!
//! A linear map `D : A → V` is an α^k-(anti)derivation when `D∘α = φ∘D` and
//! `D(u∗v) = ±(ρ(α^k u) D v + ρ(α^k v) D u)`, with `+` for derivations.
//! Maps are encoded as `dim V × dim A` matrices flattened row-major, which is
//! also the coordinate layout of degree-1 cochains.

use serde::Serialize;

use crate::algebra::HomAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{nullspace, Matrix, Scalar, Subspace, Vector};
use crate::representation::{adjoint_rep, Representation};

/// Flattens a `dim V × dim A` matrix into map coordinates.
pub fn map_to_coords(d: &Matrix) -> Vector {
    d.flatten()
}

/// Inverse of [`map_to_coords`].
pub fn coords_to_map(v: &[Scalar], dim_v: usize, dim_a: usize) -> Matrix {
    Matrix::new(dim_v, dim_a, v.to_vec()).expect("coordinate length")
}

fn twist_power(rep: &Representation, k: i32) -> Result<Matrix> {
    if k < 0 && !rep.phi().is_invertible() {
        return Err(Error::SingularTwist);
    }
    rep.algebra().alpha_pow(k)
}

/// The space of α^k-derivations (`anti = false`) or α^k-antiderivations
/// (`anti = true`) with values in `rep`.
///
/// Negative `k` requires both `α` and `φ` to be invertible.
pub fn derivation_space(rep: &Representation, k: i32, anti: bool) -> Result<Subspace> {
    let a = rep.algebra();
    let (na, nv) = (a.dim(), rep.dim());
    let alpha = a.alpha();
    let phi = rep.phi();
    let alpha_k = twist_power(rep, k)?;
    let rho_k: Vec<Matrix> = (0..na).map(|i| rep.action(&alpha_k.col(i))).collect();
    let coord = |r: usize, c: usize| r * na + c;
    let sign = if anti { Scalar::one() } else { -Scalar::one() };

    let mut rows: Vec<Vector> = Vec::new();
    // D α − φ D = 0
    for r in 0..nv {
        for c in 0..na {
            let mut row = vec![Scalar::zero(); nv * na];
            for m in 0..na {
                row[coord(r, m)] += &alpha[(m, c)];
            }
            for m in 0..nv {
                row[coord(m, c)] -= &phi[(r, m)];
            }
            rows.push(row);
        }
    }
    // D(e_i∗e_j) ∓ (ρ(α^k e_i) D e_j + ρ(α^k e_j) D e_i) = 0, for i ≤ j
    for i in 0..na {
        for j in i..na {
            let prod = a.mul_basis(i, j);
            for r in 0..nv {
                let mut row = vec![Scalar::zero(); nv * na];
                for (m, c) in prod.iter().enumerate() {
                    row[coord(r, m)] += c;
                }
                for m in 0..nv {
                    row[coord(m, j)] += &sign * &rho_k[i][(r, m)];
                    row[coord(m, i)] += &sign * &rho_k[j][(r, m)];
                }
                rows.push(row);
            }
        }
    }
    Ok(nullspace(&Matrix::from_rows(rows, nv * na)))
}

/// α^k-(anti)derivations of the algebra itself (values in the adjoint representation).
pub fn algebra_derivation_space(a: &HomAlgebra, k: i32, anti: bool) -> Result<Subspace> {
    derivation_space(&adjoint_rep(a, 0)?, k, anti)
}

/// Whether `d` lies in the corresponding derivation space of `rep`.
pub fn is_derivation(rep: &Representation, d: &Matrix, k: i32, anti: bool) -> Result<bool> {
    if d.rows() != rep.dim() || d.cols() != rep.algebra().dim() {
        return Err(Error::DimensionMismatch {
            expected: rep.dim() * rep.algebra().dim(),
            found: d.rows() * d.cols(),
        });
    }
    Ok(derivation_space(rep, k, anti)?.contains(&map_to_coords(d)))
}

/// Span of the inner maps `v ↦ ρ(α^k v) u` over the φ-fixed vectors `u`.
///
/// Each such map is an α^{k+1}-antiderivation with values in `rep`.
pub fn inner_antiderivation_space(rep: &Representation, k: u32) -> Subspace {
    let a = rep.algebra();
    let (na, nv) = (a.dim(), rep.dim());
    let fixed = nullspace(&rep.phi().sub(&Matrix::identity(nv)));
    let alpha_k = a.alpha().pow(k);
    let rho_k: Vec<Matrix> = (0..na).map(|j| rep.action(&alpha_k.col(j))).collect();
    let maps: Vec<Vector> = fixed
        .basis_vectors()
        .iter()
        .map(|u| {
            let cols: Vec<Vector> = rho_k.iter().map(|r| r.apply(u)).collect();
            map_to_coords(&Matrix::from_cols(&cols, nv))
        })
        .collect();
    Subspace::span(&maps, nv * na)
}

/// Result of [`bracket_classify`].
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct BracketReport {
    /// Twist exponent of the target spaces, `k1 + k2`.
    pub k: i32,
    pub commutator: Matrix,
    /// The space the commutator must land in: antiderivations iff exactly one input is one.
    pub commutator_expected_anti: bool,
    pub commutator_in_der: bool,
    pub commutator_in_ader: bool,
    /// Whether the commutator lies in the expected space.
    pub commutator_inclusion_holds: bool,
    pub anticommutator: Matrix,
    /// `X(u,v) = α^{k2}D1(u) ∗ α^{k1}D2(v) + α^{k1}D2(u) ∗ α^{k2}D1(v)` vanishes on all basis pairs.
    pub cder: bool,
    /// `{D1,D2}(u∗v) = X(u,v)` on all basis pairs.
    pub cantider: bool,
    /// `2{D1,D2}(u∗v) = X(u,v)` on all basis pairs.
    pub cantider_as_printed: bool,
    pub anticommutator_in_der: bool,
    pub anticommutator_in_ader: bool,
}

/// Commutator and anticommutator of two declared (anti)derivations of `a`.
///
/// Membership of the inputs is verified first.
pub fn bracket_classify(
    a: &HomAlgebra,
    d1: &Matrix,
    k1: i32,
    anti1: bool,
    d2: &Matrix,
    k2: i32,
    anti2: bool,
) -> Result<BracketReport> {
    let rep = adjoint_rep(a, 0)?;
    let kind = |anti: bool| if anti { "ADer" } else { "Der" };
    if !is_derivation(&rep, d1, k1, anti1)? {
        return Err(Error::NotAMember(format!("d1 in {}_{}", kind(anti1), k1)));
    }
    if !is_derivation(&rep, d2, k2, anti2)? {
        return Err(Error::NotAMember(format!("d2 in {}_{}", kind(anti2), k2)));
    }
    let k = k1 + k2;
    let der = derivation_space(&rep, k, false)?;
    let ader = derivation_space(&rep, k, true)?;

    let commutator = d1.mul(d2).sub(&d2.mul(d1));
    let anticommutator = d1.mul(d2).add(&d2.mul(d1));
    let commutator_expected_anti = anti1 != anti2;
    let c = map_to_coords(&commutator);
    let (commutator_in_der, commutator_in_ader) = (der.contains(&c), ader.contains(&c));

    let n = a.dim();
    let a1 = a.alpha_pow(k1)?;
    let a2 = a.alpha_pow(k2)?;
    let p = a2.mul(d1); // α^{k2} ∘ D1
    let q = a1.mul(d2); // α^{k1} ∘ D2
    let two = Scalar::from_int(2);
    let (mut cder, mut cantider, mut cantider_as_printed) = (true, true, true);
    for i in 0..n {
        for j in 0..n {
            let x: Vector = a
                .mul(&p.col(i), &q.col(j))
                .iter()
                .zip(a.mul(&q.col(i), &p.col(j)))
                .map(|(s, t)| s + t)
                .collect();
            let lhs = anticommutator.apply(a.mul_basis(i, j));
            cder &= x.iter().all(Scalar::is_zero);
            cantider &= lhs == x;
            cantider_as_printed &= lhs.iter().map(|l| l * &two).collect::<Vector>() == x;
        }
    }
    let ac = map_to_coords(&anticommutator);
    Ok(BracketReport {
        k,
        commutator_inclusion_holds: if commutator_expected_anti {
            commutator_in_ader
        } else {
            commutator_in_der
        },
        commutator,
        commutator_expected_anti,
        commutator_in_der,
        commutator_in_ader,
        cder,
        cantider,
        cantider_as_printed,
        anticommutator_in_der: der.contains(&ac),
        anticommutator_in_ader: ader.contains(&ac),
        anticommutator,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{abel1, alg2, alg3};
    use crate::representation::trivial_rep;

    fn e1_to_e2() -> Matrix {
        Matrix::from_i64(&[&[0, 0], &[1, 0]])
    }

    #[test]
    fn alg2_derivations() {
        let der = algebra_derivation_space(&alg2(), 0, false).unwrap();
        assert_eq!(der.basis_vectors(), vec![map_to_coords(&e1_to_e2())]);
        let ader = algebra_derivation_space(&alg2(), 1, true).unwrap();
        assert_eq!(ader.basis_vectors(), vec![map_to_coords(&e1_to_e2())]);
    }

    #[test]
    fn abel1_everything_is_a_derivation() {
        for k in 0..3 {
            for anti in [false, true] {
                assert_eq!(algebra_derivation_space(&abel1(), k, anti).unwrap(), Subspace::full(1));
            }
        }
    }

    #[test]
    fn negative_power() {
        let a = alg2();
        let s = algebra_derivation_space(&a, -1, true).unwrap();
        assert!(s.dim() <= 2);
    }

    #[test]
    fn inner_antiderivations_vanish_on_examples() {
        let a2 = alg2();
        assert!(inner_antiderivation_space(&adjoint_rep(&a2, 0).unwrap(), 0).is_zero());
        assert!(inner_antiderivation_space(&adjoint_rep(&alg3(), 0).unwrap(), 0).is_zero());
        for k in 0..3 {
            assert!(inner_antiderivation_space(&trivial_rep(&a2), k).is_zero());
        }
    }

    #[test]
    fn brackets_of_nilpotent_derivation() {
        let a = alg2();
        let d = e1_to_e2();
        let r = bracket_classify(&a, &d, 0, false, &d, 0, false).unwrap();
        assert!(r.commutator.is_zero());
        assert!(r.commutator_inclusion_holds);
        assert!(r.anticommutator.is_zero());
        assert!(r.cder && r.cantider);

        let r = bracket_classify(&a, &d, 1, true, &d, 1, true).unwrap();
        assert_eq!(r.k, 2);
        assert!(r.commutator.is_zero() && r.commutator_in_der);
    }

    #[test]
    fn mixed_bracket_on_abel1() {
        let d1 = Matrix::from_i64(&[&[3]]);
        let d2 = Matrix::from_i64(&[&[5]]);
        let r = bracket_classify(&abel1(), &d1, 0, false, &d2, 2, true).unwrap();
        assert!(r.commutator_expected_anti && r.commutator_in_ader);
        assert!(r.cder && r.cantider);
    }

    #[test]
    fn bracket_rejects_non_members() {
        let id = Matrix::identity(2);
        let err = bracket_classify(&alg2(), &id, 0, true, &e1_to_e2(), 0, false).unwrap_err();
        assert!(matches!(err, Error::NotAMember(_)));
    }
}
