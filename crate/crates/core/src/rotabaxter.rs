//! Relative Rota-Baxter operators `T : V → A` with respect to a representation.
//!
//! `T` is a relative Rota-Baxter operator when `Tφ = αT` and
//! `T(u) ∗ T(v) = T(ρ(Tu)v + ρ(Tv)u)`. It induces a product
//! `u ∗_T v = ρ(Tu)v + ρ(Tv)u` on `V` and a representation
//! `ρ_T(u)x = T(u)∗x − T(ρ(x)u)` of `(V, ∗_T, φ)` on `A`.

use serde::Serialize;

use crate::algebra::{BilinearMap, HomAlgebra};
use crate::cohomology::{CochainComplex, CohomologyReport};
use crate::derivation::{derivation_space, map_to_coords};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar, Vector};
use crate::representation::{adjoint_rep, Representation};

/// A linear map `V → A`, stored as a `dim A × dim V` matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RBOperator {
    rep: Representation,
    t: Matrix,
}

impl RBOperator {
    pub fn new(rep: Representation, t: Matrix) -> Result<Self> {
        let (da, dv) = (rep.algebra().dim(), rep.dim());
        if t.rows() != da || t.cols() != dv {
            return Err(Error::DimensionMismatch {
                expected: da * dv,
                found: t.rows() * t.cols(),
            });
        }
        Ok(RBOperator { rep, t })
    }

    /// An operator on the algebra itself, relative to the adjoint representation.
    pub fn on_algebra(a: &HomAlgebra, t: Matrix) -> Result<Self> {
        RBOperator::new(adjoint_rep(a, 0)?, t)
    }

    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    pub fn matrix(&self) -> &Matrix {
        &self.t
    }

    fn with_matrix(&self, t: Matrix) -> RBOperator {
        RBOperator {
            rep: self.rep.clone(),
            t,
        }
    }
}

/// A pair `(φ_A, φ_V)` of an algebra endomorphism and a module map.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RBMorphism {
    pub phi_a: Matrix,
    pub phi_v: Matrix,
}

impl RBMorphism {
    pub fn identity(op: &RBOperator) -> Self {
        RBMorphism {
            phi_a: Matrix::identity(op.rep.algebra().dim()),
            phi_v: Matrix::identity(op.rep.dim()),
        }
    }
}

/// Result of [`verify_rb`].
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RBReport {
    pub twist_compatible: bool,
    /// First basis index `u` of `V` with `Tφ(u) ≠ αT(u)`.
    pub twist_witness: Option<usize>,
    pub rota_baxter_identity: bool,
    /// First basis pair in lexicographic order violating the Rota-Baxter identity.
    pub identity_witness: Option<(usize, usize)>,
}

impl RBReport {
    pub fn all_hold(&self) -> bool {
        self.twist_compatible && self.rota_baxter_identity
    }
}

/// `ρ(Tu)v + ρ(Tv)u` on basis vectors, for a matrix `t : V → A`.
pub(crate) fn induced_value(rep: &Representation, t: &Matrix, u: usize, v: usize) -> Vector {
    let tu = rep.action(&t.col(u));
    let tv = rep.action(&t.col(v));
    tu.col(v).iter().zip(tv.col(u)).map(|(x, y)| x + y).collect()
}

pub fn verify_rb(op: &RBOperator) -> RBReport {
    let (rep, t) = (&op.rep, &op.t);
    let a = rep.algebra();
    let dv = rep.dim();
    let lhs = t.mul(rep.phi());
    let rhs = a.alpha().mul(t);
    let twist_witness = (0..dv).find(|&u| lhs.col(u) != rhs.col(u));
    let identity_witness = (0..dv)
        .flat_map(|u| (0..dv).map(move |v| (u, v)))
        .find(|&(u, v)| a.mul(&t.col(u), &t.col(v)) != t.apply(&induced_value(rep, t, u, v)));
    RBReport {
        twist_compatible: twist_witness.is_none(),
        twist_witness,
        rota_baxter_identity: identity_witness.is_none(),
        identity_witness,
    }
}

fn v_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("v{i}")).collect()
}

fn induced_algebra_unchecked(op: &RBOperator) -> HomAlgebra {
    let dv = op.rep.dim();
    let product = BilinearMap::from_fn(dv, dv, |u, v| induced_value(&op.rep, &op.t, u, v));
    HomAlgebra::new(v_labels(dv), product, op.rep.phi().clone()).expect("induced product is symmetric")
}

fn induced_rep_unchecked(op: &RBOperator) -> Representation {
    let (rep, t) = (&op.rep, &op.t);
    let a = rep.algebra();
    let da = a.dim();
    let rho_t = (0..rep.dim())
        .map(|u| {
            let tu = t.col(u);
            let cols: Vec<Vector> = (0..da)
                .map(|x| {
                    let first = a.mul(&tu, &crate::algebra::unit(da, x));
                    let second = t.apply(&rep.rho(x).col(u));
                    first.iter().zip(&second).map(|(p, q)| p - q).collect()
                })
                .collect();
            Matrix::from_cols(&cols, da)
        })
        .collect();
    Representation::new(induced_algebra_unchecked(op), rho_t, a.alpha().clone()).expect("induced shapes")
}

/// `(V, ∗_T, φ)`.
pub fn induced_algebra(op: &RBOperator) -> Result<HomAlgebra> {
    if !verify_rb(op).all_hold() {
        return Err(Error::NotRotaBaxter);
    }
    Ok(induced_algebra_unchecked(op))
}

/// `(A, ρ_T, α)` as a representation of `(V, ∗_T, φ)`.
pub fn induced_rep(op: &RBOperator) -> Result<Representation> {
    if !verify_rb(op).all_hold() {
        return Err(Error::NotRotaBaxter);
    }
    Ok(induced_rep_unchecked(op))
}

/// Cohomology of `(V, ∗_T, φ)` with coefficients in `(A, ρ_T, α)`.
pub fn rb_cohomology(op: &RBOperator, n: usize) -> Result<CohomologyReport> {
    rb_cohomology_with_cap(op, n, crate::cohomology::DEFAULT_DEGREE_CAP)
}

pub fn rb_cohomology_with_cap(op: &RBOperator, n: usize, cap: usize) -> Result<CohomologyReport> {
    let r = induced_rep(op)?;
    CochainComplex::new(&r).with_cap(cap).cohomology(n)
}

/// Closedness of `f : V → A` in degree 1 of the Rota-Baxter complex, evaluated
/// directly:
/// `α(Tu)∗f(v) + α(Tv)∗f(u) − T(ρ(f(u))φ(v) + ρ(f(v))φ(u)) + f(ρ(Tu)v + ρ(Tv)u) = 0`.
pub fn rb_degree_one_closed(op: &RBOperator, f: &Matrix) -> Result<bool> {
    let (rep, t) = (&op.rep, &op.t);
    let a = rep.algebra();
    let dv = rep.dim();
    if f.rows() != a.dim() || f.cols() != dv {
        return Err(Error::DimensionMismatch {
            expected: a.dim() * dv,
            found: f.rows() * f.cols(),
        });
    }
    let atu: Vec<Vector> = (0..dv).map(|u| a.apply_alpha(&t.col(u))).collect();
    let phi_cols: Vec<Vector> = (0..dv).map(|u| rep.phi().col(u)).collect();
    for u in 0..dv {
        for v in 0..dv {
            let fu = f.col(u);
            let fv = f.col(v);
            let s1 = a.mul(&atu[u], &fv);
            let s2 = a.mul(&atu[v], &fu);
            let inner: Vector = rep
                .action(&fu)
                .apply(&phi_cols[v])
                .iter()
                .zip(rep.action(&fv).apply(&phi_cols[u]))
                .map(|(x, y)| x + y)
                .collect();
            let s3 = t.apply(&inner);
            let s4 = f.apply(&induced_value(rep, t, u, v));
            let zero = (0..a.dim()).all(|k| (&s1[k] + &s2[k] - &s3[k] + &s4[k]).is_zero());
            if !zero {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Result of [`linear_deformation_generator_check`].
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct GeneratorReport {
    /// `Zφ = αZ`.
    pub defor1: bool,
    /// `Z` satisfies the Rota-Baxter identity.
    pub defor2: bool,
    /// The mixed identity coupling `T` and `Z`.
    pub defor3: bool,
    /// `defor1 ∧ defor2 ∧ defor3`.
    pub generator: bool,
    /// `Z` is a φ⁰-derivation of `(V, ∗_T, φ)` with values in `(A, ρ_T, α)`.
    pub is_induced_derivation: bool,
    /// Derivation route: induced derivation and Rota-Baxter operator.
    pub derivation_route: bool,
    /// Both routes give the same verdict, and `defor1 ∧ defor3` matches the derivation test.
    pub routes_agree: bool,
}

/// Whether `T + tZ` is a relative Rota-Baxter operator for every `t`.
pub fn linear_deformation_generator_check(op: &RBOperator, z: &Matrix) -> Result<GeneratorReport> {
    let zop = RBOperator::new(op.rep.clone(), z.clone())?;
    let (rep, t) = (&op.rep, &op.t);
    let a = rep.algebra();
    let dv = rep.dim();
    let zr = verify_rb(&zop);
    let defor1 = zr.twist_compatible;
    let defor2 = zr.rota_baxter_identity;
    let defor3 = (0..dv).all(|u| {
        (0..dv).all(|v| {
            let lhs: Vector = a
                .mul(&t.col(u), &z.col(v))
                .iter()
                .zip(a.mul(&t.col(v), &z.col(u)))
                .map(|(x, y)| x + y)
                .collect();
            let r1 = t.apply(&induced_value(rep, z, u, v));
            let r2 = z.apply(&induced_value(rep, t, u, v));
            lhs.iter().zip(&r1).zip(&r2).all(|((l, x), y)| (l - x - y).is_zero())
        })
    });
    let generator = defor1 && defor2 && defor3;

    let ind = induced_rep_unchecked(op);
    let is_induced_derivation = derivation_space(&ind, 0, false)?.contains(&map_to_coords(z));
    let derivation_route = is_induced_derivation && zr.all_hold();
    Ok(GeneratorReport {
        defor1,
        defor2,
        defor3,
        generator,
        is_induced_derivation,
        derivation_route,
        routes_agree: generator == derivation_route && (defor1 && defor3) == is_induced_derivation,
    })
}

/// `ψ_Z(u,v) = ρ(Zu)v + ρ(Zv)u`, a linear deformation of `(V, ∗_T, φ)`.
pub fn induced_linear_deformation(op: &RBOperator, z: &Matrix) -> Result<BilinearMap> {
    if !linear_deformation_generator_check(op, z)?.generator {
        return Err(Error::NotAGenerator);
    }
    let dv = op.rep.dim();
    Ok(BilinearMap::from_fn(dv, dv, |u, v| induced_value(&op.rep, z, u, v)))
}

/// Result of [`nijenhuis_check`].
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct NijenhuisReport {
    /// `Nα = αN`.
    pub commutes_with_alpha: bool,
    /// `N(u)∗N(v) = N(u ∗_N v)` on all basis pairs.
    pub nijenhuis_identity: bool,
    pub identity_witness: Option<(usize, usize)>,
    pub is_nijenhuis: bool,
    /// Whether `∗_N` equals `δ¹N` in the α^{−1}-adjoint complex; absent when α is singular.
    pub matches_delta: Option<bool>,
    #[serde(skip)]
    pub deformed_product: Option<BilinearMap>,
}

/// `u ∗_N v = N(u)∗v + u∗N(v) − N(u∗v)`.
pub fn nijenhuis_product(a: &HomAlgebra, n: &Matrix) -> BilinearMap {
    let d = a.dim();
    BilinearMap::from_fn(d, d, |i, j| {
        let p = a.mul(&n.col(i), &crate::algebra::unit(d, j));
        let q = a.mul(&crate::algebra::unit(d, i), &n.col(j));
        let r = n.apply(a.mul_basis(i, j));
        p.iter().zip(&q).zip(&r).map(|((x, y), z)| x + y - z).collect()
    })
}

pub fn nijenhuis_check(a: &HomAlgebra, n: &Matrix) -> Result<NijenhuisReport> {
    let d = a.dim();
    if n.rows() != d || n.cols() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: n.rows(),
        });
    }
    let commutes_with_alpha = n.mul(a.alpha()) == a.alpha().mul(n);
    let psi = nijenhuis_product(a, n);
    let identity_witness = (0..d)
        .flat_map(|i| (0..d).map(move |j| (i, j)))
        .find(|&(i, j)| a.mul(&n.col(i), &n.col(j)) != n.apply(psi.value(i, j)));
    let is_nijenhuis = commutes_with_alpha && identity_witness.is_none();
    let matches_delta = if a.is_regular() {
        let r = adjoint_rep(a, -1)?;
        let delta = CochainComplex::new(&r).apply_delta(1, &map_to_coords(n))?;
        Some(delta == psi.to_cochain())
    } else {
        None
    };
    Ok(NijenhuisReport {
        commutes_with_alpha,
        nijenhuis_identity: identity_witness.is_none(),
        identity_witness,
        is_nijenhuis,
        matches_delta,
        deformed_product: is_nijenhuis.then_some(psi),
    })
}

/// Result of [`rb_morphism_check`].
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct MorphismReport {
    /// `φ_A` commutes with α and preserves the product.
    pub algebra_morphism: bool,
    /// `φ_V φ = φ φ_V`.
    pub morp1: bool,
    /// `T φ_V = φ_A T′`.
    pub morp2: bool,
    /// `φ_V ρ(x) = ρ(φ_A x) φ_V`.
    pub morp3: bool,
    pub is_morphism: bool,
    /// For a morphism: `φ_V` maps `(V, ∗_{T′}, φ)` to `(V, ∗_T, φ)` as Hom-algebras.
    pub induced_morphism: Option<bool>,
    /// For an invertible morphism: the inverse pair is a morphism from `T` to `T′`.
    pub inverse_is_morphism: Option<bool>,
}

fn is_algebra_morphism(a: &HomAlgebra, b: &HomAlgebra, m: &Matrix) -> bool {
    if m.mul(a.alpha()) != b.alpha().mul(m) {
        return false;
    }
    let n = a.dim();
    (0..n).all(|i| (0..n).all(|j| m.apply(a.mul_basis(i, j)) == b.mul(&m.col(i), &m.col(j))))
}

fn morphism_conditions(from_op: &RBOperator, to_op: &RBOperator, m: &RBMorphism) -> (bool, bool, bool, bool) {
    let rep = &to_op.rep;
    let a = rep.algebra();
    let algebra_morphism = is_algebra_morphism(a, a, &m.phi_a);
    let morp1 = m.phi_v.mul(rep.phi()) == rep.phi().mul(&m.phi_v);
    let morp2 = to_op.t.mul(&m.phi_v) == m.phi_a.mul(&from_op.t);
    let morp3 = (0..a.dim()).all(|x| m.phi_v.mul(rep.rho(x)) == rep.action(&m.phi_a.col(x)).mul(&m.phi_v));
    (algebra_morphism, morp1, morp2, morp3)
}

/// Checks that `m` is a morphism from `from_op` (`T′`) to `to_op` (`T`).
pub fn rb_morphism_check(from_op: &RBOperator, to_op: &RBOperator, m: &RBMorphism) -> Result<MorphismReport> {
    if from_op.rep != to_op.rep {
        return Err(Error::RepresentationMismatch);
    }
    let (da, dv) = (to_op.rep.algebra().dim(), to_op.rep.dim());
    if m.phi_a.rows() != da || m.phi_a.cols() != da || m.phi_v.rows() != dv || m.phi_v.cols() != dv {
        return Err(Error::DimensionMismatch {
            expected: da * da + dv * dv,
            found: m.phi_a.rows() * m.phi_a.cols() + m.phi_v.rows() * m.phi_v.cols(),
        });
    }
    let (algebra_morphism, morp1, morp2, morp3) = morphism_conditions(from_op, to_op, m);
    let is_morphism = algebra_morphism && morp1 && morp2 && morp3;
    let induced_morphism = is_morphism.then(|| {
        let src = induced_algebra_unchecked(from_op);
        let dst = induced_algebra_unchecked(to_op);
        is_algebra_morphism(&src, &dst, &m.phi_v)
    });
    let inverse_is_morphism = match (is_morphism, m.phi_a.inverse(), m.phi_v.inverse()) {
        (true, Some(phi_a), Some(phi_v)) => {
            let inv = RBMorphism { phi_a, phi_v };
            let (w, x, y, z) = morphism_conditions(to_op, from_op, &inv);
            Some(w && x && y && z)
        }
        _ => None,
    };
    Ok(MorphismReport {
        algebra_morphism,
        morp1,
        morp2,
        morp3,
        is_morphism,
        induced_morphism,
        inverse_is_morphism,
    })
}

/// `T′ = φ_A^{−1} T φ_V`, a relative Rota-Baxter operator when the
/// preconditions on `(φ_A, φ_V)` hold.
pub fn conjugate_rb(op: &RBOperator, m: &RBMorphism) -> Result<RBOperator> {
    let rep = &op.rep;
    let a = rep.algebra();
    let fail = |s: &str| Err(Error::PreconditionFailed(s.to_string()));
    let Some(phi_a_inv) = m.phi_a.inverse() else {
        return fail("phi_A is not invertible");
    };
    if m.phi_v.inverse().is_none() {
        return fail("phi_V is not invertible");
    }
    if !is_algebra_morphism(a, a, &m.phi_a) {
        return fail("phi_A is not an algebra automorphism commuting with alpha");
    }
    if m.phi_v.mul(rep.phi()) != rep.phi().mul(&m.phi_v) {
        return fail("newT1: phi_V phi = phi phi_V");
    }
    let intertwines = (0..a.dim()).all(|x| m.phi_v.mul(rep.rho(x)) == rep.action(&m.phi_a.col(x)).mul(&m.phi_v));
    if !intertwines {
        return fail("newT2: phi_V rho(x) = rho(phi_A x) phi_V");
    }
    Ok(op.with_matrix(phi_a_inv.mul(&op.t).mul(&m.phi_v)))
}

/// Scalar multiple of an operator's matrix, convenient for scaling families.
pub fn scaled(op: &RBOperator, c: &Scalar) -> RBOperator {
    op.with_matrix(op.t.scale(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{default_labels, verify_algebra};
    use crate::catalog::alg2;
    use crate::representation::{trivial_rep, verify_representation};

    fn example() -> RBOperator {
        RBOperator::on_algebra(&alg2(), Matrix::from_i64(&[&[0, 0], &[1, 0]])).unwrap()
    }

    #[test]
    fn verify_examples() {
        let zero = RBOperator::on_algebra(&alg2(), Matrix::zeros(2, 2)).unwrap();
        assert!(verify_rb(&zero).all_hold());
        assert!(verify_rb(&example()).all_hold());
        let id = RBOperator::on_algebra(&alg2(), Matrix::identity(2)).unwrap();
        let r = verify_rb(&id);
        assert!(r.twist_compatible);
        assert_eq!(r.identity_witness, Some((0, 0)));
    }

    #[test]
    fn induced_structures() {
        let op = example();
        let alg = induced_algebra(&op).unwrap();
        assert!(alg.product().is_zero());
        assert_eq!(alg.alpha(), alg2().alpha());
        assert!(verify_algebra(&alg).all_hold());
        let r = induced_rep(&op).unwrap();
        assert!(r.rho_all().iter().all(Matrix::is_zero));
        assert!(verify_representation(&r).all_hold());
        let zero = RBOperator::on_algebra(&alg2(), Matrix::zeros(2, 2)).unwrap();
        assert!(induced_rep(&zero).unwrap().rho_all().iter().all(Matrix::is_zero));
        let id = RBOperator::on_algebra(&alg2(), Matrix::identity(2)).unwrap();
        assert_eq!(induced_algebra(&id), Err(Error::NotRotaBaxter));
    }

    #[test]
    fn rb_h0() {
        let h = rb_cohomology(&example(), 0).unwrap();
        assert_eq!(h.dim_h, Some(1));
        assert_eq!(h.h, vec![vec![Scalar::zero(), Scalar::one()]]);
    }

    #[test]
    fn trivial_rep_zero_operator() {
        let op = RBOperator::new(trivial_rep(&alg2()), Matrix::zeros(2, 1)).unwrap();
        for n in 0..3 {
            let h = rb_cohomology(&op, n).unwrap();
            assert_eq!(h.dim_z, h.dim_c);
            assert_eq!(h.dim_b, 0);
        }
    }

    #[test]
    fn generator_examples() {
        let op = example();
        let zero = linear_deformation_generator_check(&op, &Matrix::zeros(2, 2)).unwrap();
        assert!(zero.generator && zero.routes_agree);
        let same = linear_deformation_generator_check(&op, op.matrix()).unwrap();
        assert!(same.generator && same.routes_agree);
        let zop = RBOperator::on_algebra(&alg2(), Matrix::zeros(2, 2)).unwrap();
        let id = linear_deformation_generator_check(&zop, &Matrix::identity(2)).unwrap();
        assert!(!id.defor2 && !id.generator && id.routes_agree);
        assert!(induced_linear_deformation(&op, op.matrix()).unwrap().is_zero());
        assert!(matches!(
            induced_linear_deformation(&zop, &Matrix::identity(2)),
            Err(Error::NotAGenerator)
        ));
    }

    #[test]
    fn nijenhuis_examples() {
        let a = alg2();
        let zero = nijenhuis_check(&a, &Matrix::zeros(2, 2)).unwrap();
        assert!(zero.is_nijenhuis && zero.deformed_product.unwrap().is_zero());
        let id = nijenhuis_check(&a, &Matrix::identity(2)).unwrap();
        assert!(id.is_nijenhuis);
        assert_eq!(id.deformed_product.as_ref(), Some(a.product()));
        assert_eq!(id.matches_delta, Some(true));
        let n = nijenhuis_check(&a, &Matrix::from_i64(&[&[0, 0], &[1, 0]])).unwrap();
        assert!(n.is_nijenhuis && n.deformed_product.unwrap().is_zero());
        assert_eq!(n.matches_delta, Some(true));
    }

    #[test]
    fn morphism_examples() {
        let op = example();
        let r = rb_morphism_check(&op, &op, &RBMorphism::identity(&op)).unwrap();
        assert!(r.is_morphism);
        assert_eq!(r.induced_morphism, Some(true));
        assert_eq!(r.inverse_is_morphism, Some(true));
        let bad = RBMorphism {
            phi_a: Matrix::identity(2),
            phi_v: Matrix::zeros(2, 2),
        };
        let r = rb_morphism_check(&op, &op, &bad).unwrap();
        assert!(!r.morp2 && !r.is_morphism);
        let other = RBOperator::new(trivial_rep(&alg2()), Matrix::zeros(2, 1)).unwrap();
        assert_eq!(rb_morphism_check(&other, &op, &bad), Err(Error::RepresentationMismatch));
    }

    #[test]
    fn conjugation_examples() {
        let op = example();
        assert_eq!(conjugate_rb(&op, &RBMorphism::identity(&op)).unwrap(), op);
        let alpha = alg2().alpha().clone();
        let m = RBMorphism {
            phi_a: alpha.clone(),
            phi_v: alpha,
        };
        let t2 = conjugate_rb(&op, &m).unwrap();
        assert!(verify_rb(&t2).all_hold());
        assert!(rb_morphism_check(&t2, &op, &m).unwrap().is_morphism);
        let sing = RBMorphism {
            phi_a: Matrix::zeros(2, 2),
            phi_v: Matrix::identity(2),
        };
        assert!(matches!(conjugate_rb(&op, &sing), Err(Error::PreconditionFailed(_))));
    }

    #[test]
    fn degree_one_routes_agree_on_alg2() {
        let op = example();
        let r = induced_rep(&op).unwrap();
        let cx = CochainComplex::new(&r);
        let z = cx.cocycles(1).unwrap();
        for k in 0..4 {
            let mut f = vec![Scalar::zero(); 4];
            f[k] = Scalar::one();
            let m = Matrix::new(2, 2, f.clone()).unwrap();
            let closed = cx.hom_cochains(1).unwrap().contains(&f) && rb_degree_one_closed(&op, &m).unwrap();
            assert_eq!(closed, z.contains(&f));
        }
        assert_eq!(default_labels(1), vec!["e1"]);
    }
}
