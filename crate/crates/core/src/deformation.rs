//! Linear and formal deformations of the product and of relative
//! Rota-Baxter operators, checked order by order at a finite truncation.
//!
//! A series of order `k` has coefficients `0..=k`; products of two such
//! series vanish beyond order `2k`, so every check runs over `s ≤ 2k`.

use serde::Serialize;

use crate::algebra::{unit, BilinearMap, HomAlgebra};
use crate::cohomology::CochainComplex;
use crate::derivation::{derivation_space, map_to_coords};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar, Vector};
use crate::representation::{adjoint_rep, Representation};
use crate::rotabaxter::{induced_algebra, induced_rep, induced_value, verify_rb, RBOperator};

/// `μ_t = μ_0 + μ_1 t + … + μ_k t^k` with `μ_0` the algebra's product.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FormalProductSeries {
    algebra: HomAlgebra,
    coeffs: Vec<BilinearMap>,
}

impl FormalProductSeries {
    /// Builds the series from its full coefficient list `[μ_0, …, μ_k]`.
    pub fn new(algebra: HomAlgebra, coeffs: Vec<BilinearMap>) -> Result<Self> {
        let Some(first) = coeffs.first() else {
            return Err(Error::InvalidSeries("empty coefficient list".into()));
        };
        if first != algebra.product() {
            return Err(Error::InvalidSeries("mu_0 differs from the algebra's product".into()));
        }
        let n = algebra.dim();
        for (i, m) in coeffs.iter().enumerate() {
            if m.dim_in() != n || m.dim_out() != n {
                return Err(Error::InvalidSeries(format!("mu_{i} has the wrong dimensions")));
            }
            if !m.is_symmetric() {
                return Err(Error::InvalidSeries(format!("mu_{i} is not symmetric")));
            }
        }
        Ok(FormalProductSeries { algebra, coeffs })
    }

    /// `μ_0` followed by the given higher coefficients.
    pub fn with_higher(algebra: HomAlgebra, higher: Vec<BilinearMap>) -> Result<Self> {
        let mut coeffs = vec![algebra.product().clone()];
        coeffs.extend(higher);
        FormalProductSeries::new(algebra, coeffs)
    }

    /// The series with every coefficient equal to the product.
    pub fn constant(algebra: HomAlgebra, order: usize) -> Self {
        let coeffs = vec![algebra.product().clone(); order + 1];
        FormalProductSeries { algebra, coeffs }
    }

    pub fn algebra(&self) -> &HomAlgebra {
        &self.algebra
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BilinearMap] {
        &self.coeffs
    }

    /// `μ_i`, or `None` beyond the order.
    pub fn coeff(&self, i: usize) -> Option<&BilinearMap> {
        self.coeffs.get(i)
    }
}

/// `φ_t = φ_0 + φ_1 t + … + φ_k t^k`, also used for operator series `T_t`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FormalMapSeries {
    coeffs: Vec<Matrix>,
}

impl FormalMapSeries {
    pub fn new(coeffs: Vec<Matrix>) -> Result<Self> {
        let Some(first) = coeffs.first() else {
            return Err(Error::InvalidSeries("empty coefficient list".into()));
        };
        let shape = (first.rows(), first.cols());
        if coeffs.iter().any(|m| (m.rows(), m.cols()) != shape) {
            return Err(Error::InvalidSeries("coefficients differ in shape".into()));
        }
        Ok(FormalMapSeries { coeffs })
    }

    /// `Id + tN`.
    pub fn identity_plus(n: &Matrix) -> Self {
        FormalMapSeries {
            coeffs: vec![Matrix::identity(n.rows()), n.clone()],
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Matrix] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Option<&Matrix> {
        self.coeffs.get(i)
    }
}

fn add_into(acc: &mut [Scalar], v: &[Scalar]) {
    for (a, b) in acc.iter_mut().zip(v) {
        *a += b;
    }
}

fn sub_into(acc: &mut [Scalar], v: &[Scalar]) {
    for (a, b) in acc.iter_mut().zip(v) {
        *a -= b;
    }
}

fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `↺ outer(inner(x,y), α z)` on basis vectors.
fn cyclic_term(a: &HomAlgebra, outer: &BilinearMap, inner: &BilinearMap, t: (usize, usize, usize)) -> Vector {
    let (i, j, k) = t;
    let mut acc = vec![Scalar::zero(); a.dim()];
    for (x, y, z) in [(i, j, k), (j, k, i), (k, i, j)] {
        add_into(&mut acc, &outer.apply(inner.value(x, y), &a.alpha().col(z)));
    }
    acc
}

fn sorted_triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |i| (i..n).flat_map(move |j| (j..n).map(move |k| (i, j, k))))
}

/// `d²ψ = 0` in the α^{−1}-adjoint complex.
fn d2_closed(a: &HomAlgebra, psi: &BilinearMap) -> Result<bool> {
    let r = adjoint_rep(a, -1)?;
    let d = CochainComplex::new(&r).apply_d(2, &psi.to_cochain())?;
    Ok(is_zero(&d))
}

/// Result of [`linear_mult_deformation_check`].
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct LinearDeformationReport {
    /// `ψ(αx, αy) = αψ(x, y)`.
    pub defor4a: bool,
    /// `ψ` is symmetric.
    pub defor4b: bool,
    /// `↺ ψ(ψ(x,y), αz) = 0`.
    pub defor5: bool,
    /// `↺ (ψ(x,y)∗αz + ψ(x∗y, αz)) = 0`.
    pub defor6: bool,
    pub generator: bool,
    /// `d²ψ = 0` for the α^{−1}-adjoint representation.
    pub d2_closed: bool,
    /// `defor6 ⟺ d²ψ = 0`; absent when ψ is not symmetric.
    pub bridge_holds: Option<bool>,
}

/// Whether `μ + tψ` is a Hom-Jacobi-Jordan product for every `t`.
pub fn linear_mult_deformation_check(a: &HomAlgebra, psi: &BilinearMap) -> Result<LinearDeformationReport> {
    if !a.is_regular() {
        return Err(Error::SingularTwist);
    }
    let n = a.dim();
    if psi.dim_in() != n || psi.dim_out() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: psi.dim_in(),
        });
    }
    let alpha = a.alpha();
    let defor4a = psi.pre_compose(alpha, alpha) == psi.post_compose(alpha);
    let defor4b = psi.is_symmetric();
    let all_triples = || (0..n).flat_map(move |i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))));
    let defor5 = all_triples().all(|t| is_zero(&cyclic_term(a, psi, psi, t)));
    let defor6 = all_triples().all(|t| {
        let mut r = cyclic_term(a, a.product(), psi, t);
        add_into(&mut r, &cyclic_term(a, psi, a.product(), t));
        is_zero(&r)
    });
    let d2 = d2_closed(a, psi)?;
    Ok(LinearDeformationReport {
        defor4a,
        defor4b,
        defor5,
        defor6,
        generator: defor4a && defor4b && defor5 && defor6,
        d2_closed: d2,
        bridge_holds: defor4b.then_some(defor6 == d2),
    })
}

/// A failing basis triple at some order.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TripleFailure {
    pub order: usize,
    pub triple: (usize, usize, usize),
    pub residual: Vector,
}

/// Result of [`formal_deformation_check`].
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct FormalDeformationReport {
    pub order: usize,
    /// Pass flag per order `s = 0..=2k`.
    pub per_order: Vec<bool>,
    pub passes: bool,
    /// First failing order and its lexicographically first sorted triple.
    pub first_failure: Option<TripleFailure>,
    /// All failing sorted triples at the first failing order.
    pub violations: Vec<TripleFailure>,
    /// `d²μ_1 = 0` in the α^{−1}-adjoint complex, computed when orders 0 and 1
    /// pass and α is invertible.
    pub order_one_cocycle: Option<bool>,
}

fn order_residual(s: &FormalProductSeries, order: usize, t: (usize, usize, usize)) -> Vector {
    let a = &s.algebra;
    let mut acc = vec![Scalar::zero(); a.dim()];
    for i in 0..=order {
        if let (Some(outer), Some(inner)) = (s.coeff(i), s.coeff(order - i)) {
            add_into(&mut acc, &cyclic_term(a, outer, inner, t));
        }
    }
    acc
}

/// Evaluates `↺ Σ_i μ_i(μ_{s−i}(x,y), αz)` for every order up to `2k`.
pub fn formal_deformation_check(s: &FormalProductSeries) -> Result<FormalDeformationReport> {
    let k = s.order();
    let n = s.algebra.dim();
    let mut per_order = Vec::with_capacity(2 * k + 1);
    let mut violations = Vec::new();
    for order in 0..=2 * k {
        let failures: Vec<TripleFailure> = sorted_triples(n)
            .filter_map(|t| {
                let r = order_residual(s, order, t);
                (!is_zero(&r)).then_some(TripleFailure {
                    order,
                    triple: t,
                    residual: r,
                })
            })
            .collect();
        per_order.push(failures.is_empty());
        if violations.is_empty() {
            violations = failures;
        }
    }
    let order_one_cocycle = match s.coeff(1) {
        Some(mu1) if per_order[0] && per_order[1] && s.algebra.is_regular() => Some(d2_closed(&s.algebra, mu1)?),
        _ => None,
    };
    Ok(FormalDeformationReport {
        order: k,
        passes: per_order.iter().all(|&b| b),
        per_order,
        first_failure: violations.first().cloned(),
        violations,
        order_one_cocycle,
    })
}

/// The explicit equations for `φ_t = Id + tN` between two linear deformations
/// `μ + tψ_2 → μ + tψ_1`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TrivialSystem {
    /// `Nα = αN`.
    pub commutes: bool,
    /// `ψ_2 − ψ_1 = x∗Ny + Nx∗y − N(x∗y)`.
    pub order1: bool,
    /// `ψ_1(x,Ny) + ψ_1(Nx,y) = N(ψ_2(x,y)) − Nx∗Ny`.
    pub order2: bool,
    /// `ψ_1(Nx,Ny) = 0`.
    pub order3: bool,
}

impl TrivialSystem {
    pub fn all_hold(&self) -> bool {
        self.commutes && self.order1 && self.order2 && self.order3
    }
}

/// Result of [`equivalence_check`].
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct EquivalenceReport {
    /// Highest order at which a term can be nonzero.
    pub truncation: usize,
    /// `φ_i α = α φ_i` for every coefficient.
    pub commutes_with_alpha: bool,
    pub per_order: Vec<bool>,
    pub first_failure: Option<(usize, (usize, usize))>,
    pub equivalent: bool,
    /// `μ_1 − μ′_1 = δ¹φ_1` in the α^{−1}-adjoint complex; computed when
    /// orders 0 and 1 pass and α is invertible.
    pub order_one_delta: Option<bool>,
    /// `μ′_1 − μ_1 ∈ B²` of the α^{−1}-adjoint complex, under the same conditions.
    pub cohomologous: Option<bool>,
    /// Present when both series are linear and `φ_t = Id + tN`.
    pub trivial_system: Option<TrivialSystem>,
    /// The explicit system and the per-order check give the same verdict.
    pub trivial_system_agrees: Option<bool>,
}

fn trivial_system(a: &HomAlgebra, psi2: &BilinearMap, psi1: &BilinearMap, n: &Matrix) -> TrivialSystem {
    let d = a.dim();
    let commutes = n.mul(a.alpha()) == a.alpha().mul(n);
    let (mut order1, mut order2, mut order3) = (true, true, true);
    for x in 0..d {
        for y in 0..d {
            let (ex, ey) = (unit(d, x), unit(d, y));
            let (nx, ny) = (n.col(x), n.col(y));
            let mut e1 = psi2.value(x, y).to_vec();
            sub_into(&mut e1, psi1.value(x, y));
            sub_into(&mut e1, &a.mul(&ex, &ny));
            sub_into(&mut e1, &a.mul(&nx, &ey));
            add_into(&mut e1, &n.apply(a.mul_basis(x, y)));
            order1 &= is_zero(&e1);

            let mut e2 = psi1.apply(&ex, &ny);
            add_into(&mut e2, &psi1.apply(&nx, &ey));
            sub_into(&mut e2, &n.apply(psi2.value(x, y)));
            add_into(&mut e2, &a.mul(&nx, &ny));
            order2 &= is_zero(&e2);

            order3 &= is_zero(&psi1.apply(&nx, &ny));
        }
    }
    TrivialSystem {
        commutes,
        order1,
        order2,
        order3,
    }
}

/// Checks that `φ_t` maps `(A, μ_t)` to `(A, μ′_t)`, i.e.
/// `φ_t(μ_t(x,y)) = μ′_t(φ_t x, φ_t y)`, order by order.
pub fn equivalence_check(
    s1: &FormalProductSeries,
    s2: &FormalProductSeries,
    phi: &FormalMapSeries,
) -> Result<EquivalenceReport> {
    if s1.algebra != s2.algebra {
        return Err(Error::AlgebraMismatch);
    }
    let a = &s1.algebra;
    let n = a.dim();
    if phi.coeffs[0].rows() != n || phi.coeffs[0].cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: phi.coeffs[0].rows(),
        });
    }
    if phi.coeffs[0] != Matrix::identity(n) {
        return Err(Error::InvalidSeries("phi_0 is not the identity".into()));
    }
    let kp = phi.order();
    let truncation = (kp + s1.order()).max(2 * kp + s2.order());
    let commutes_with_alpha = phi.coeffs.iter().all(|m| m.mul(a.alpha()) == a.alpha().mul(m));

    let mut per_order = Vec::with_capacity(truncation + 1);
    let mut first_failure = None;
    for s in 0..=truncation {
        let mut ok = true;
        for x in 0..n {
            for y in 0..n {
                let mut acc = vec![Scalar::zero(); n];
                for i in 0..=s.min(kp) {
                    let pi = &phi.coeffs[i];
                    if let Some(mu) = s1.coeff(s - i) {
                        add_into(&mut acc, &pi.apply(mu.value(x, y)));
                    }
                    for j in 0..=(s - i) {
                        let (Some(mu2), Some(pk)) = (s2.coeff(j), phi.coeff(s - i - j)) else {
                            continue;
                        };
                        sub_into(&mut acc, &mu2.apply(&pi.col(x), &pk.col(y)));
                    }
                }
                if !is_zero(&acc) {
                    ok = false;
                    first_failure.get_or_insert((s, (x, y)));
                }
            }
        }
        per_order.push(ok);
    }

    let low_orders_pass = per_order.len() > 1 && per_order[0] && per_order[1];
    let (order_one_delta, cohomologous) = if low_orders_pass && a.is_regular() {
        let zero = BilinearMap::zero(n, n);
        let m1 = s1.coeff(1).unwrap_or(&zero);
        let m2 = s2.coeff(1).unwrap_or(&zero);
        let phi1 = phi.coeff(1).cloned().unwrap_or_else(|| Matrix::zeros(n, n));
        let r = adjoint_rep(a, -1)?;
        let cx = CochainComplex::new(&r);
        let delta = cx.apply_delta(1, &map_to_coords(&phi1))?;
        let diff = m1.sub(m2).to_cochain();
        let b2 = cx.coboundaries(2)?;
        (Some(delta == diff), Some(b2.contains(&m2.sub(m1).to_cochain())))
    } else {
        (None, None)
    };

    let equivalent = commutes_with_alpha && per_order.iter().all(|&b| b);
    let (trivial, agrees) = if kp == 1 && s1.order() <= 1 && s2.order() <= 1 {
        let zero = BilinearMap::zero(n, n);
        let psi2 = s1.coeff(1).unwrap_or(&zero);
        let psi1 = s2.coeff(1).unwrap_or(&zero);
        let sys = trivial_system(a, psi2, psi1, &phi.coeffs[1]);
        let agrees = sys.all_hold() == equivalent;
        (Some(sys), Some(agrees))
    } else {
        (None, None)
    };

    Ok(EquivalenceReport {
        truncation,
        commutes_with_alpha,
        per_order,
        first_failure,
        equivalent,
        order_one_delta,
        cohomologous,
        trivial_system: trivial,
        trivial_system_agrees: agrees,
    })
}

/// Result of [`rigidity_probe`].
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RigidityReport {
    pub dim_c: usize,
    pub dim_z: usize,
    pub dim_b: usize,
    pub dim_h: Option<usize>,
    /// `H² = 0`, which suffices for every formal deformation to be trivial.
    pub rigid_sufficient: bool,
    pub warnings: Vec<String>,
}

/// Second cohomology of the α^{−1}-adjoint representation.
pub fn rigidity_probe(a: &HomAlgebra) -> Result<RigidityReport> {
    if !a.is_regular() {
        return Err(Error::SingularTwist);
    }
    let r = adjoint_rep(a, -1)?;
    let h = CochainComplex::new(&r).cohomology(2)?;
    Ok(RigidityReport {
        dim_c: h.dim_c,
        dim_z: h.dim_z,
        dim_b: h.dim_b,
        dim_h: h.dim_h,
        rigid_sufficient: h.dim_h == Some(0),
        warnings: h.warnings,
    })
}

/// Result of [`rb_formal_deformation_check`].
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RBFormalReport {
    pub order: usize,
    /// `T_i φ = α T_i` per coefficient.
    pub twist_per_coeff: Vec<bool>,
    pub twist_witness: Option<usize>,
    /// Quadratic identity per order `s = 0..=2k`.
    pub per_order: Vec<bool>,
    pub first_failure: Option<(usize, (usize, usize))>,
    pub passes: bool,
    /// `T_1` is a φ⁰-derivation of `(V, ∗_{T_0}, φ)` with values in `(A, ρ_{T_0}, α)`;
    /// computed when orders 0 and 1 pass and `T_1` commutes with the twists.
    pub order_one_derivation: Option<bool>,
}

/// Checks `T_t = T_0 + T_1 t + …` against the Rota-Baxter equations order by order.
pub fn rb_formal_deformation_check(rep: &Representation, ts: &FormalMapSeries) -> Result<RBFormalReport> {
    let op = RBOperator::new(rep.clone(), ts.coeffs[0].clone())?;
    if !verify_rb(&op).all_hold() {
        return Err(Error::NotRotaBaxter);
    }
    let a = rep.algebra();
    let dv = rep.dim();
    let k = ts.order();
    let twist_per_coeff: Vec<bool> = ts
        .coeffs
        .iter()
        .map(|t| t.mul(rep.phi()) == a.alpha().mul(t))
        .collect();
    let twist_witness = twist_per_coeff.iter().position(|&b| !b);

    let mut per_order = Vec::with_capacity(2 * k + 1);
    let mut first_failure = None;
    for s in 0..=2 * k {
        let mut ok = true;
        for u in 0..dv {
            for v in 0..dv {
                let mut acc = vec![Scalar::zero(); a.dim()];
                for i in 0..=s {
                    let (Some(ti), Some(tj)) = (ts.coeff(i), ts.coeff(s - i)) else {
                        continue;
                    };
                    add_into(&mut acc, &a.mul(&ti.col(u), &tj.col(v)));
                    sub_into(&mut acc, &ti.apply(&induced_value(rep, tj, u, v)));
                }
                if !is_zero(&acc) {
                    ok = false;
                    first_failure.get_or_insert((s, (u, v)));
                }
            }
        }
        per_order.push(ok);
    }

    let order_one_derivation = match ts.coeff(1) {
        Some(t1) if per_order[0] && per_order[1] && twist_per_coeff[1] => {
            let ind = induced_rep(&op)?;
            Some(derivation_space(&ind, 0, false)?.contains(&map_to_coords(t1)))
        }
        _ => None,
    };
    Ok(RBFormalReport {
        order: k,
        passes: twist_witness.is_none() && per_order.iter().all(|&b| b),
        twist_per_coeff,
        twist_witness,
        per_order,
        first_failure,
        order_one_derivation,
    })
}

/// `μ_{T_t}(u,v) = Σ (ρ(T_i u)v + ρ(T_i v)u) t^i`, a formal deformation of `(V, ∗_{T_0}, φ)`.
pub fn induced_formal_deformation(rep: &Representation, ts: &FormalMapSeries) -> Result<FormalProductSeries> {
    if !rb_formal_deformation_check(rep, ts)?.passes {
        return Err(Error::InvalidSeries("operator series fails the Rota-Baxter equations".into()));
    }
    let op = RBOperator::new(rep.clone(), ts.coeffs[0].clone())?;
    let algebra = induced_algebra(&op)?;
    let dv = rep.dim();
    let coeffs = ts
        .coeffs
        .iter()
        .map(|t| BilinearMap::from_fn(dv, dv, |u, v| induced_value(rep, t, u, v)))
        .collect();
    FormalProductSeries::new(algebra, coeffs)
}
