//! Hom-algebras given by structure constants, their axioms, and the
//! constructions that produce new Hom-Jacobi-Jordan algebras from old ones.
//!
//! Conventions:
//! - `e_i ∗ e_j = Σ_k c[i][j][k] e_k`, with `c` symmetric in `i, j`.
//! - The twist uses column convention: `α(e_j) = Σ_i alpha[i][j] e_i`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{nullspace, Matrix, Scalar, Subspace, Vector};

/// A bilinear map `ℚ^dim_in × ℚ^dim_in → ℚ^dim_out`.
///
/// Forms are the case `dim_out = 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BilinearMap {
    dim_in: usize,
    dim_out: usize,
    coeffs: Vec<Scalar>,
}

impl BilinearMap {
    pub fn zero(dim_in: usize, dim_out: usize) -> Self {
        BilinearMap {
            dim_in,
            dim_out,
            coeffs: vec![Scalar::zero(); dim_in * dim_in * dim_out],
        }
    }

    /// Builds the map whose value on `(e_i, e_j)` is `f(i, j)`.
    pub fn from_fn(dim_in: usize, dim_out: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Self {
        let mut m = BilinearMap::zero(dim_in, dim_out);
        for i in 0..dim_in {
            for j in 0..dim_in {
                let v = f(i, j);
                assert_eq!(v.len(), dim_out, "value length mismatch");
                m.value_mut(i, j).clone_from_slice(&v);
            }
        }
        m
    }

    /// A bilinear form from its Gram matrix `g[i][j] = θ(e_i, e_j)`.
    pub fn form(gram: &Matrix) -> Self {
        assert!(gram.is_square(), "Gram matrix must be square");
        BilinearMap::from_fn(gram.rows(), 1, |i, j| vec![gram[(i, j)].clone()])
    }

    pub fn dim_in(&self) -> usize {
        self.dim_in
    }

    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    pub fn is_form(&self) -> bool {
        self.dim_out == 1
    }

    fn offset(&self, i: usize, j: usize) -> usize {
        (i * self.dim_in + j) * self.dim_out
    }

    /// The value on a pair of basis vectors.
    pub fn value(&self, i: usize, j: usize) -> &[Scalar] {
        let o = self.offset(i, j);
        &self.coeffs[o..o + self.dim_out]
    }

    pub fn value_mut(&mut self, i: usize, j: usize) -> &mut [Scalar] {
        let o = self.offset(i, j);
        &mut self.coeffs[o..o + self.dim_out]
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.value(i, j)[k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, x: Scalar) {
        self.value_mut(i, j)[k] = x;
    }

    /// Evaluates on arbitrary vectors.
    pub fn apply(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        assert_eq!(x.len(), self.dim_in, "left argument length");
        assert_eq!(y.len(), self.dim_in, "right argument length");
        let mut out = vec![Scalar::zero(); self.dim_out];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let w = xi * yj;
                for (o, c) in out.iter_mut().zip(self.value(i, j)) {
                    if !c.is_zero() {
                        *o += &w * c;
                    }
                }
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim_in).all(|i| (0..i).all(|j| self.value(i, j) == self.value(j, i)))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, rhs: &BilinearMap) -> BilinearMap {
        self.check_shape(rhs);
        BilinearMap {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
            ..*self
        }
    }

    pub fn sub(&self, rhs: &BilinearMap) -> BilinearMap {
        self.check_shape(rhs);
        BilinearMap {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
            ..*self
        }
    }

    pub fn scale(&self, c: &Scalar) -> BilinearMap {
        BilinearMap {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
            ..*self
        }
    }

    fn check_shape(&self, rhs: &BilinearMap) {
        assert_eq!((self.dim_in, self.dim_out), (rhs.dim_in, rhs.dim_out), "shape mismatch");
    }

    /// `m ∘ self`, with `m` a `dim_out' × dim_out` matrix.
    pub fn post_compose(&self, m: &Matrix) -> BilinearMap {
        BilinearMap::from_fn(self.dim_in, m.rows(), |i, j| m.apply(self.value(i, j)))
    }

    /// `self ∘ (p ⊗ q)`, with `p`, `q` square matrices on the input space.
    pub fn pre_compose(&self, p: &Matrix, q: &Matrix) -> BilinearMap {
        BilinearMap::from_fn(self.dim_in, self.dim_out, |i, j| self.apply(&p.col(i), &q.col(j)))
    }

    /// Coordinates as a 2-cochain: index `out·d² + i + j·d` (first argument fastest).
    pub fn to_cochain(&self) -> Vector {
        let d = self.dim_in;
        let mut v = vec![Scalar::zero(); self.dim_out * d * d];
        for i in 0..d {
            for j in 0..d {
                for (o, c) in self.value(i, j).iter().enumerate() {
                    v[o * d * d + i + j * d] = c.clone();
                }
            }
        }
        v
    }

    /// Inverse of [`BilinearMap::to_cochain`].
    pub fn from_cochain(v: &[Scalar], dim_in: usize, dim_out: usize) -> Self {
        let d = dim_in;
        assert_eq!(v.len(), dim_out * d * d, "cochain length mismatch");
        BilinearMap::from_fn(d, dim_out, |i, j| (0..dim_out).map(|o| v[o * d * d + i + j * d].clone()).collect())
    }
}

/// A finite-dimensional Hom-algebra `(A, ∗, α)` with a commutative product.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomAlgebra {
    labels: Vec<String>,
    product: BilinearMap,
    alpha: Matrix,
}

/// Default basis labels `e1, …, en`.
pub fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

impl HomAlgebra {
    /// Builds an algebra, rejecting non-symmetric structure constants.
    pub fn new(labels: Vec<String>, product: BilinearMap, alpha: Matrix) -> Result<Self> {
        let n = labels.len();
        if product.dim_in() != n || product.dim_out() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: product.dim_in(),
            });
        }
        if alpha.rows() != n || alpha.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: alpha.rows(),
            });
        }
        for i in 0..n {
            for j in 0..i {
                if product.value(i, j) != product.value(j, i) {
                    return Err(Error::ConflictingProduct {
                        left: labels[j].clone(),
                        right: labels[i].clone(),
                    });
                }
            }
        }
        Ok(HomAlgebra { labels, product, alpha })
    }

    /// Builds an algebra labelled `e1, …, en`.
    pub fn with_default_labels(product: BilinearMap, alpha: Matrix) -> Result<Self> {
        HomAlgebra::new(default_labels(product.dim_in()), product, alpha)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn product(&self) -> &BilinearMap {
        &self.product
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    /// `e_i ∗ e_j`.
    pub fn mul_basis(&self, i: usize, j: usize) -> &[Scalar] {
        self.product.value(i, j)
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.product.apply(x, y)
    }

    pub fn apply_alpha(&self, x: &[Scalar]) -> Vector {
        self.alpha.apply(x)
    }

    /// `α^k`, with negative `k` requiring an invertible twist.
    pub fn alpha_pow(&self, k: i32) -> Result<Matrix> {
        self.alpha.pow_signed(k).ok_or(Error::SingularTwist)
    }

    /// Regular means the twist is invertible.
    pub fn is_regular(&self) -> bool {
        self.alpha.is_invertible()
    }

    /// Matrix of `L_x : y ↦ x ∗ y`.
    pub fn left_mul(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.mul(x, &unit(n, j))).collect();
        Matrix::from_cols(&cols, n)
    }

    pub fn left_mul_basis(&self, i: usize) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.mul_basis(i, j).to_vec()).collect();
        Matrix::from_cols(&cols, n)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// The `i`-th unit vector of `ℚ^n`.
pub fn unit(n: usize, i: usize) -> Vector {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

/// A failing basis triple for the Hom-Jacobi identity.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct JacobiWitness {
    pub triple: (usize, usize, usize),
    pub residual: Vector,
}

/// Result of [`verify_algebra`].
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct AxiomReport {
    pub commutative: bool,
    pub commutative_witness: Option<(usize, usize)>,
    pub multiplicative: bool,
    /// First basis pair in lexicographic order with `α(x∗y) ≠ α(x)∗α(y)`.
    pub multiplicative_witness: Option<(usize, usize)>,
    pub hom_jacobi: bool,
    /// First sorted basis triple in lexicographic order with nonzero Hom-Jacobian.
    pub hom_jacobi_witness: Option<JacobiWitness>,
    /// Every sorted basis triple with nonzero Hom-Jacobian.
    pub hom_jacobi_violations: Vec<JacobiWitness>,
}

impl AxiomReport {
    pub fn all_hold(&self) -> bool {
        self.commutative && self.multiplicative && self.hom_jacobi
    }
}

/// Checks commutativity, multiplicativity and the Hom-Jacobi identity on basis tuples.
pub fn verify_algebra(a: &HomAlgebra) -> AxiomReport {
    let n = a.dim();
    let pairs = || (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)));

    let commutative_witness = pairs().find(|&(i, j)| a.mul_basis(i, j) != a.mul_basis(j, i));

    let alpha_cols: Vec<Vector> = (0..n).map(|j| a.alpha.col(j)).collect();
    let multiplicative_witness = pairs().find(|&(i, j)| {
        a.apply_alpha(a.mul_basis(i, j)) != a.mul(&alpha_cols[i], &alpha_cols[j])
    });

    let mut violations = Vec::new();
    for i in 0..n {
        for j in i..n {
            for k in j..n {
                let r = jacobian_basis(a, &alpha_cols, i, j, k);
                if r.iter().any(|x| !x.is_zero()) {
                    violations.push(JacobiWitness {
                        triple: (i, j, k),
                        residual: r,
                    });
                }
            }
        }
    }

    AxiomReport {
        commutative: commutative_witness.is_none(),
        commutative_witness,
        multiplicative: multiplicative_witness.is_none(),
        multiplicative_witness,
        hom_jacobi: violations.is_empty(),
        hom_jacobi_witness: violations.first().cloned(),
        hom_jacobi_violations: violations,
    }
}

fn jacobian_basis(a: &HomAlgebra, alpha_cols: &[Vector], i: usize, j: usize, k: usize) -> Vector {
    let t1 = a.mul(a.mul_basis(i, j), &alpha_cols[k]);
    let t2 = a.mul(a.mul_basis(j, k), &alpha_cols[i]);
    let t3 = a.mul(a.mul_basis(k, i), &alpha_cols[j]);
    t1.iter().zip(&t2).zip(&t3).map(|((x, y), z)| x + y + z).collect()
}

fn check_len(a: &HomAlgebra, v: &[Scalar]) -> Result<()> {
    if v.len() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: v.len(),
        });
    }
    Ok(())
}

/// `J_α(x,y,z) = (x∗y)∗α(z) + (y∗z)∗α(x) + (z∗x)∗α(y)`.
pub fn hom_jacobian(a: &HomAlgebra, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Result<Vector> {
    check_len(a, x)?;
    check_len(a, y)?;
    check_len(a, z)?;
    let t1 = a.mul(&a.mul(x, y), &a.apply_alpha(z));
    let t2 = a.mul(&a.mul(y, z), &a.apply_alpha(x));
    let t3 = a.mul(&a.mul(z, x), &a.apply_alpha(y));
    Ok(t1.iter().zip(&t2).zip(&t3).map(|((p, q), r)| p + q + r).collect())
}

/// `{b : α(b) = b, e_i ∗ b = 0 for all i}`.
pub fn hom_annihilator(a: &HomAlgebra) -> Subspace {
    let n = a.dim();
    let mut constraints = a.alpha.sub(&Matrix::identity(n));
    for i in 0..n {
        constraints = constraints.vstack(&a.left_mul_basis(i));
    }
    nullspace(&constraints)
}

/// Whether `α(s) ⊆ s` and `A ∗ s ⊆ s`.
pub fn check_hom_ideal(a: &HomAlgebra, s: &Subspace) -> bool {
    let n = a.dim();
    if s.ambient_dim() != n {
        return false;
    }
    s.basis_vectors().iter().all(|b| {
        s.contains(&a.apply_alpha(b)) && (0..n).all(|i| s.contains(&a.mul(&unit(n, i), b)))
    })
}

fn is_associative(m: &BilinearMap, twist: &Matrix) -> bool {
    let n = m.dim_in();
    (0..n).all(|i| {
        (0..n).all(|j| {
            (0..n).all(|k| {
                let lhs = m.apply(m.value(i, j), &twist.col(k));
                let rhs = m.apply(&twist.col(i), m.value(j, k));
                lhs == rhs
            })
        })
    })
}

/// Current algebra `L ⊗ B` with twist `α ⊗ Id`, for a commutative associative `B`
/// given by structure constants.
///
/// The basis is `e_i ⊗ u_a` at index `i·dim B + a`.
pub fn current_algebra(l: &HomAlgebra, assoc: &BilinearMap) -> Result<HomAlgebra> {
    let m = assoc.dim_in();
    if assoc.dim_out() != m {
        return Err(Error::InvalidFactor("structure constants must map B×B to B".into()));
    }
    let labels = (1..=m).map(|a| format!("u{a}")).collect();
    let b = HomAlgebra::new(labels, assoc.clone(), Matrix::identity(m))
        .map_err(|_| Error::InvalidFactor("associative factor is not commutative".into()))?;
    if !is_associative(assoc, &Matrix::identity(m)) {
        return Err(Error::InvalidFactor("associative factor is not associative".into()));
    }
    tensor_hom_algebra(l, &b)
}

/// Tensor product `L ⊗ B` with twist `α ⊗ β`, for a commutative
/// multiplicative Hom-associative algebra `(B, ·, β)`.
pub fn tensor_hom_algebra(l: &HomAlgebra, b: &HomAlgebra) -> Result<HomAlgebra> {
    if !verify_algebra(l).all_hold() {
        return Err(Error::InvalidFactor("first factor is not a Hom-Jacobi-Jordan algebra".into()));
    }
    let rb = verify_algebra(b);
    if !rb.commutative || !rb.multiplicative {
        return Err(Error::InvalidFactor(
            "second factor is not commutative and multiplicative".into(),
        ));
    }
    if !is_associative(b.product(), b.alpha()) {
        return Err(Error::InvalidFactor("second factor is not Hom-associative".into()));
    }
    let (n, m) = (l.dim(), b.dim());
    let d = n * m;
    let product = BilinearMap::from_fn(d, d, |p, q| {
        let (i, a1) = (p / m, p % m);
        let (j, a2) = (q / m, q % m);
        let mut v = vec![Scalar::zero(); d];
        for (k, x) in l.mul_basis(i, j).iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (c, y) in b.mul_basis(a1, a2).iter().enumerate() {
                if !y.is_zero() {
                    v[k * m + c] = x * y;
                }
            }
        }
        v
    });
    let labels = l
        .labels()
        .iter()
        .flat_map(|x| b.labels().iter().map(move |y| format!("{x}⊗{y}")))
        .collect();
    HomAlgebra::new(labels, product, l.alpha().kron(b.alpha()))
}

/// An algebra built by one of the extension constructions, with its validity verdict.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Extension {
    pub algebra: HomAlgebra,
    /// Whether the defining conditions hold; when true the algebra passes [`verify_algebra`].
    pub valid: bool,
    /// Names of the defining conditions that fail.
    pub failures: Vec<&'static str>,
}

/// Central extension `A ⊕ 𝕂c` by a symmetric bilinear form `θ`:
/// `μ_θ(u+s, v+t) = u∗v + θ(u,v)c` and `α̃(u+s) = α(u) + s`.
///
/// Valid when the base satisfies the axioms, `θ∘(α⊗α) = θ`, and `d²θ = 0`
/// in the trivial-representation complex.
pub fn central_extension(a: &HomAlgebra, theta: &BilinearMap) -> Result<Extension> {
    let n = a.dim();
    if !theta.is_form() || theta.dim_in() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: theta.dim_in(),
        });
    }
    if !theta.is_symmetric() {
        return Err(Error::PreconditionFailed("theta must be symmetric".into()));
    }
    let mut failures = Vec::new();
    if !verify_algebra(a).all_hold() {
        failures.push("base algebra axioms");
    }
    if theta.pre_compose(a.alpha(), a.alpha()) != *theta {
        failures.push("theta compatible with alpha");
    }
    // d²θ(x,y,z) = θ(x∗y, αz) + θ(x∗z, αy) + θ(y∗z, αx) for the trivial representation.
    let alpha_cols: Vec<Vector> = (0..n).map(|j| a.alpha().col(j)).collect();
    let closed = (0..n).all(|i| {
        (0..n).all(|j| {
            (0..n).all(|k| {
                let s = &theta.apply(a.mul_basis(i, j), &alpha_cols[k])[0]
                    + &theta.apply(a.mul_basis(i, k), &alpha_cols[j])[0]
                    + &theta.apply(a.mul_basis(j, k), &alpha_cols[i])[0];
                s.is_zero()
            })
        })
    });
    if !closed {
        failures.push("d2 theta = 0");
    }

    let product = BilinearMap::from_fn(n + 1, n + 1, |i, j| {
        let mut v = vec![Scalar::zero(); n + 1];
        if i < n && j < n {
            v[..n].clone_from_slice(a.mul_basis(i, j));
            v[n] = theta.get(i, j, 0).clone();
        }
        v
    });
    let alpha = a.alpha().block_diag(&Matrix::identity(1));
    let mut labels = a.labels().to_vec();
    labels.push(fresh_label(a, "c"));
    Ok(Extension {
        algebra: HomAlgebra::new(labels, product, alpha)?,
        valid: failures.is_empty(),
        failures,
    })
}

/// Extension `A ⊕ 𝕂D` by a linear map `D`:
/// `(u+mD)⋄(v+nD) = u∗v + mD(v) + nD(u)` and `α̃(u+nD) = α(u) + nD`.
///
/// Valid when the base satisfies the axioms, `D` is an α¹-antiderivation
/// (`Dα = αD` and `D(u∗v) = −D(u)∗α(v) − α(u)∗D(v)`), and `D² = 0`.
pub fn d_extension(a: &HomAlgebra, d: &Matrix) -> Result<Extension> {
    let n = a.dim();
    if d.rows() != n || d.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: d.rows(),
        });
    }
    let mut failures = Vec::new();
    if !verify_algebra(a).all_hold() {
        failures.push("base algebra axioms");
    }
    if d.mul(a.alpha()) != a.alpha().mul(d) {
        failures.push("D commutes with alpha");
    }
    let alpha_cols: Vec<Vector> = (0..n).map(|j| a.alpha().col(j)).collect();
    let d_cols: Vec<Vector> = (0..n).map(|j| d.col(j)).collect();
    let anti = (0..n).all(|i| {
        (0..n).all(|j| {
            let lhs = d.apply(a.mul_basis(i, j));
            let r1 = a.mul(&d_cols[i], &alpha_cols[j]);
            let r2 = a.mul(&alpha_cols[i], &d_cols[j]);
            lhs.iter().zip(&r1).zip(&r2).all(|((x, y), z)| (x + y + z).is_zero())
        })
    });
    if !anti {
        failures.push("D is an alpha-antiderivation");
    }
    if !d.mul(d).is_zero() {
        failures.push("D squared is zero");
    }

    let product = BilinearMap::from_fn(n + 1, n + 1, |i, j| {
        let mut v = vec![Scalar::zero(); n + 1];
        match (i < n, j < n) {
            (true, true) => v[..n].clone_from_slice(a.mul_basis(i, j)),
            (true, false) => v[..n].clone_from_slice(&d_cols[i]),
            (false, true) => v[..n].clone_from_slice(&d_cols[j]),
            (false, false) => {}
        }
        v
    });
    let alpha = a.alpha().block_diag(&Matrix::identity(1));
    let mut labels = a.labels().to_vec();
    labels.push(fresh_label(a, "D"));
    Ok(Extension {
        algebra: HomAlgebra::new(labels, product, alpha)?,
        valid: failures.is_empty(),
        failures,
    })
}

fn fresh_label(a: &HomAlgebra, base: &str) -> String {
    let mut label = base.to_string();
    while a.index_of(&label).is_some() {
        label.push('\'');
    }
    label
}
