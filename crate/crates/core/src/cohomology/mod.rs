//! The zigzag cochain complex of a representation.
//!
//! Two operator families act on cochains:
//! - `d^n : C^n → C^{n+1}` with `+` on the product sum, defining cocycles `Z^n = C^n ∩ ker d^n`;
//! - `δ^n : A^n → C^{n+1}` with `−` on the product sum, defining coboundaries `B^{n+1} = δ^n(A^n)`.
//!
//! On an algebra and representation satisfying the axioms, `d^{n+1} ∘ δ^n = 0`,
//! so `H^n = Z^n / B^n` is well defined.

mod cochain;
mod operator;

use serde::Serialize;

pub use cochain::{tuple_from_index, tuple_index, Cochain};
use operator::{assemble, Variant};

use crate::algebra::{verify_algebra, HomAlgebra};
use crate::error::{Error, Result};
use crate::exactlin::{image, nullspace, quotient_basis, Matrix, Scalar, Subspace, Vector};
use crate::representation::{adjoint_rep, trivial_rep, verify_representation, Representation};

/// Default bound on cochain degrees.
pub const DEFAULT_DEGREE_CAP: usize = 4;

/// Cohomology data in one degree.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CohomologyReport {
    pub degree: usize,
    #[serde(rename = "dimC")]
    pub dim_c: usize,
    /// Dimension of the α-skew-symmetric cochains `A^n`.
    #[serde(rename = "dimA")]
    pub dim_a_skew: usize,
    #[serde(rename = "dimZ")]
    pub dim_z: usize,
    #[serde(rename = "dimB")]
    pub dim_b: usize,
    /// `dim Z − dim B`, absent when `B ⊄ Z`.
    #[serde(rename = "dimH")]
    pub dim_h: Option<usize>,
    #[serde(rename = "Z")]
    pub z: Vec<Vector>,
    #[serde(rename = "B")]
    pub b: Vec<Vector>,
    /// Representatives of a basis of `H`, each reduced modulo `B`.
    #[serde(rename = "H")]
    pub h: Vec<Vector>,
    pub warnings: Vec<String>,
}

/// The cochain complex of a representation with a degree cap.
#[derive(Clone, Debug)]
pub struct CochainComplex<'a> {
    rep: &'a Representation,
    cap: usize,
}

impl<'a> CochainComplex<'a> {
    pub fn new(rep: &'a Representation) -> Self {
        CochainComplex {
            rep,
            cap: DEFAULT_DEGREE_CAP,
        }
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn rep(&self) -> &Representation {
        self.rep
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.cap {
            return Err(Error::DegreeCap { n, cap: self.cap });
        }
        Ok(())
    }

    fn dim_a(&self) -> usize {
        self.rep.algebra().dim()
    }

    /// Dimension `dim V · dim A^n` of the space of all n-cochains.
    pub fn cochain_dim(&self, n: usize) -> usize {
        self.rep.dim() * self.dim_a().pow(n as u32)
    }

    /// `C^n_{α,φ} = {f : φ∘f = f∘α^{⊗n}}`; for `n = 0` the φ-fixed vectors.
    pub fn hom_cochains(&self, n: usize) -> Result<Subspace> {
        self.check(n)?;
        Ok(nullspace(&self.compatibility_matrix(n)))
    }

    fn compatibility_matrix(&self, n: usize) -> Matrix {
        let inputs = self.dim_a().pow(n as u32);
        let alpha_t = self.rep.algebra().alpha().transpose();
        let mut twist = Matrix::identity(1);
        for _ in 0..n {
            twist = twist.kron(&alpha_t);
        }
        let lhs = self.rep.phi().kron(&Matrix::identity(inputs));
        let rhs = Matrix::identity(self.rep.dim()).kron(&twist);
        lhs.sub(&rhs)
    }

    /// `A^n`: cochains in `C^n` with, for every `i < j`,
    /// `f(…, x_i, …, α x_j, …) = −f(…, x_j, …, α x_i, …)`.
    pub fn alpha_skew(&self, n: usize) -> Result<Subspace> {
        let c = self.hom_cochains(n)?;
        if n <= 1 {
            return Ok(c);
        }
        let da = self.dim_a();
        let dv = self.rep.dim();
        let stride = da.pow(n as u32);
        let alpha = self.rep.algebra().alpha();
        let mut rows: Vec<Vector> = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for t in 0..stride {
                    let y = tuple_from_index(t, n, da);
                    for r in 0..dv {
                        let mut row = vec![Scalar::zero(); dv * stride];
                        for m in 0..da {
                            let a_mj = &alpha[(m, y[j])];
                            if !a_mj.is_zero() {
                                let mut z = y.clone();
                                z[j] = m;
                                row[r * stride + tuple_index(&z, da)] += a_mj;
                            }
                            let a_mi = &alpha[(m, y[i])];
                            if !a_mi.is_zero() {
                                let mut z = y.clone();
                                z[i] = y[j];
                                z[j] = m;
                                row[r * stride + tuple_index(&z, da)] += a_mi;
                            }
                        }
                        rows.push(row);
                    }
                }
            }
        }
        let skew = nullspace(&Matrix::from_rows(rows, dv * stride));
        Ok(c.intersect(&skew))
    }

    /// Symmetric cochains inside `C^n`.
    pub fn symmetric(&self, n: usize) -> Result<Subspace> {
        let c = self.hom_cochains(n)?;
        if n <= 1 {
            return Ok(c);
        }
        let da = self.dim_a();
        let dv = self.rep.dim();
        let stride = da.pow(n as u32);
        let mut rows: Vec<Vector> = Vec::new();
        // adjacent transpositions generate the symmetric group
        for i in 0..n - 1 {
            for t in 0..stride {
                let y = tuple_from_index(t, n, da);
                let mut z = y.clone();
                z.swap(i, i + 1);
                let s = tuple_index(&z, da);
                if s <= t {
                    continue;
                }
                for r in 0..dv {
                    let mut row = vec![Scalar::zero(); dv * stride];
                    row[r * stride + t] = Scalar::one();
                    row[r * stride + s] = -Scalar::one();
                    rows.push(row);
                }
            }
        }
        let sym = nullspace(&Matrix::from_rows(rows, dv * stride));
        Ok(c.intersect(&sym))
    }

    /// Matrix of `d^n` from all n-cochain coordinates to all (n+1)-cochain coordinates.
    pub fn d_matrix(&self, n: usize) -> Result<Matrix> {
        self.check(n)?;
        Ok(assemble(self.rep, n, Variant::D).to_dense())
    }

    /// `d^n f` for a cochain given in full coordinates.
    pub fn apply_d(&self, n: usize, f: &[Scalar]) -> Result<Vector> {
        self.check(n)?;
        self.check_len(n, f)?;
        Ok(assemble(self.rep, n, Variant::D).apply(f))
    }

    /// `δ^n f` by its defining formula, for any n-cochain in full coordinates.
    pub fn apply_delta(&self, n: usize, f: &[Scalar]) -> Result<Vector> {
        self.check(n)?;
        self.check_len(n, f)?;
        Ok(assemble(self.rep, n, Variant::Delta).apply(f))
    }

    fn check_len(&self, n: usize, f: &[Scalar]) -> Result<()> {
        if f.len() != self.cochain_dim(n) {
            return Err(Error::DimensionMismatch {
                expected: self.cochain_dim(n),
                found: f.len(),
            });
        }
        Ok(())
    }

    /// `δ^n` restricted to `A^n`: one column per canonical basis vector of `A^n`.
    ///
    /// When the inputs satisfy the axioms and `n + 1` is within the cap,
    /// `d^{n+1} · δ^n = 0` is checked and a violation is an error.
    pub fn delta_matrix(&self, n: usize) -> Result<Matrix> {
        let m = self.delta_unchecked(n)?;
        if n < self.cap && self.inputs_verified() {
            let d_next = assemble(self.rep, n + 1, Variant::D);
            if !d_next.mul_dense(&m).is_zero() {
                return Err(Error::ZigzagViolation { n });
            }
        }
        Ok(m)
    }

    fn delta_unchecked(&self, n: usize) -> Result<Matrix> {
        let skew = self.alpha_skew(n)?;
        let basis_cols = skew.basis().transpose();
        Ok(assemble(self.rep, n, Variant::Delta).mul_dense(&basis_cols))
    }

    /// Whether the algebra and representation satisfy their axioms.
    pub fn inputs_verified(&self) -> bool {
        verify_algebra(self.rep.algebra()).all_hold() && verify_representation(self.rep).all_hold()
    }

    /// Whether `d^n ∘ δ^{n−1}` vanishes on `A^{n−1}`, for `n ≥ 1`.
    pub fn zigzag_holds(&self, n: usize) -> Result<bool> {
        assert!(n >= 1, "zigzag starts at n = 1");
        self.check(n)?;
        let delta = self.delta_unchecked(n - 1)?;
        Ok(assemble(self.rep, n, Variant::D).mul_dense(&delta).is_zero())
    }

    /// Whether `φ∘(d^n f) = (d^n f)∘α^{⊗(n+1)}` for every basis vector `f` of `C^n`,
    /// and likewise for `δ^n` on `A^n`.
    pub fn equivariance_holds(&self, n: usize) -> Result<bool> {
        self.check(n)?;
        let compat = self.compatibility_matrix(n + 1);
        let d = assemble(self.rep, n, Variant::D);
        let c = self.hom_cochains(n)?;
        let d_ok = c
            .basis_vectors()
            .iter()
            .all(|f| compat.apply(&d.apply(f)).iter().all(Scalar::is_zero));
        let delta = self.delta_unchecked(n)?;
        let delta_ok = compat.mul(&delta).is_zero();
        Ok(d_ok && delta_ok)
    }

    /// `Z^n = C^n ∩ ker d^n`.
    pub fn cocycles(&self, n: usize) -> Result<Subspace> {
        let c = self.hom_cochains(n)?;
        Ok(c.intersect(&nullspace(&self.d_matrix(n)?)))
    }

    /// `B^n = δ^{n−1}(A^{n−1})`; zero in degree 0.
    pub fn coboundaries(&self, n: usize) -> Result<Subspace> {
        self.check(n)?;
        if n == 0 {
            return Ok(Subspace::zero(self.cochain_dim(0)));
        }
        Ok(image(&self.delta_unchecked(n - 1)?))
    }

    pub fn cohomology(&self, n: usize) -> Result<CohomologyReport> {
        self.check(n)?;
        let mut warnings = Vec::new();
        let alg = verify_algebra(self.rep.algebra());
        if !alg.all_hold() {
            warnings.push("algebra fails the Hom-Jacobi-Jordan axioms".to_string());
        }
        if !verify_representation(self.rep).all_hold() {
            warnings.push("representation fails its axioms".to_string());
        }
        let c = self.hom_cochains(n)?;
        let skew = self.alpha_skew(n)?;
        let z = self.cocycles(n)?;
        let b = self.coboundaries(n)?;
        let (dim_h, h) = match quotient_basis(&z, &b) {
            Ok(h) => (Some(h.len()), h),
            Err(_) => {
                warnings.push("B is not contained in Z; H is undefined".to_string());
                (None, Vec::new())
            }
        };
        Ok(CohomologyReport {
            degree: n,
            dim_c: c.dim(),
            dim_a_skew: skew.dim(),
            dim_z: z.dim(),
            dim_b: b.dim(),
            dim_h,
            z: z.basis_vectors(),
            b: b.basis_vectors(),
            h,
            warnings,
        })
    }
}

/// `C^n_{α,φ}` with the default degree cap.
pub fn hom_cochain_space(r: &Representation, n: usize) -> Result<Subspace> {
    CochainComplex::new(r).hom_cochains(n)
}

/// `A^n_{α,φ}` with the default degree cap.
pub fn alpha_skew_subspace(r: &Representation, n: usize) -> Result<Subspace> {
    CochainComplex::new(r).alpha_skew(n)
}

/// `S^n_{α,φ}` with the default degree cap.
pub fn symmetric_subspace(r: &Representation, n: usize) -> Result<Subspace> {
    CochainComplex::new(r).symmetric(n)
}

/// Matrix of `d^n` on full cochain coordinates, with the default degree cap.
pub fn coboundary_d(r: &Representation, n: usize) -> Result<Matrix> {
    CochainComplex::new(r).d_matrix(n)
}

/// Matrix of `δ^n` on the canonical basis of `A^n`, with the default degree cap.
pub fn coboundary_delta(r: &Representation, n: usize) -> Result<Matrix> {
    CochainComplex::new(r).delta_matrix(n)
}

pub fn cohomology(r: &Representation, n: usize) -> Result<CohomologyReport> {
    CochainComplex::new(r).cohomology(n)
}

/// Cohomology of the α^s-adjoint representation.
pub fn adjoint_cohomology(a: &HomAlgebra, s: i32, n: usize) -> Result<CohomologyReport> {
    cohomology(&adjoint_rep(a, s)?, n)
}

/// Cohomology of the trivial representation.
pub fn trivial_cohomology(a: &HomAlgebra, n: usize) -> Result<CohomologyReport> {
    cohomology(&trivial_rep(a), n)
}
