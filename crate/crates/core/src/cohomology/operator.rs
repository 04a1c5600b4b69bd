//! Sparse assembly of the operators `d^n` and `δ^n` on the full cochain space.

use std::collections::BTreeMap;

use super::cochain::{for_each_combination, tuple_from_index, tuple_index};
use crate::exactlin::{Matrix, Scalar, Vector};
use crate::representation::Representation;

/// Row-sparse matrix used while assembling coboundary operators.
#[derive(Clone, Debug)]
pub(crate) struct SparseOp {
    cols: usize,
    rows: Vec<Vec<(usize, Scalar)>>,
}

impl SparseOp {
    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .filter(|(j, _)| !v[*j].is_zero())
                    .map(|(j, c)| c * &v[*j])
                    .sum()
            })
            .collect()
    }

    pub fn to_dense(&self) -> Matrix {
        let mut m = Matrix::zeros(self.rows.len(), self.cols);
        for (i, row) in self.rows.iter().enumerate() {
            for (j, c) in row {
                m[(i, *j)] = c.clone();
            }
        }
        m
    }

    /// `self · m` for a dense right factor.
    pub fn mul_dense(&self, m: &Matrix) -> Matrix {
        let cols: Vec<Vector> = (0..m.cols()).map(|j| self.apply(&m.col(j))).collect();
        Matrix::from_cols(&cols, self.rows.len())
    }
}

/// Sign of the product sum: `+` gives `d^n`, `−` gives `δ^n`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum Variant {
    D,
    Delta,
}

/// Assembles the operator on all n-cochains:
///
/// `Σ_i ρ(α^n x_i) f(…x̂_i…) ± Σ_{i<j} f(x_i∗x_j, α x_1, …, α x_{n+1})`
/// with `x_i, x_j` omitted from the α-list.
pub(crate) fn assemble(rep: &Representation, n: usize, variant: Variant) -> SparseOp {
    let a = rep.algebra();
    let (da, dv) = (a.dim(), rep.dim());
    let alpha_n = a.alpha().pow(n as u32);
    let rho_n: Vec<Matrix> = (0..da).map(|j| rep.action(&alpha_n.col(j))).collect();
    let alpha = a.alpha();
    let alpha_cols: Vec<Vector> = (0..da).map(|j| alpha.col(j)).collect();
    let alpha_nz: Vec<Vec<(usize, &Scalar)>> = alpha_cols
        .iter()
        .map(|c| c.iter().enumerate().filter(|(_, x)| !x.is_zero()).collect())
        .collect();
    let sign = match variant {
        Variant::D => Scalar::one(),
        Variant::Delta => -Scalar::one(),
    };

    let in_stride = da.pow(n as u32);
    let out_stride = da.pow(n as u32 + 1);
    let mut rows = Vec::with_capacity(dv * out_stride);
    for r in 0..dv {
        for t in 0..out_stride {
            let x = tuple_from_index(t, n + 1, da);
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();

            for i in 0..=n {
                let rest: Vec<usize> = x.iter().enumerate().filter(|&(l, _)| l != i).map(|(_, &v)| v).collect();
                let idx = tuple_index(&rest, da);
                let rho = &rho_n[x[i]];
                for m in 0..dv {
                    let c = &rho[(r, m)];
                    if !c.is_zero() {
                        *acc.entry(m * in_stride + idx).or_default() += c;
                    }
                }
            }

            if n >= 1 {
                for i in 0..=n {
                    for j in i + 1..=n {
                        let prod = a.mul_basis(x[i], x[j]);
                        let slots: Vec<Vec<(usize, &Scalar)>> = (0..=n)
                            .filter(|&l| l != i && l != j)
                            .map(|l| alpha_nz[x[l]].clone())
                            .collect();
                        for (p, c) in prod.iter().enumerate() {
                            if c.is_zero() {
                                continue;
                            }
                            let coef = &sign * c;
                            for_each_combination(&slots, |qs, w| {
                                let idx = p + da * tuple_index(qs, da);
                                *acc.entry(r * in_stride + idx).or_default() += &coef * w;
                            });
                        }
                    }
                }
            }

            rows.push(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect());
        }
    }
    SparseOp {
        cols: dv * in_stride,
        rows,
    }
}
