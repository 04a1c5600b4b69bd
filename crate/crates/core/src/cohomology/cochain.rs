//! Coordinates of n-linear maps `A^n → V`.
//!
//! The coordinate of `f(e_{i_1}, …, e_{i_n})_out` is
//! `out·dA^n + i_1 + i_2·dA + … + i_n·dA^{n−1}` (first argument fastest).

use serde::Serialize;

use crate::algebra::BilinearMap;
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar, Vector};

/// Index of a basis tuple, first argument fastest.
pub fn tuple_index(args: &[usize], dim_a: usize) -> usize {
    args.iter().rev().fold(0, |acc, &i| acc * dim_a + i)
}

/// Inverse of [`tuple_index`] for tuples of length `n`.
pub fn tuple_from_index(mut idx: usize, n: usize, dim_a: usize) -> Vec<usize> {
    (0..n)
        .map(|_| {
            let d = idx % dim_a;
            idx /= dim_a;
            d
        })
        .collect()
}

/// An n-linear map `A^n → V` in coordinates; degree 0 is a vector of `V`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Cochain {
    degree: usize,
    dim_a: usize,
    dim_v: usize,
    coeffs: Vector,
}

impl Cochain {
    pub fn new(degree: usize, dim_a: usize, dim_v: usize, coeffs: Vector) -> Result<Self> {
        let expected = dim_v * dim_a.pow(degree as u32);
        if coeffs.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: coeffs.len(),
            });
        }
        Ok(Cochain {
            degree,
            dim_a,
            dim_v,
            coeffs,
        })
    }

    pub fn zero(degree: usize, dim_a: usize, dim_v: usize) -> Self {
        let len = dim_v * dim_a.pow(degree as u32);
        Cochain {
            degree,
            dim_a,
            dim_v,
            coeffs: vec![Scalar::zero(); len],
        }
    }

    /// A degree-1 cochain from the `dim V × dim A` matrix of a linear map.
    pub fn from_linear_map(m: &Matrix) -> Self {
        Cochain {
            degree: 1,
            dim_a: m.cols(),
            dim_v: m.rows(),
            coeffs: m.flatten(),
        }
    }

    /// A degree-2 cochain from a bilinear map.
    pub fn from_bilinear(b: &BilinearMap) -> Self {
        Cochain {
            degree: 2,
            dim_a: b.dim_in(),
            dim_v: b.dim_out(),
            coeffs: b.to_cochain(),
        }
    }

    pub fn to_linear_map(&self) -> Matrix {
        assert_eq!(self.degree, 1, "not a degree-1 cochain");
        Matrix::new(self.dim_v, self.dim_a, self.coeffs.clone()).expect("shape")
    }

    pub fn to_bilinear(&self) -> BilinearMap {
        assert_eq!(self.degree, 2, "not a degree-2 cochain");
        BilinearMap::from_cochain(&self.coeffs, self.dim_a, self.dim_v)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vector {
        self.coeffs
    }

    /// Value on a tuple of basis vectors.
    pub fn eval_basis(&self, args: &[usize]) -> Vector {
        assert_eq!(args.len(), self.degree, "wrong number of arguments");
        let stride = self.dim_a.pow(self.degree as u32);
        let idx = tuple_index(args, self.dim_a);
        (0..self.dim_v).map(|o| self.coeffs[o * stride + idx].clone()).collect()
    }

    /// Value on arbitrary vectors, by multilinear expansion.
    pub fn eval(&self, args: &[Vector]) -> Vector {
        assert_eq!(args.len(), self.degree, "wrong number of arguments");
        let mut out = vec![Scalar::zero(); self.dim_v];
        let nonzeros: Vec<Vec<(usize, &Scalar)>> = args
            .iter()
            .map(|v| v.iter().enumerate().filter(|(_, x)| !x.is_zero()).collect())
            .collect();
        for_each_combination(&nonzeros, |idx, w| {
            for (o, y) in self.eval_basis(idx).iter().enumerate() {
                if !y.is_zero() {
                    out[o] += w * y;
                }
            }
        });
        out
    }
}

/// Calls `f(indices, weight)` for every choice of one nonzero per slot.
pub(crate) fn for_each_combination(slots: &[Vec<(usize, &Scalar)>], mut f: impl FnMut(&[usize], &Scalar)) {
    let mut idx = vec![0usize; slots.len()];
    let mut pos = vec![0usize; slots.len()];
    if slots.iter().any(Vec::is_empty) {
        return;
    }
    loop {
        let mut w = Scalar::one();
        for (k, slot) in slots.iter().enumerate() {
            let (i, x) = slot[pos[k]];
            idx[k] = i;
            w *= x;
        }
        f(&idx, &w);
        let mut k = 0;
        loop {
            if k == slots.len() {
                return;
            }
            pos[k] += 1;
            if pos[k] < slots[k].len() {
                break;
            }
            pos[k] = 0;
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuple_round_trip() {
        for idx in 0..27 {
            let t = tuple_from_index(idx, 3, 3);
            assert_eq!(tuple_index(&t, 3), idx);
        }
        assert_eq!(tuple_index(&[1, 0], 2), 1);
        assert_eq!(tuple_index(&[0, 1], 2), 2);
    }

    #[test]
    fn linear_map_layout() {
        // f(e1) = e2 on a 2-dim space
        let m = Matrix::from_i64(&[&[0, 0], &[1, 0]]);
        let c = Cochain::from_linear_map(&m);
        assert_eq!(c.eval_basis(&[0]), vec![Scalar::zero(), Scalar::one()]);
        assert_eq!(c.to_linear_map(), m);
    }

    #[test]
    fn eval_is_multilinear() {
        let b = BilinearMap::from_fn(2, 1, |i, j| vec![Scalar::from_int((1 + i + 3 * j) as i64)]);
        let c = Cochain::from_bilinear(&b);
        let x = vec![Scalar::from_int(2), Scalar::from_int(-1)];
        let y = vec![Scalar::ratio(1, 2), Scalar::from_int(3)];
        assert_eq!(c.eval(&[x.clone(), y.clone()]), b.apply(&x, &y));
    }

    #[test]
    fn degree_zero_is_a_vector() {
        let c = Cochain::new(0, 3, 2, vec![Scalar::one(), Scalar::zero()]).unwrap();
        assert_eq!(c.eval(&[]), vec![Scalar::one(), Scalar::zero()]);
        assert!(Cochain::new(1, 3, 2, vec![]).is_err());
    }
}
