//! Dense row-major matrices over [`Scalar`] and reduced row-echelon form.

use std::fmt;
use std::ops::{Index, IndexMut};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::scalar::Scalar;
use crate::error::{Error, Result};

/// A coordinate vector.
pub type Vector = Vec<Scalar>;

/// Dense matrix with `rows × cols` entries stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    /// Builds a matrix from row vectors. `cols` is used when `rows` is empty.
    ///
    /// # Panics
    /// If the rows have different lengths.
    pub fn from_rows(rows: Vec<Vector>, cols: usize) -> Self {
        let n = rows.len();
        let cols = rows.first().map_or(cols, |r| r.len());
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r);
        }
        Matrix { rows: n, cols, data }
    }

    /// Builds a matrix from column vectors.
    pub fn from_cols(cols: &[Vector], rows: usize) -> Self {
        let rows = cols.first().map_or(rows, |c| c.len());
        let mut m = Matrix::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "ragged columns");
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect())
                .collect(),
            cols,
        )
    }

    /// Diagonal matrix.
    pub fn diag(entries: &[Scalar]) -> Self {
        let mut m = Matrix::zeros(entries.len(), entries.len());
        for (i, x) in entries.iter().enumerate() {
            m[(i, i)] = x.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn checked_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix product.
    ///
    /// # Panics
    /// On incompatible shapes.
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs).expect("incompatible shapes")
    }

    /// Matrix-vector product.
    ///
    /// # Panics
    /// If `v.len() != cols`.
    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&Scalar::from_int(-1))
    }

    /// Non-negative power of a square matrix.
    pub fn pow(&self, e: u32) -> Matrix {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut result = Matrix::identity(self.rows);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Integer power; negative exponents need an invertible matrix.
    pub fn pow_signed(&self, e: i32) -> Option<Matrix> {
        if e >= 0 {
            Some(self.pow(e as u32))
        } else {
            self.inverse().map(|inv| inv.pow(e.unsigned_abs()))
        }
    }

    /// Inverse by Gauss-Jordan elimination, `None` when singular or non-square.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(n));
        let (r, rank) = rref(&aug);
        if rank < n || (0..n).any(|i| !r[(i, i)].is_one()) {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && rank(self) == self.rows
    }

    /// Kronecker product `self ⊗ rhs`.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        out[(i * rhs.rows + k, j * rhs.cols + l)] = a * &rhs[(k, l)];
                    }
                }
            }
        }
        out
    }

    pub fn block_diag(&self, rhs: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows + rhs.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..rhs.rows {
            for j in 0..rhs.cols {
                out[(self.rows + i, self.cols + j)] = rhs[(i, j)].clone();
            }
        }
        out
    }

    pub fn hstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.rows, rhs.rows, "row count mismatch");
        let mut out = Matrix::zeros(self.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..rhs.cols {
                out[(i, self.cols + j)] = rhs[(i, j)].clone();
            }
        }
        out
    }

    pub fn vstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.cols, "column count mismatch");
        let mut data = self.data.clone();
        data.extend(rhs.data.iter().cloned());
        Matrix {
            rows: self.rows + rhs.rows,
            cols: self.cols,
            data,
        }
    }

    /// Flattens row-major into a vector.
    pub fn flatten(&self) -> Vector {
        self.data.clone()
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .to_rows()
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect())
            .collect();
        let width = cells.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
        for row in &cells {
            let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            writeln!(f, "[ {} ]", line.join("  "))?;
        }
        Ok(())
    }
}

/// Serialized as a list of rows of scalar strings.
impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows: Vec<Vector> = Vec::deserialize(deserializer)?;
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(serde::de::Error::custom("ragged matrix rows"));
        }
        Ok(Matrix::from_rows(rows, cols))
    }
}

/// Reduced row-echelon form and rank. Zero rows are kept at the bottom.
pub fn rref(m: &Matrix) -> (Matrix, usize) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivot_row = 0;
    for c in 0..cols {
        if pivot_row == rows {
            break;
        }
        let Some(p) = (pivot_row..rows).find(|&r| !a[(r, c)].is_zero()) else {
            continue;
        };
        if p != pivot_row {
            for j in 0..cols {
                a.data.swap(p * cols + j, pivot_row * cols + j);
            }
        }
        let inv = a[(pivot_row, c)].recip().expect("nonzero pivot");
        for j in c..cols {
            let x = &a[(pivot_row, j)] * &inv;
            a[(pivot_row, j)] = x;
        }
        let pivot: Vector = a.row(pivot_row).to_vec();
        for r in 0..rows {
            if r == pivot_row {
                continue;
            }
            let factor = a[(r, c)].clone();
            if factor.is_zero() {
                continue;
            }
            for j in c..cols {
                if !pivot[j].is_zero() {
                    let x = &a[(r, j)] - &(&factor * &pivot[j]);
                    a[(r, j)] = x;
                }
            }
        }
        pivot_row += 1;
    }
    (a, pivot_row)
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).1
}

/// Pivot column of each nonzero row of a matrix already in RREF.
pub(crate) fn pivot_columns(r: &Matrix, rank: usize) -> Vec<usize> {
    (0..rank)
        .map(|i| {
            r.row(i)
                .iter()
                .position(|x| !x.is_zero())
                .expect("nonzero row within rank")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_examples() {
        let id = Matrix::identity(2);
        assert_eq!(rref(&id), (id.clone(), 2));
        let ones = Matrix::from_i64(&[&[1, 1], &[1, 1]]);
        assert_eq!(rref(&ones), (Matrix::from_i64(&[&[1, 1], &[0, 0]]), 1));
        let perm = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(rref(&perm), (id, 2));
    }

    #[test]
    fn rref_is_idempotent() {
        let m = Matrix::from_i64(&[&[2, 4, 1], &[1, 2, 0], &[3, 6, 1]]);
        let (r, k) = rref(&m);
        assert_eq!(rref(&r), (r.clone(), k));
        assert_eq!(k, 2);
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_i64(&[&[1, 0], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(inv, Matrix::from_i64(&[&[1, 0], &[-1, 1]]));
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        assert!(Matrix::from_i64(&[&[1, 1], &[1, 1]]).inverse().is_none());
        assert_eq!(m.pow_signed(-2).unwrap(), Matrix::from_i64(&[&[1, 0], &[-2, 1]]));
    }

    #[test]
    fn kron_shape_and_entries() {
        let a = Matrix::from_i64(&[&[1, 2]]);
        let b = Matrix::from_i64(&[&[0], &[3]]);
        assert_eq!(a.kron(&b), Matrix::from_i64(&[&[0, 0], &[3, 6]]));
    }

    #[test]
    fn json_round_trip() {
        let m = Matrix::from_rows(vec![vec![Scalar::ratio(1, 2), Scalar::from_int(-3)]], 2);
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"[["1/2","-3"]]"#);
        assert_eq!(serde_json::from_str::<Matrix>(&s).unwrap(), m);
    }
}
