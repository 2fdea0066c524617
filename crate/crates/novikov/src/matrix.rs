//! Small dense matrices over an exact field. Used for module actions,
//! basis changes and the 2x2 enumerations; nothing here is tuned for large
//! dimensions.

use crate::scalar::{FieldDescriptor, Scalar};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("matrix dimensions {0}x{1} and {2}x{3} do not match")]
    DimensionMismatch(usize, usize, usize, usize),
    #[error("matrix is singular")]
    Singular,
    #[error("entry ({0}, {1}) out of range for a {2}x{3} matrix")]
    IndexOutOfRange(usize, usize, usize, usize),
}

/// Row-major matrix with entries in a single field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldDescriptor,
    a: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize, field: FieldDescriptor) -> Self {
        Matrix {
            rows,
            cols,
            field,
            a: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(n: usize, field: FieldDescriptor) -> Self {
        let mut m = Matrix::zero(n, n, field);
        for i in 0..n {
            m.a[i * n + i] = field.one();
        }
        m
    }

    /// Build from integer rows; handy for fixed catalog matrices and tests.
    pub fn from_i64_rows(field: FieldDescriptor, rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Matrix::zero(r, c, field);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.iter().enumerate() {
                m.a[i * c + j] = field.integer(*v);
            }
        }
        m
    }

    pub fn from_rows(field: FieldDescriptor, rows: &[Vec<Scalar>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Matrix::zero(r, c, field);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.iter().enumerate() {
                assert_eq!(v.field(), field, "entry field mismatch");
                m.a[i * c + j] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.a[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) -> Result<(), MatrixError> {
        if r >= self.rows || c >= self.cols {
            return Err(MatrixError::IndexOutOfRange(r, c, self.rows, self.cols));
        }
        assert_eq!(v.field(), self.field, "entry field mismatch");
        self.a[r * self.cols + c] = v;
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::DimensionMismatch(
                self.rows, self.cols, other.rows, other.cols,
            ));
        }
        let mut out = Matrix::zero(self.rows, other.cols, self.field);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.get(i, k);
                if aik.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * out.cols + j;
                    let prod = aik.mul_raw(other.get(k, j));
                    out.a[idx] = out.a[idx].add_raw(&prod);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        self.zip_with(other, Scalar::add_raw)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        self.zip_with(other, Scalar::sub_raw)
    }

    fn zip_with(
        &self,
        other: &Matrix,
        op: impl Fn(&Scalar, &Scalar) -> Scalar,
    ) -> Result<Matrix, MatrixError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(MatrixError::DimensionMismatch(
                self.rows, self.cols, other.rows, other.cols,
            ));
        }
        let mut out = self.clone();
        for (x, y) in out.a.iter_mut().zip(&other.a) {
            *x = op(x, y);
        }
        Ok(out)
    }

    pub fn neg(&self) -> Matrix {
        let mut out = self.clone();
        for x in out.a.iter_mut() {
            *x = x.neg();
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        assert_eq!(s.field(), self.field, "scale field mismatch");
        let mut out = self.clone();
        for x in out.a.iter_mut() {
            *x = x.mul_raw(s);
        }
        out
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Apply to a coordinate (column) vector.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "apply dimension mismatch");
        let mut out = vec![self.field.zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for i in 0..self.rows {
                out[i].mul_acc(self.get(i, j), x);
            }
        }
        out
    }

    /// Inverse by Gauss-Jordan elimination; exact, so no conditioning worries.
    pub fn inverse(&self) -> Result<Matrix, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::DimensionMismatch(
                self.rows, self.cols, self.cols, self.rows,
            ));
        }
        let n = self.rows;
        let mut work = self.clone();
        let mut inv = Matrix::identity(n, self.field);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !work.get(r, col).is_zero());
            let pivot = pivot.ok_or(MatrixError::Singular)?;
            if pivot != col {
                for j in 0..n {
                    work.a.swap(pivot * n + j, col * n + j);
                    inv.a.swap(pivot * n + j, col * n + j);
                }
            }
            let scale = work.get(col, col).inv().expect("pivot is nonzero");
            for j in 0..n {
                work.a[col * n + j] = work.a[col * n + j].mul_raw(&scale);
                inv.a[col * n + j] = inv.a[col * n + j].mul_raw(&scale);
            }
            for r in 0..n {
                if r == col || work.get(r, col).is_zero() {
                    continue;
                }
                let factor = work.get(r, col).clone();
                for j in 0..n {
                    let w = work.a[col * n + j].mul_raw(&factor);
                    work.a[r * n + j] = work.a[r * n + j].sub_raw(&w);
                    let v = inv.a[col * n + j].mul_raw(&factor);
                    inv.a[r * n + j] = inv.a[r * n + j].sub_raw(&v);
                }
            }
        }
        Ok(inv)
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.a
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
            if i + 1 < self.rows {
                write!(f, " ")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiply_2x2() {
        let f = FieldDescriptor::Rational;
        let a = Matrix::from_i64_rows(f, &[&[1, 2], &[3, 4]]);
        let b = Matrix::from_i64_rows(f, &[&[0, 1], &[1, 0]]);
        assert_eq!(
            a.mul(&b).unwrap(),
            Matrix::from_i64_rows(f, &[&[2, 1], &[4, 3]])
        );
    }

    #[test]
    fn inverse_round_trip() {
        let f = FieldDescriptor::Rational;
        let a = Matrix::from_i64_rows(f, &[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(2, f));
        assert_eq!(inv.mul(&a).unwrap(), Matrix::identity(2, f));
    }

    #[test]
    fn inverse_over_gf3() {
        let f = FieldDescriptor::gf(3).unwrap();
        let a = Matrix::from_i64_rows(f, &[&[1, 1], &[0, 2]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(2, f));
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        let f = FieldDescriptor::Rational;
        let a = Matrix::from_i64_rows(f, &[&[1, 2], &[2, 4]]);
        assert_eq!(a.inverse(), Err(MatrixError::Singular));
    }

    #[test]
    fn commutator_of_commuting_matrices_vanishes() {
        let f = FieldDescriptor::Rational;
        let a = Matrix::from_i64_rows(f, &[&[1, 0], &[0, 2]]);
        let b = Matrix::from_i64_rows(f, &[&[3, 0], &[0, 5]]);
        assert!(a.commutator(&b).unwrap().is_zero());
        let n = Matrix::from_i64_rows(f, &[&[0, 1], &[0, 0]]);
        assert!(!a.commutator(&n).unwrap().is_zero());
    }

    #[test]
    fn apply_uses_columns_as_images() {
        let f = FieldDescriptor::Rational;
        // column 0 is the image of the first basis vector
        let a = Matrix::from_i64_rows(f, &[&[0, 0], &[1, 0]]);
        let e0 = vec![f.one(), f.zero()];
        assert_eq!(a.apply(&e0), vec![f.zero(), f.one()]);
    }
}
