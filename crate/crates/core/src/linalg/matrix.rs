use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

/// Scalar field a matrix lives over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Real,
    Complex,
}

impl Field {
    /// The smallest field containing both.
    pub fn join(self, other: Field) -> Field {
        if self == Field::Complex || other == Field::Complex {
            Field::Complex
        } else {
            Field::Real
        }
    }

    pub fn is_real(self) -> bool {
        self == Field::Real
    }
}

/// Dense row-major matrix of complex scalars tagged with its field.
///
/// A `Real` matrix has every imaginary part exactly zero; constructors and
/// arithmetic keep that invariant.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<C64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, field: Field) -> Matrix {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Matrix { rows, cols, field, data: vec![ZERO; rows * cols] }
    }

    pub fn identity(n: usize, field: Field) -> Matrix {
        let mut m = Matrix::zeros(n, n, field);
        for i in 0..n {
            m.data[i * n + i] = ONE;
        }
        m
    }

    pub fn from_real(rows: usize, cols: usize, entries: &[f64]) -> Result<Matrix> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(Error::InvalidDimensions { rows, cols });
        }
        let data = entries.iter().map(|&x| C64::new(x, 0.0)).collect();
        Ok(Matrix { rows, cols, field: Field::Real, data })
    }

    /// Builds a complex-field matrix. The field tag stays `Complex` even when
    /// all imaginary parts happen to vanish.
    pub fn from_complex(rows: usize, cols: usize, entries: Vec<C64>) -> Result<Matrix> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(Error::InvalidDimensions { rows, cols });
        }
        Ok(Matrix { rows, cols, field: Field::Complex, data: entries })
    }

    /// Builds a matrix in the given field; `Real` requires zero imaginary parts.
    pub fn from_entries(rows: usize, cols: usize, field: Field, entries: Vec<C64>) -> Result<Matrix> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(Error::InvalidDimensions { rows, cols });
        }
        if field == Field::Real && entries.iter().any(|z| z.im != 0.0) {
            return Err(Error::InvalidDimensions { rows, cols });
        }
        Ok(Matrix { rows, cols, field, data: entries })
    }

    pub fn from_rows(rows: &[&[f64]]) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidDimensions { rows: r, cols: c });
        }
        let flat: Vec<f64> = rows.iter().flat_map(|row| row.iter().copied()).collect();
        Matrix::from_real(r, c, &flat)
    }

    pub fn diag_real(values: &[f64]) -> Matrix {
        let n = values.len();
        let mut m = Matrix::zeros(n, n, Field::Real);
        for (i, &v) in values.iter().enumerate() {
            m.data[i * n + i] = C64::new(v, 0.0);
        }
        m
    }

    pub fn column(entries: &[C64], field: Field) -> Matrix {
        let mut m = Matrix::zeros(entries.len(), 1, field);
        for (i, &z) in entries.iter().enumerate() {
            m.set(i, 0, z);
        }
        m
    }

    pub fn column_real(entries: &[f64]) -> Matrix {
        Matrix::from_real(entries.len(), 1, entries).expect("nonempty column")
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<C64>], field: Field) -> Matrix {
        let mut m = Matrix::zeros(rows, columns.len().max(1), field);
        for (j, col) in columns.iter().enumerate() {
            for i in 0..rows {
                m.set(i, j, col[i]);
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

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[C64] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.data[i * self.cols + j]
    }

    /// Writes an entry; a nonzero imaginary part promotes the field to `Complex`.
    pub fn set(&mut self, i: usize, j: usize, z: C64) {
        if self.field == Field::Real && z.im != 0.0 {
            self.field = Field::Complex;
        }
        self.data[i * self.cols + j] = z;
    }

    /// Same entries retagged as complex.
    pub fn to_complex(&self) -> Matrix {
        Matrix { field: Field::Complex, ..self.clone() }
    }

    pub fn col_vec(&self, j: usize) -> Vec<C64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn adjoint(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows, self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j).conj();
            }
        }
        out.clean();
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows, self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j);
            }
        }
        out
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch { left: self.shape(), right: other.shape() });
        }
        let mut out = Matrix::zeros(self.rows, other.cols, self.field.join(other.field));
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == ZERO {
                    continue;
                }
                let row = &other.data[k * other.cols..(k + 1) * other.cols];
                let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (d, &b) in dst.iter_mut().zip(row) {
                    *d += a * b;
                }
            }
        }
        out.clean();
        Ok(out)
    }

    pub fn mul_vec(&self, x: &[C64]) -> Vec<C64> {
        assert_eq!(x.len(), self.cols, "vector length must equal column count");
        (0..self.rows)
            .map(|i| {
                let row = &self.data[i * self.cols..(i + 1) * self.cols];
                row.iter().zip(x).map(|(&a, &b)| a * b).sum()
            })
            .collect()
    }

    fn zip_with(&self, other: &Matrix, f: impl Fn(C64, C64) -> C64) -> Result<Matrix> {
        if self.shape() != other.shape() {
            return Err(Error::ShapeMismatch { left: self.shape(), right: other.shape() });
        }
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f(a, b)).collect();
        let mut out = Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field.join(other.field),
            data,
        };
        out.clean();
        Ok(out)
    }

    pub fn try_add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn try_sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b| a - b)
    }

    /// `self + lambda * other`. A non-real `lambda` promotes to `Complex`.
    pub fn add_scaled(&self, other: &Matrix, lambda: C64) -> Result<Matrix> {
        let mut out = self.zip_with(other, |a, b| a + lambda * b)?;
        if lambda.im != 0.0 {
            out.field = Field::Complex;
        }
        Ok(out)
    }

    pub fn scale(&self, c: C64) -> Matrix {
        let field = if c.im != 0.0 { Field::Complex } else { self.field };
        let mut out = Matrix {
            rows: self.rows,
            cols: self.cols,
            field,
            data: self.data.iter().map(|&z| z * c).collect(),
        };
        out.clean();
        out
    }

    pub fn scale_real(&self, c: f64) -> Matrix {
        self.scale(C64::new(c, 0.0))
    }

    /// (M + Mᴴ)/2.
    pub fn hermitian_part(&self) -> Matrix {
        assert!(self.is_square(), "hermitian part needs a square matrix");
        let n = self.rows;
        let mut out = Matrix::zeros(n, n, self.field);
        for i in 0..n {
            for j in 0..n {
                out.data[i * n + j] = (self.get(i, j) + self.get(j, i).conj()) * 0.5;
            }
        }
        out.clean();
        out
    }

    pub fn frobenius_norm(&self) -> f64 {
        crate::math::sqrt(self.data.iter().map(|z| z.norm_sqr()).sum())
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|z| *z == ZERO)
    }

    /// Largest entrywise |m_ij − conj(m_ji)|.
    pub fn hermitian_residual(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let n = self.rows;
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in i..n {
                worst = worst.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        worst
    }

    pub fn trace(&self) -> C64 {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    /// Copies columns `range` into a new matrix.
    pub fn columns(&self, idx: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.rows, idx.len().max(1), self.field);
        for (k, &j) in idx.iter().enumerate() {
            for i in 0..self.rows {
                out.data[i * out.cols + k] = self.get(i, j);
            }
        }
        out
    }

    pub fn approx_eq(&self, other: &Matrix, tol: f64) -> bool {
        self.shape() == other.shape()
            && self.data.iter().zip(&other.data).all(|(a, b)| (a - b).norm() <= tol)
    }

    fn clean(&mut self) {
        if self.field == Field::Real {
            for z in &mut self.data {
                z.im = 0.0;
            }
        }
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        self.try_add(rhs).expect("shape mismatch in +")
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self.try_sub(rhs).expect("shape mismatch in -")
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("shape mismatch in *")
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.scale_real(-1.0)
    }
}
