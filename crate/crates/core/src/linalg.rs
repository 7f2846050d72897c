//! Minimal dense vectors and row-major matrices.
//!
//! Networks here stay below ~10^4 parameters, so there is no blocking, no
//! sparsity, and no BLAS: plain loops are fast enough and keep the
//! arithmetic auditable. Both types validate on construction that they are
//! non-empty and hold only finite values.

use std::ops::Index;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense vector with at least one element, all finite.
#[derive(Clone, Debug, PartialEq)]
pub struct Vector<F> {
    data: Vec<F>,
}

impl<F: Scalar> Vector<F> {
    pub fn new(data: Vec<F>) -> Result<Self> {
        if data.is_empty() {
            return Err(Error::invalid("vector must have at least one element"));
        }
        if data.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("vector construction"));
        }
        Ok(Vector { data })
    }

    /// All-zero vector of length `n` (`n >= 1`).
    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1, "vector length must be >= 1");
        Vector {
            data: vec![F::zero(); n],
        }
    }

    pub fn from_fn(n: usize, f: impl FnMut(usize) -> F) -> Result<Self> {
        Self::new((0..n).map(f).collect())
    }

    /// Converts an `f64` slice; handy for tests and fixtures.
    pub fn from_f64s(values: &[f64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| F::lit(v)).collect())
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        false // length >= 1 by construction
    }

    pub fn as_slice(&self) -> &[F] {
        &self.data
    }

    pub(crate) fn as_mut_slice(&mut self) -> &mut [F] {
        &mut self.data
    }

    pub fn iter(&self) -> std::slice::Iter<'_, F> {
        self.data.iter()
    }

    /// Elementwise sum; lengths must match.
    pub fn add(&self, other: &Vector<F>) -> Result<Vector<F>> {
        if self.len() != other.len() {
            return Err(Error::shape(
                "add",
                format!("len {}", self.len()),
                format!("len {}", other.len()),
            ));
        }
        Ok(Vector {
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| a + b)
                .collect(),
        })
    }

    pub fn scale(&self, factor: F) -> Vector<F> {
        Vector {
            data: self.data.iter().map(|&a| a * factor).collect(),
        }
    }

    pub fn map(&self, f: impl Fn(F) -> F) -> Vector<F> {
        Vector {
            data: self.data.iter().map(|&a| f(a)).collect(),
        }
    }

    pub fn max_abs(&self) -> F {
        self.data
            .iter()
            .map(|v| v.abs())
            .fold(F::zero(), |a, b| if b > a { b } else { a })
    }

    pub fn all_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }
}

impl<F> Index<usize> for Vector<F> {
    type Output = F;

    fn index(&self, i: usize) -> &F {
        &self.data[i]
    }
}

/// Dense row-major matrix, `rows * cols` finite elements.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Scalar> Matrix<F> {
    pub fn new(rows: usize, cols: usize, data: Vec<F>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::invalid("matrix dimensions must be >= 1"));
        }
        if data.len() != rows * cols {
            return Err(Error::shape(
                "matrix construction",
                format!("{rows}x{cols}"),
                format!("{} elements", data.len()),
            ));
        }
        if data.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("matrix construction"));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix dimensions must be >= 1");
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = F::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<F>]) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::invalid("matrix must have at least one row"));
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::invalid("matrix rows have unequal lengths"));
        }
        Self::new(rows.len(), cols, rows.concat())
    }

    /// Converts nested `f64` rows; handy for tests and fixtures.
    pub fn from_f64_rows(rows: &[&[f64]]) -> Result<Self> {
        let converted: Vec<Vec<F>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| F::lit(v)).collect())
            .collect();
        Self::from_rows(&converted)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> F {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        self.data[i * self.cols + j]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, v: F) {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn as_slice(&self) -> &[F] {
        &self.data
    }

    pub(crate) fn as_mut_slice(&mut self) -> &mut [F] {
        &mut self.data
    }

    /// Matrix-vector product; `self.cols` must equal `v.len()`.
    pub fn matvec(&self, v: &Vector<F>) -> Result<Vector<F>> {
        if self.cols != v.len() {
            return Err(Error::shape(
                "matvec",
                format!("{}x{}", self.rows, self.cols),
                format!("len {}", v.len()),
            ));
        }
        let x = v.as_slice();
        let mut out = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let row = self.row(i);
            let mut acc = F::zero();
            for (w, xv) in row.iter().zip(x) {
                acc = acc + *w * *xv;
            }
            out.push(acc);
        }
        Ok(Vector { data: out })
    }

    pub fn map(&self, f: impl Fn(F) -> F) -> Matrix<F> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f(a)).collect(),
        }
    }

    pub fn all_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }
}
