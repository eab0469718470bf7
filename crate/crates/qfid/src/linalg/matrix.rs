//! The dense square complex matrix type and multiplication.

use crate::{Complex64, Error, Result};
use faer::{c64, Mat, MatRef};
use std::ops::{Add, Index, IndexMut, Mul, Sub};

/// Dense `n×n` complex matrix, stored column-major.
///
/// Invariants: square, and entries are finite whenever constructed through a
/// validating path (file parsing, [`ComplexMatrix::from_rows`], state
/// validation). Arithmetic on already-valid inputs preserves finiteness in
/// practice and is not re-checked.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    /// Column-major: entry `(i, j)` lives at `data[j * dim + i]`.
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(dim);
        for j in 0..dim {
            for i in 0..dim {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Diagonal matrix from complex diagonal entries.
    pub fn from_diag(diag: &[Complex64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    /// Diagonal matrix from real diagonal entries.
    pub fn from_diag_real(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = Complex64::new(d, 0.0);
        }
        m
    }

    /// Build from row-major nested vectors, validating squareness and
    /// finiteness.
    pub fn from_rows(rows: Vec<Vec<Complex64>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::NotSquare {
                    rows: dim,
                    cols: row.len(),
                });
            }
            for (j, z) in row.iter().enumerate() {
                if !z.re.is_finite() || !z.im.is_finite() {
                    return Err(Error::NonFinite { row: i, col: j });
                }
            }
        }
        Ok(Self::from_fn(dim, |i, j| rows[i][j]))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[j * self.dim + i]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[j * self.dim + i] = v;
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).conj())
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `‖A − A†‖_F`, the Hermiticity defect.
    pub fn hermiticity_defect(&self) -> f64 {
        let mut acc = 0.0;
        for j in 0..self.dim {
            for i in 0..self.dim {
                acc += (self.get(i, j) - self.get(j, i).conj()).norm_sqr();
            }
        }
        acc.sqrt()
    }

    /// `(A + A†)/2`: removes rounding skew from products that are Hermitian
    /// in exact arithmetic.
    pub fn symmetrized(&self) -> Self {
        Self::from_fn(self.dim, |i, j| {
            (self.get(i, j) + self.get(j, i).conj()) * 0.5
        })
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.data
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Largest elementwise absolute difference against another matrix.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub(crate) fn as_faer(&self) -> MatRef<'_, c64> {
        MatRef::from_column_major_slice(&self.data, self.dim, self.dim)
    }

    pub(crate) fn from_faer(m: MatRef<'_, c64>) -> Self {
        debug_assert_eq!(m.nrows(), m.ncols());
        let dim = m.nrows();
        Self::from_fn(dim, |i, j| m[(i, j)])
    }

    pub(crate) fn from_faer_owned(m: Mat<c64>) -> Self {
        Self::from_faer(m.as_ref())
    }
}

impl std::fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "ComplexMatrix(dim = {})", self.dim)?;
        for i in 0..self.dim {
            for j in 0..self.dim {
                write!(f, " {:+.4e}{:+.4e}i", self.get(i, j).re, self.get(i, j).im)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[j * self.dim + i]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[j * self.dim + i]
    }
}

/// Matrix product. Fails on dimension mismatch; the result matches the naive
/// triple-loop product up to floating-point rounding.
pub fn matmul(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    Ok(ComplexMatrix::from_faer_owned(a.as_faer() * b.as_faer()))
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    /// Unchecked convenience product for internal use; panics on mismatched
    /// dimensions. Use [`matmul`] for fallible multiplication.
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        matmul(self, rhs).expect("dimension mismatch in matrix product")
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim);
        ComplexMatrix::from_fn(self.dim, |i, j| self.get(i, j) + rhs.get(i, j))
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim);
        ComplexMatrix::from_fn(self.dim, |i, j| self.get(i, j) - rhs.get(i, j))
    }
}
