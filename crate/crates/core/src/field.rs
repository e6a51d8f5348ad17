//! Exact scalars and dense matrices over them.
//!
//! Everything upstream (the matrix category, the two-level calculus, the
//! biproduct witnesses) reduces to operations on [`DenseMatrix`]. The matrix
//! type is generic over the scalar so the algebra stays scalar-agnostic; the
//! crate root pins the concrete instantiation [`crate::Rat`] used by the rest
//! of the tower. All arithmetic is exact: every law in the test suites is an
//! equality at tolerance zero, so the scalar must have trustworthy `==`.
//!
//! Empty matrices (zero rows or zero columns) are first-class values: the
//! weakening isomorphisms of the upper layers delete dimension-0 components,
//! so composition has to be total on empty shapes.

use std::fmt;
use std::ops::{Add, Div, Index, IndexMut, Mul, Neg, Sub};

use num::traits::{One, Zero};

use crate::error::{Error, Result};

/// Commutative-ring scalar with exact equality.
pub trait Scalar:
    Clone
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// Scalar that additionally supports exact division; required for inverses.
pub trait FieldScalar: Scalar + Div<Output = Self> {}

impl<T> FieldScalar for T where T: Scalar + Div<Output = T> {}

/// Rectangular matrix in row-major storage.
///
/// Row-major layout is a global convention: the Kronecker block layout and
/// every decomposition convention in the upper layers inherit it.
#[derive(Clone, PartialEq, Eq)]
pub struct DenseMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> DenseMatrix<T> {
    /// Builds a matrix from row-major data. Errors when the data length
    /// does not equal `rows * cols`.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "matrix data length {} does not match {}x{}",
                data.len(),
                rows,
                cols
            )));
        }
        Ok(DenseMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(DenseMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        DenseMatrix { rows, cols, data }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self[(i, j)].is_one()
                    } else {
                        self[(i, j)].is_zero()
                    }
                })
            })
    }

    /// Standard matrix product; requires `self.cols == other.rows`.
    pub fn mat_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = a.clone() * other[(k, j)].clone();
                    let cur = out[(i, j)].clone();
                    out[(i, j)] = cur + t;
                }
            }
        }
        Ok(out)
    }

    /// Entrywise sum; requires equal shapes.
    pub fn mat_add(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn scale(&self, s: &T) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| s.clone() * a.clone()).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a.clone()).collect(),
        }
    }

    /// Kronecker product in row-major block layout: block `(i, j)` of the
    /// result equals `self[i, j] * other`.
    pub fn kron(&self, other: &Self) -> Self {
        Self::from_fn(
            self.rows * other.rows,
            self.cols * other.cols,
            |i, j| {
                self[(i / other.rows, j / other.cols)].clone()
                    * other[(i % other.rows, j % other.cols)].clone()
            },
        )
    }

    /// Block-diagonal sum `diag(self, other)`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.rows + other.rows, self.cols + other.cols);
        out.paste(0, 0, self);
        out.paste(self.rows, self.cols, other);
        out
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn paste(&mut self, r0: usize, c0: usize, block: &Self) {
        debug_assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(r0 + i, c0 + j)] = block[(i, j)].clone();
            }
        }
    }

    /// Extracts the `height x width` block whose top-left corner is `(r0, c0)`.
    pub fn submatrix(&self, r0: usize, c0: usize, height: usize, width: usize) -> Result<Self> {
        if r0 + height > self.rows || c0 + width > self.cols {
            return Err(Error::Shape(format!(
                "submatrix {}x{}+{}+{} out of bounds for {}x{}",
                height, width, r0, c0, self.rows, self.cols
            )));
        }
        Ok(Self::from_fn(height, width, |i, j| {
            self[(r0 + i, c0 + j)].clone()
        }))
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::Shape(format!(
                "cannot stack {}x{} over {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Self {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Places `self` to the left of `other`.
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::Shape(format!(
                "cannot concatenate {}x{} with {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zero(self.rows, self.cols + other.cols);
        out.paste(0, 0, self);
        out.paste(0, self.cols, other);
        Ok(out)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }
}

impl<T: FieldScalar> DenseMatrix<T> {
    /// Exact two-sided inverse by Gauss-Jordan elimination, or `None` when
    /// the matrix is not square or singular. The 0x0 matrix is invertible.
    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[(r, col)].is_zero())?;
            if pivot != col {
                a.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let p = a[(col, col)].clone();
            for j in 0..n {
                a[(col, j)] = a[(col, j)].clone() / p.clone();
                inv[(col, j)] = inv[(col, j)].clone() / p.clone();
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for j in 0..n {
                    let t = f.clone() * a[(col, j)].clone();
                    a[(r, j)] = a[(r, j)].clone() - t;
                    let t = f.clone() * inv[(col, j)].clone();
                    inv[(r, j)] = inv[(r, j)].clone() - t;
                }
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, r1: usize, r2: usize) {
        if r1 == r2 {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(r1 * self.cols + j, r2 * self.cols + j);
        }
    }
}

impl<T> Index<(usize, usize)> for DenseMatrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for DenseMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Debug> fmt::Debug for DenseMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}x{}:", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, " [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:?}", self.data[i * self.cols + j])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
