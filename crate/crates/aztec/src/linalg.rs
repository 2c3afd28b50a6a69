//! Dense matrices over a [`Field`], with pivoted elimination.

use std::ops::{Index, IndexMut};

use crate::error::{AztecError, Result};
use crate::scalar::Field;

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let data = (0..rows).flat_map(|r| (0..cols).map(move |c| (r, c))).map(|(r, c)| f(r, c)).collect();
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn mul(&self, other: &Matrix<F>) -> Result<Matrix<F>> {
        if self.cols != other.rows {
            return Err(AztecError::Unsupported(format!(
                "shape mismatch {}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(Field::size).fold(0.0, f64::max)
    }

    /// Largest entry magnitude of `self - other`.
    pub fn max_abs_diff(&self, other: &Matrix<F>) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a.clone() - b.clone()).size())
            .fold(0.0, f64::max)
    }

    /// Drops one row and one column.
    pub fn minor(&self, row: usize, col: usize) -> Matrix<F> {
        Self::from_fn(self.rows - 1, self.cols - 1, |r, c| {
            self[(r + usize::from(r >= row), c + usize::from(c >= col))].clone()
        })
    }

    fn pivot(&self, col: usize, start: usize) -> Option<usize> {
        if F::EXACT {
            (start..self.rows).find(|&r| !self[(r, col)].is_zero())
        } else {
            (start..self.rows)
                .map(|r| (r, self[(r, col)].size()))
                .filter(|(_, s)| *s > 0.0)
                .max_by(|x, y| x.1.total_cmp(&y.1))
                .map(|(r, _)| r)
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    /// Determinant by Gaussian elimination with partial pivoting. The empty
    /// matrix has determinant one.
    pub fn det(&self) -> Result<F> {
        self.require_square()?;
        let mut m = self.clone();
        let mut det = F::one();
        for col in 0..m.cols {
            let Some(p) = m.pivot(col, col) else {
                return Ok(F::zero());
            };
            if p != col {
                m.swap_rows(p, col);
                det = -det;
            }
            let pv = m[(col, col)].clone();
            det = det * pv.clone();
            for r in col + 1..m.rows {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let f = m[(r, col)].clone() / pv.clone();
                for c in col..m.cols {
                    let v = m[(col, c)].clone();
                    if !v.is_zero() {
                        m[(r, c)] = m[(r, c)].clone() - f.clone() * v;
                    }
                }
            }
        }
        Ok(det)
    }

    /// Inverse by Gauss-Jordan elimination. Reports singularity when the
    /// determinant is zero (exact) or below `1e-12 * max_abs^dim` (floating).
    pub fn inverse(&self, context: &str) -> Result<Matrix<F>> {
        self.require_square()?;
        let n = self.rows;
        let scale = self.max_abs();
        let mut m = self.clone();
        let mut inv = Self::identity(n);
        // With partial pivoting a pivot this far below the largest entry
        // means the columns are dependent to working precision.
        let floor = PIVOT_TOL * scale;
        for col in 0..n {
            let p = m.pivot(col, col).ok_or_else(|| singular(context))?;
            m.swap_rows(p, col);
            inv.swap_rows(p, col);
            let pv = m[(col, col)].clone();
            if !F::EXACT && pv.size() <= floor {
                return Err(singular(context));
            }
            let ip = F::one() / pv;
            for c in 0..n {
                m[(col, c)] = m[(col, c)].clone() * ip.clone();
                inv[(col, c)] = inv[(col, c)].clone() * ip.clone();
            }
            for r in 0..n {
                if r == col || m[(r, col)].is_zero() {
                    continue;
                }
                let f = m[(r, col)].clone();
                for c in 0..n {
                    let v = m[(col, c)].clone();
                    if !v.is_zero() {
                        m[(r, c)] = m[(r, c)].clone() - f.clone() * v;
                    }
                    let w = inv[(col, c)].clone();
                    if !w.is_zero() {
                        inv[(r, c)] = inv[(r, c)].clone() - f.clone() * w;
                    }
                }
            }
        }
        Ok(inv)
    }

    fn require_square(&self) -> Result<()> {
        if self.rows == self.cols {
            Ok(())
        } else {
            Err(AztecError::Unsupported(format!("matrix is {}x{}, not square", self.rows, self.cols)))
        }
    }
}

/// Relative pivot size treated as zero on floating backends.
pub const PIVOT_TOL: f64 = 1e-13;

fn singular(context: &str) -> AztecError {
    AztecError::Singular { context: context.to_string() }
}

impl<F> Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (r, c): (usize, usize)) -> &F {
        &self.data[r * self.cols + c]
    }
}

impl<F> IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut F {
        &mut self.data[r * self.cols + c]
    }
}
