//! Dense complex linear algebra: the backend every bicomplex computation
//! reduces to.
//!
//! Elimination uses partial pivoting by maximum modulus, with ties going to
//! the lowest row index. A candidate pivot counts as zero when its modulus is
//! at most `pivot_tol` times the largest modulus of the same column in the
//! input matrix, so rank decisions are invariant under column scaling.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::complex::{self, Complex};
use crate::error::{Error, Result};

pub type CVector = Vec<Complex>;

/// Row-major `rows × cols` complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMatrix {
            rows,
            cols,
            data: vec![complex::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = complex::ONE;
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Complex>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::dim("matrix construction", rows * cols, data.len()));
        }
        Ok(CMatrix { rows, cols, data })
    }

    /// Builds from a list of rows; all rows must have the same length.
    pub fn from_rows(rows: &[Vec<Complex>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::dim("matrix rows", cols, row.len()));
            }
            data.extend_from_slice(row);
        }
        Ok(CMatrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Real matrix from nested slices. Panics on ragged input.
    pub fn from_real(rows: &[&[f64]]) -> Self {
        let rows: Vec<Vec<Complex>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Complex::new(x, 0.0)).collect())
            .collect();
        CMatrix::from_rows(&rows).expect("ragged rows")
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        CMatrix { rows, cols, data }
    }

    /// Matrix whose columns are `columns`, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[CVector]) -> Result<Self> {
        for c in columns {
            if c.len() != rows {
                return Err(Error::dim("matrix columns", rows, c.len()));
            }
        }
        Ok(CMatrix::from_fn(rows, columns.len(), |i, j| columns[j][i]))
    }

    /// `diag(a, b)`.
    pub fn block_diag(a: &CMatrix, b: &CMatrix) -> Self {
        let mut out = CMatrix::zeros(a.rows + b.rows, a.cols + b.cols);
        for i in 0..a.rows {
            for j in 0..a.cols {
                out[(i, j)] = a[(i, j)];
            }
        }
        for i in 0..b.rows {
            for j in 0..b.cols {
                out[(a.rows + i, a.cols + j)] = b[(i, j)];
            }
        }
        out
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[Complex] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Complex] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> CVector {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Complex>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        CMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    fn check_same_shape(&self, other: &Self, op: &'static str) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::dim(
                op,
                format!("{}x{}", self.rows, self.cols),
                format!("{}x{}", other.rows, other.cols),
            ));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other, "matrix addition")?;
        Ok(self.zip_map(other, |a, b| a + b))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other, "matrix subtraction")?;
        Ok(self.zip_map(other, |a, b| a - b))
    }

    fn zip_map(&self, other: &Self, f: impl Fn(Complex, Complex) -> Complex) -> Self {
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, alpha: Complex) -> Self {
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| alpha * x).collect(),
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::dim("matrix product", self.cols, other.rows));
        }
        let mut out = CMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == complex::ZERO {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Complex]) -> Result<CVector> {
        if v.len() != self.cols {
            return Err(Error::dim("matrix-vector product", self.cols, v.len()));
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(&a, &b)| a * b).sum())
            .collect())
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Maximum absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|z| z.norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// Entrywise comparison within `tol` (`0.0` = exact). Shapes must agree.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.shape() == other.shape()
            && self
                .data
                .iter()
                .zip(&other.data)
                .all(|(&a, &b)| complex::approx_eq(a, b, tol))
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.data
            .iter()
            .all(|&z| complex::approx_eq(z, complex::ZERO, tol))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Gauss-Jordan elimination over the first `pivot_cols` columns, in place.
    /// Returns the pivot column of each nonzero row.
    fn gauss_jordan(&mut self, pivot_cols: usize, pivot_tol: f64) -> Vec<usize> {
        let scales: Vec<f64> = (0..pivot_cols)
            .map(|j| {
                (0..self.rows)
                    .map(|i| self[(i, j)].norm())
                    .fold(0.0, f64::max)
            })
            .collect();
        let mut pivots = Vec::new();
        let mut row = 0;
        for (j, &scale) in scales.iter().enumerate() {
            if row == self.rows {
                break;
            }
            let mut best = row;
            let mut best_mod = self[(row, j)].norm();
            for i in row + 1..self.rows {
                let m = self[(i, j)].norm();
                if m > best_mod {
                    best = i;
                    best_mod = m;
                }
            }
            if best_mod == 0.0 || best_mod <= pivot_tol * scale {
                for i in row..self.rows {
                    self[(i, j)] = complex::ZERO;
                }
                continue;
            }
            self.swap_rows(row, best);
            let inv_pivot = self[(row, j)].inv();
            for k in j..self.cols {
                self[(row, k)] *= inv_pivot;
            }
            self[(row, j)] = complex::ONE;
            for i in 0..self.rows {
                if i == row {
                    continue;
                }
                let factor = self[(i, j)];
                if factor == complex::ZERO {
                    continue;
                }
                for k in j..self.cols {
                    let delta = factor * self[(row, k)];
                    self[(i, k)] -= delta;
                }
                self[(i, j)] = complex::ZERO;
            }
            pivots.push(j);
            row += 1;
        }
        pivots
    }

    /// Reduced row-echelon form.
    pub fn rref(&self, pivot_tol: f64) -> Rref {
        let mut reduced = self.clone();
        let pivots = reduced.gauss_jordan(self.cols, pivot_tol);
        Rref { reduced, pivots }
    }

    pub fn rank(&self, pivot_tol: f64) -> usize {
        self.rref(pivot_tol).rank()
    }

    /// Null-space basis from the free columns of the RREF, in ascending free-column order.
    /// The vector for free column `f` has a 1 at `f` and zeros at the other free columns.
    pub fn kernel_basis(&self, pivot_tol: f64) -> Vec<CVector> {
        let Rref { reduced, pivots } = self.rref(pivot_tol);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![complex::ZERO; self.cols];
                v[f] = complex::ONE;
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -reduced[(i, f)];
                }
                v
            })
            .collect()
    }

    /// The pivot columns of the input matrix, in ascending order.
    pub fn image_basis(&self, pivot_tol: f64) -> Vec<CVector> {
        self.image_pivots(pivot_tol)
            .into_iter()
            .map(|j| self.column(j))
            .collect()
    }

    /// Indices of the columns returned by [`CMatrix::image_basis`].
    pub fn image_pivots(&self, pivot_tol: f64) -> Vec<usize> {
        self.rref(pivot_tol).pivots
    }

    /// A particular solution of `A x = b` with every free variable set to zero.
    pub fn solve(&self, b: &[Complex], pivot_tol: f64) -> Result<CVector> {
        if b.len() != self.rows {
            return Err(Error::dim("linear system", self.rows, b.len()));
        }
        let n = self.cols;
        let mut aug = CMatrix::from_fn(
            self.rows,
            n + 1,
            |i, j| {
                if j < n {
                    self[(i, j)]
                } else {
                    b[i]
                }
            },
        );
        let pivots = aug.gauss_jordan(n + 1, pivot_tol);
        if pivots.last() == Some(&n) {
            return Err(Error::Inconsistent);
        }
        let mut x = vec![complex::ZERO; n];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = aug[(i, n)];
        }
        Ok(x)
    }

    /// Determinant as the signed product of the elimination pivots.
    pub fn det(&self) -> Result<Complex> {
        if !self.is_square() {
            return Err(Error::dim(
                "determinant",
                "square matrix",
                format!("{}x{}", self.rows, self.cols),
            ));
        }
        let n = self.rows;
        let mut work = self.clone();
        let mut det = complex::ONE;
        for j in 0..n {
            let mut best = j;
            let mut best_mod = work[(j, j)].norm();
            for i in j + 1..n {
                let m = work[(i, j)].norm();
                if m > best_mod {
                    best = i;
                    best_mod = m;
                }
            }
            if best_mod == 0.0 {
                return Ok(complex::ZERO);
            }
            if best != j {
                work.swap_rows(j, best);
                det = -det;
            }
            let pivot = work[(j, j)];
            det *= pivot;
            for i in j + 1..n {
                let factor = work[(i, j)] / pivot;
                if factor == complex::ZERO {
                    continue;
                }
                for k in j..n {
                    let delta = factor * work[(j, k)];
                    work[(i, k)] -= delta;
                }
            }
        }
        Ok(det)
    }

    /// Gauss-Jordan inverse; [`Error::Singular`] when a pivot falls below the threshold.
    pub fn inverse(&self, pivot_tol: f64) -> Result<CMatrix> {
        if !self.is_square() {
            return Err(Error::dim(
                "inverse",
                "square matrix",
                format!("{}x{}", self.rows, self.cols),
            ));
        }
        let n = self.rows;
        let mut aug = CMatrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)]
            } else if j - n == i {
                complex::ONE
            } else {
                complex::ZERO
            }
        });
        let pivots = aug.gauss_jordan(n, pivot_tol);
        if pivots.len() < n {
            return Err(Error::Singular);
        }
        Ok(CMatrix::from_fn(n, n, |i, j| aug[(i, n + j)]))
    }

    /// Crude condition estimate `‖A‖∞ ‖A⁻¹‖∞`; `None` for singular or non-square input.
    pub fn condition_estimate(&self, pivot_tol: f64) -> Option<f64> {
        let inv = self.inverse(pivot_tol).ok()?;
        Some(self.norm_inf() * inv.norm_inf())
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = Complex;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Complex {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let items: Vec<String> = self
                    .row(i)
                    .iter()
                    .map(|&z| crate::text::format_complex(z))
                    .collect();
                format!("[{}]", items.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// Result of [`CMatrix::rref`].
#[derive(Debug, Clone, PartialEq)]
pub struct Rref {
    pub reduced: CMatrix,
    /// Pivot column of each nonzero row, ascending.
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// An ordered basis of `C1^n` with its cached inverse basis matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Basis {
    vectors: Vec<CVector>,
    inverse: CMatrix,
}

impl Basis {
    /// Accepts `n` vectors of length `n` whose column matrix is invertible.
    pub fn new(vectors: Vec<CVector>, pivot_tol: f64) -> Result<Self> {
        let n = vectors.len();
        if let Some(bad) = vectors.iter().find(|v| v.len() != n) {
            return Err(Error::InvalidBasis(format!(
                "{n} vectors of length {} do not form a square system",
                bad.len()
            )));
        }
        let matrix = CMatrix::from_columns(n, &vectors)?;
        let inverse = matrix
            .inverse(pivot_tol)
            .map_err(|_| Error::InvalidBasis("vectors are linearly dependent".into()))?;
        Ok(Basis { vectors, inverse })
    }

    pub fn standard(n: usize) -> Self {
        let vectors = (0..n).map(|j| CMatrix::identity(n).column(j)).collect();
        Basis {
            vectors,
            inverse: CMatrix::identity(n),
        }
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[CVector] {
        &self.vectors
    }

    /// The matrix whose columns are the basis vectors.
    pub fn matrix(&self) -> CMatrix {
        CMatrix::from_columns(self.dim(), &self.vectors).expect("basis invariant")
    }

    pub fn inverse_matrix(&self) -> &CMatrix {
        &self.inverse
    }

    /// The coordinates `c` with `Σ c_j b_j = v`.
    pub fn coords(&self, v: &[Complex]) -> Result<CVector> {
        if v.len() != self.dim() {
            return Err(Error::dim("basis coordinates", self.dim(), v.len()));
        }
        self.inverse.mul_vec(v)
    }
}
