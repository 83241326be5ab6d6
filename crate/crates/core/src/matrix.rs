//! Bicomplex matrices `C2^{m×n} = C1^{m×n} ×e C1^{m×n}`.
//!
//! A matrix `[ξij]` is kept as the pair `([ξ⁻ij], [ξ⁺ij]) = (A1, A2)`, so that
//! `[ξij] = e1 A1 + e2 A2`. Products, determinants, inverses and ranks are
//! computed on `A1` and `A2` separately.

use crate::bicomplex::BiComplex;
use crate::complex::Complex;
use crate::error::{Components, Error, Result};
use crate::linalg::CMatrix;
use crate::linmap::LinMap;
use crate::tolerance::Tolerances;
use crate::vector::BCVector;

#[derive(Debug, Clone, PartialEq)]
pub struct BCMatrix {
    minus: CMatrix,
    plus: CMatrix,
}

impl BCMatrix {
    /// `e1 A1 + e2 A2`.
    pub fn join(minus: CMatrix, plus: CMatrix) -> Result<Self> {
        if minus.shape() != plus.shape() {
            return Err(Error::dim(
                "matrix join",
                format!("{}x{}", minus.rows(), minus.cols()),
                format!("{}x{}", plus.rows(), plus.cols()),
            ));
        }
        Ok(BCMatrix { minus, plus })
    }

    pub fn split(&self) -> (CMatrix, CMatrix) {
        (self.minus.clone(), self.plus.clone())
    }

    pub fn into_split(self) -> (CMatrix, CMatrix) {
        (self.minus, self.plus)
    }

    pub fn minus(&self) -> &CMatrix {
        &self.minus
    }

    pub fn plus(&self) -> &CMatrix {
        &self.plus
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        BCMatrix {
            minus: CMatrix::zeros(rows, cols),
            plus: CMatrix::zeros(rows, cols),
        }
    }

    pub fn identity(n: usize) -> Self {
        BCMatrix {
            minus: CMatrix::identity(n),
            plus: CMatrix::identity(n),
        }
    }

    /// Builds from rows of bicomplex entries, with an explicit column count so
    /// that `m × 0` matrices survive.
    pub fn from_entries(rows: usize, cols: usize, entries: &[Vec<BiComplex>]) -> Result<Self> {
        if entries.len() != rows {
            return Err(Error::dim("matrix rows", rows, entries.len()));
        }
        if let Some(bad) = entries.iter().find(|r| r.len() != cols) {
            return Err(Error::dim("matrix columns", cols, bad.len()));
        }
        Ok(BCMatrix {
            minus: CMatrix::from_fn(rows, cols, |i, j| entries[i][j].minus()),
            plus: CMatrix::from_fn(rows, cols, |i, j| entries[i][j].plus()),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BiComplex) -> Self {
        let entries: Vec<Vec<BiComplex>> = (0..rows)
            .map(|i| (0..cols).map(|j| f(i, j)).collect())
            .collect();
        BCMatrix::from_entries(rows, cols, &entries).expect("shape by construction")
    }

    pub fn rows(&self) -> usize {
        self.minus.rows()
    }

    pub fn cols(&self) -> usize {
        self.minus.cols()
    }

    pub fn shape(&self) -> (usize, usize) {
        self.minus.shape()
    }

    pub fn is_square(&self) -> bool {
        self.minus.is_square()
    }

    /// Entry `(i, j)` as `join(A1[i,j], A2[i,j])`.
    pub fn entry(&self, i: usize, j: usize) -> BiComplex {
        BiComplex::join(self.minus[(i, j)], self.plus[(i, j)])
    }

    pub fn to_entries(&self) -> Vec<Vec<BiComplex>> {
        (0..self.rows())
            .map(|i| (0..self.cols()).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        Ok(BCMatrix {
            minus: self.minus.try_add(&other.minus)?,
            plus: self.plus.try_add(&other.plus)?,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        Ok(BCMatrix {
            minus: self.minus.try_sub(&other.minus)?,
            plus: self.plus.try_sub(&other.plus)?,
        })
    }

    pub fn scale_complex(&self, alpha: Complex) -> Self {
        BCMatrix {
            minus: self.minus.scale(alpha),
            plus: self.plus.scale(alpha),
        }
    }

    /// `η·M`. In particular `e1·M = join(M1, 0)`.
    pub fn scale(&self, eta: BiComplex) -> Self {
        BCMatrix {
            minus: self.minus.scale(eta.minus()),
            plus: self.plus.scale(eta.plus()),
        }
    }

    /// `join(M1 N1, M2 N2)`.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        Ok(BCMatrix {
            minus: self.minus.try_mul(&other.minus)?,
            plus: self.plus.try_mul(&other.plus)?,
        })
    }

    /// The bicomplex-linear action `v ↦ M v` on `C2^n`.
    pub fn mul_vec(&self, v: &BCVector) -> Result<BCVector> {
        let (x, y) = v.split();
        BCVector::join(&self.minus.mul_vec(&x)?, &self.plus.mul_vec(&y)?)
    }

    pub fn transpose(&self) -> Self {
        BCMatrix {
            minus: self.minus.transpose(),
            plus: self.plus.transpose(),
        }
    }

    /// `join(det M1, det M2)`.
    pub fn det(&self) -> Result<BiComplex> {
        Ok(BiComplex::join(self.minus.det()?, self.plus.det()?))
    }

    /// Whether `det M` is an invertible bicomplex number (neither zero nor a zero divisor).
    pub fn is_nonsingular(&self, tol: &Tolerances) -> Result<bool> {
        Ok(self.det()?.classify(tol.zero) == crate::bicomplex::Class::Invertible)
    }

    /// `join(M1⁻¹, M2⁻¹)`. The error names the component(s) that are singular.
    pub fn inverse(&self, tol: &Tolerances) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::dim(
                "inverse",
                "square matrix",
                format!("{}x{}", self.rows(), self.cols()),
            ));
        }
        let minus = self.minus.inverse(tol.pivot);
        let plus = self.plus.inverse(tol.pivot);
        match (minus, plus) {
            (Ok(minus), Ok(plus)) => Ok(BCMatrix { minus, plus }),
            (m, p) => Err(Error::NotInvertible(
                Components::from_flags(m.is_err(), p.is_err()).expect("one component failed"),
            )),
        }
    }

    /// `rank M1 + rank M2`.
    pub fn rank(&self, tol: &Tolerances) -> usize {
        self.minus.rank(tol.pivot) + self.plus.rank(tol.pivot)
    }

    /// The `2m × 2n` complex matrix `diag(M1, M2)`: the `C1`-linear action of
    /// `M` on `C2^n ≅ C1^{2n}`, in the ordered basis
    /// `e1 u_1, .., e1 u_n, e2 u_1, .., e2 u_n`.
    pub fn block_embedding(&self) -> CMatrix {
        CMatrix::block_diag(&self.minus, &self.plus)
    }

    /// The unit matrices `e1 E_ij` followed by `e2 E_ij`, row-major in `(i, j)`.
    pub fn standard_spanning_set(rows: usize, cols: usize) -> Vec<BCMatrix> {
        [BiComplex::E1, BiComplex::E2]
            .into_iter()
            .flat_map(|e| {
                (0..rows * cols).map(move |k| {
                    let unit = BCMatrix::from_fn(rows, cols, |i, j| {
                        if i * cols + j == k {
                            BiComplex::ONE
                        } else {
                            BiComplex::ZERO
                        }
                    });
                    unit.scale(e)
                })
            })
            .collect()
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.minus.approx_eq(&other.minus, tol) && self.plus.approx_eq(&other.plus, tol)
    }

    /// Largest modulus over both components.
    pub fn max_abs(&self) -> f64 {
        self.minus.max_abs().max(self.plus.max_abs())
    }

    /// The map `e1 M1 + e2 M2` acting on standard coordinates.
    pub fn to_linmap(&self) -> LinMap {
        LinMap::from(self.clone())
    }
}
