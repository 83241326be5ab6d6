//! Tuples in `C2^n = C1^n ×e C1^n`.

use std::ops::{Add, Index, Neg, Sub};

use crate::bicomplex::BiComplex;
use crate::complex::{self, Complex};
use crate::error::{Error, Result};
use crate::linalg::CVector;

/// Selects one of the idempotent elements `e1` (minus part) or `e2` (plus part).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Part {
    Minus,
    Plus,
}

impl Part {
    pub fn element(self) -> BiComplex {
        match self {
            Part::Minus => BiComplex::E1,
            Part::Plus => BiComplex::E2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct BCVector {
    entries: Vec<BiComplex>,
}

impl BCVector {
    pub fn new(entries: Vec<BiComplex>) -> Self {
        BCVector { entries }
    }

    pub fn zeros(n: usize) -> Self {
        BCVector::new(vec![BiComplex::ZERO; n])
    }

    /// `e1 x + e2 y`, entrywise `join(x_i, y_i)`.
    pub fn join(minus: &[Complex], plus: &[Complex]) -> Result<Self> {
        if minus.len() != plus.len() {
            return Err(Error::dim("vector join", minus.len(), plus.len()));
        }
        Ok(BCVector::new(
            minus
                .iter()
                .zip(plus)
                .map(|(&m, &p)| BiComplex::join(m, p))
                .collect(),
        ))
    }

    /// `(ξ⁻_1..ξ⁻_n), (ξ⁺_1..ξ⁺_n)`.
    pub fn split(&self) -> (CVector, CVector) {
        self.entries.iter().map(|x| x.split()).unzip()
    }

    pub fn minus(&self) -> CVector {
        self.entries.iter().map(BiComplex::minus).collect()
    }

    pub fn plus(&self) -> CVector {
        self.entries.iter().map(BiComplex::plus).collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[BiComplex] {
        &self.entries
    }

    pub fn iter(&self) -> std::slice::Iter<'_, BiComplex> {
        self.entries.iter()
    }

    fn check_len(&self, other: &Self, op: &'static str) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::dim(op, self.len(), other.len()));
        }
        Ok(())
    }

    /// Exact comparison of both idempotent components of every entry.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.approx_eq(other, 0.0)
    }

    /// Componentwise comparison within `tol`.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> Result<bool> {
        self.check_len(other, "vector comparison")?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .all(|(a, b)| a.approx_eq(b, tol)))
    }

    /// `e1·v` keeps only the minus parts, `e2·v` only the plus parts.
    pub fn scale_e(&self, part: Part) -> Self {
        self.scale(part.element())
    }

    /// `η·v`, entrywise.
    pub fn scale(&self, eta: BiComplex) -> Self {
        BCVector::new(self.entries.iter().map(|&x| eta * x).collect())
    }

    pub fn scale_complex(&self, alpha: Complex) -> Self {
        BCVector::new(self.entries.iter().map(|x| x.scale(alpha)).collect())
    }

    /// Entrywise product.
    pub fn hadamard(&self, other: &Self) -> Result<Self> {
        self.check_len(other, "hadamard product")?;
        Ok(self.zip_with(other, |a, b| a * b))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_len(other, "vector addition")?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_len(other, "vector subtraction")?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(BiComplex, BiComplex) -> BiComplex) -> Self {
        BCVector::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        )
    }

    /// Largest modulus over all idempotent components.
    pub fn norm_inf(&self) -> f64 {
        self.entries
            .iter()
            .flat_map(|x| [x.minus().norm(), x.plus().norm()])
            .fold(0.0, f64::max)
    }

    /// The `j`-th standard unit vector of length `n`, lifted to `C2^n`.
    pub fn unit(n: usize, j: usize) -> Self {
        let mut v = BCVector::zeros(n);
        v.entries[j] = BiComplex::ONE;
        v
    }

    /// The `2n` vectors `e1 u_j`, `e2 u_j` built from the standard basis of `C1^n`,
    /// all minus-part vectors first.
    pub fn standard_spanning_set(n: usize) -> Vec<BCVector> {
        [Part::Minus, Part::Plus]
            .into_iter()
            .flat_map(|part| (0..n).map(move |j| BCVector::unit(n, j).scale_e(part)))
            .collect()
    }

    /// Coordinates in `C1^{2n}`: the minus parts followed by the plus parts.
    pub fn stacked(&self) -> CVector {
        let (mut minus, plus) = self.split();
        minus.extend(plus);
        minus
    }
}

impl From<Vec<BiComplex>> for BCVector {
    fn from(entries: Vec<BiComplex>) -> Self {
        BCVector::new(entries)
    }
}

impl FromIterator<BiComplex> for BCVector {
    fn from_iter<I: IntoIterator<Item = BiComplex>>(iter: I) -> Self {
        BCVector::new(iter.into_iter().collect())
    }
}

impl Index<usize> for BCVector {
    type Output = BiComplex;
    fn index(&self, i: usize) -> &BiComplex {
        &self.entries[i]
    }
}

impl<'a> IntoIterator for &'a BCVector {
    type Item = &'a BiComplex;
    type IntoIter = std::slice::Iter<'a, BiComplex>;
    fn into_iter(self) -> Self::IntoIter {
        self.entries.iter()
    }
}

/// Panics on length mismatch; use [`BCVector::try_add`] otherwise.
impl Add for &BCVector {
    type Output = BCVector;
    fn add(self, rhs: &BCVector) -> BCVector {
        self.try_add(rhs).expect("vector lengths differ")
    }
}

/// Panics on length mismatch; use [`BCVector::try_sub`] otherwise.
impl Sub for &BCVector {
    type Output = BCVector;
    fn sub(self, rhs: &BCVector) -> BCVector {
        self.try_sub(rhs).expect("vector lengths differ")
    }
}

impl Neg for &BCVector {
    type Output = BCVector;
    fn neg(self) -> BCVector {
        self.scale_complex(-complex::ONE)
    }
}
