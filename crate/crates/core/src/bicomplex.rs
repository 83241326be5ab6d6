//! Bicomplex scalars in idempotent form.
//!
//! A bicomplex number `ξ = u1 + i1 u2 + i2 u3 + i1 i2 u4 = z1 + i2 z2` is kept
//! as its pair of idempotent components
//!
//! ```text
//! ξ⁻ = z1 - i1 z2,    ξ⁺ = z1 + i1 z2,    ξ = ξ⁻ e1 + ξ⁺ e2.
//! ```
//!
//! Multiplication, classification and inversion act on each component
//! independently, so they are exact in this representation. The cartesian
//! forms are computed on demand.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use crate::complex::{self, Complex};
use crate::error::{Error, Result};

/// Position of a bicomplex number with respect to the ring structure of `C2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Class {
    Zero,
    /// Nonzero with exactly one vanishing idempotent component.
    ZeroDivisor,
    Invertible,
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct BiComplex {
    minus: Complex,
    plus: Complex,
}

impl BiComplex {
    pub const ZERO: BiComplex = BiComplex::join(complex::ZERO, complex::ZERO);
    pub const ONE: BiComplex = BiComplex::join(complex::ONE, complex::ONE);
    /// `e1 = (1 + i1 i2) / 2`.
    pub const E1: BiComplex = BiComplex::join(complex::ONE, complex::ZERO);
    /// `e2 = (1 - i1 i2) / 2`.
    pub const E2: BiComplex = BiComplex::join(complex::ZERO, complex::ONE);
    pub const I1: BiComplex = BiComplex::join(complex::I, complex::I);
    pub const I2: BiComplex = BiComplex::join(Complex::new(0.0, -1.0), complex::I);

    /// `ξ = ξ⁻ e1 + ξ⁺ e2`. The stored representation is exactly `(minus, plus)`.
    pub const fn join(minus: Complex, plus: Complex) -> Self {
        BiComplex { minus, plus }
    }

    /// Like [`BiComplex::join`], but rejects non-finite components.
    pub fn try_join(minus: Complex, plus: Complex) -> Result<Self> {
        if complex::is_finite(minus) && complex::is_finite(plus) {
            Ok(Self::join(minus, plus))
        } else {
            Err(Error::InvalidArgument(format!(
                "non-finite idempotent components ({minus}, {plus})"
            )))
        }
    }

    /// `ξ = z1 + i2 z2`.
    pub fn from_complex_pair(z1: Complex, z2: Complex) -> Result<Self> {
        if !(complex::is_finite(z1) && complex::is_finite(z2)) {
            return Err(Error::InvalidArgument(format!(
                "non-finite complex pair ({z1}, {z2})"
            )));
        }
        let i_z2 = complex::I * z2;
        Ok(Self::join(z1 - i_z2, z1 + i_z2))
    }

    /// `ξ = u1 + i1 u2 + i2 u3 + i1 i2 u4`.
    pub fn from_cartesian(u1: f64, u2: f64, u3: f64, u4: f64) -> Result<Self> {
        let z1 = complex::checked(u1, u2)?;
        let z2 = complex::checked(u3, u4)?;
        Self::from_complex_pair(z1, z2)
    }

    /// A complex number `x + y i1`, embedded with equal components.
    pub const fn from_complex(z: Complex) -> Self {
        Self::join(z, z)
    }

    pub const fn from_real(x: f64) -> Self {
        Self::from_complex(Complex::new(x, 0.0))
    }

    /// The idempotent component `ξ⁻`.
    #[inline]
    pub fn minus(&self) -> Complex {
        self.minus
    }

    /// The idempotent component `ξ⁺`.
    #[inline]
    pub fn plus(&self) -> Complex {
        self.plus
    }

    #[inline]
    pub fn split(&self) -> (Complex, Complex) {
        (self.minus, self.plus)
    }

    /// `(z1, z2)` with `ξ = z1 + i2 z2`.
    pub fn to_complex_pair(&self) -> (Complex, Complex) {
        let z1 = (self.minus + self.plus) * 0.5;
        let z2 = complex::I * (self.minus - self.plus) * 0.5;
        (z1, z2)
    }

    /// `[u1, u2, u3, u4]` with `ξ = u1 + i1 u2 + i2 u3 + i1 i2 u4`.
    pub fn to_cartesian(&self) -> [f64; 4] {
        let (z1, z2) = self.to_complex_pair();
        [z1.re, z1.im, z2.re, z2.im]
    }

    pub fn is_finite(&self) -> bool {
        complex::is_finite(self.minus) && complex::is_finite(self.plus)
    }

    /// Classifies by the modulus of each idempotent component against `zero_tol`.
    pub fn classify(&self, zero_tol: f64) -> Class {
        let minus_zero = self.minus.norm() <= zero_tol;
        let plus_zero = self.plus.norm() <= zero_tol;
        match (minus_zero, plus_zero) {
            (true, true) => Class::Zero,
            (true, false) | (false, true) => Class::ZeroDivisor,
            (false, false) => Class::Invertible,
        }
    }

    /// `join(1/ξ⁻, 1/ξ⁺)`; zero and zero divisors are rejected.
    pub fn inverse(&self, zero_tol: f64) -> Result<Self> {
        match self.classify(zero_tol) {
            Class::Invertible => Ok(Self::join(self.minus.inv(), self.plus.inv())),
            class => Err(Error::ScalarNotInvertible(class)),
        }
    }

    /// Multiplication by a complex scalar, applied to both components.
    pub fn scale(&self, alpha: Complex) -> Self {
        Self::join(alpha * self.minus, alpha * self.plus)
    }

    /// Componentwise comparison within `tol` (`0.0` = exact).
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        complex::approx_eq(self.minus, other.minus, tol)
            && complex::approx_eq(self.plus, other.plus, tol)
    }

    /// Formats in cartesian form `a+bi1+ci2+di1i2`.
    pub fn to_cartesian_string(&self) -> String {
        crate::text::format_cartesian(self)
    }
}

impl From<Complex> for BiComplex {
    fn from(z: Complex) -> Self {
        BiComplex::from_complex(z)
    }
}

impl From<f64> for BiComplex {
    fn from(x: f64) -> Self {
        BiComplex::from_real(x)
    }
}

impl Add for BiComplex {
    type Output = BiComplex;
    fn add(self, rhs: BiComplex) -> BiComplex {
        BiComplex::join(self.minus + rhs.minus, self.plus + rhs.plus)
    }
}

impl Sub for BiComplex {
    type Output = BiComplex;
    fn sub(self, rhs: BiComplex) -> BiComplex {
        BiComplex::join(self.minus - rhs.minus, self.plus - rhs.plus)
    }
}

impl Neg for BiComplex {
    type Output = BiComplex;
    fn neg(self) -> BiComplex {
        BiComplex::join(-self.minus, -self.plus)
    }
}

impl Mul for BiComplex {
    type Output = BiComplex;
    fn mul(self, rhs: BiComplex) -> BiComplex {
        BiComplex::join(self.minus * rhs.minus, self.plus * rhs.plus)
    }
}

impl Mul<Complex> for BiComplex {
    type Output = BiComplex;
    fn mul(self, rhs: Complex) -> BiComplex {
        self.scale(rhs)
    }
}

impl AddAssign for BiComplex {
    fn add_assign(&mut self, rhs: BiComplex) {
        *self = *self + rhs;
    }
}

impl SubAssign for BiComplex {
    fn sub_assign(&mut self, rhs: BiComplex) {
        *self = *self - rhs;
    }
}

impl MulAssign for BiComplex {
    fn mul_assign(&mut self, rhs: BiComplex) {
        *self = *self * rhs;
    }
}

impl Sum for BiComplex {
    fn sum<I: Iterator<Item = BiComplex>>(iter: I) -> Self {
        iter.fold(BiComplex::ZERO, Add::add)
    }
}

impl Product for BiComplex {
    fn product<I: Iterator<Item = BiComplex>>(iter: I) -> Self {
        iter.fold(BiComplex::ONE, Mul::mul)
    }
}

/// Idempotent form; see [`crate::text`].
impl fmt::Display for BiComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::format_idempotent(self))
    }
}

impl FromStr for BiComplex {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        crate::text::parse_bicomplex(s)
    }
}
