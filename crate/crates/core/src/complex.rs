//! The complex field `C1` that every bicomplex computation reduces to.

pub use num_complex::Complex64 as Complex;

use crate::error::{Error, Result};

pub const ZERO: Complex = Complex::new(0.0, 0.0);
pub const ONE: Complex = Complex::new(1.0, 0.0);
pub const I: Complex = Complex::new(0.0, 1.0);

/// Constructs a complex number, rejecting NaN and infinite coordinates.
pub fn checked(re: f64, im: f64) -> Result<Complex> {
    if re.is_finite() && im.is_finite() {
        Ok(Complex::new(re, im))
    } else {
        Err(Error::InvalidArgument(format!(
            "non-finite complex coordinates ({re}, {im})"
        )))
    }
}

pub fn is_finite(z: Complex) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// `|a - b| <= tol` on each real coordinate; `tol == 0` is bitwise-value equality.
pub fn approx_eq(a: Complex, b: Complex, tol: f64) -> bool {
    if tol == 0.0 {
        a == b
    } else {
        (a.re - b.re).abs() <= tol && (a.im - b.im).abs() <= tol
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checked_rejects_non_finite() {
        assert!(checked(1.0, 2.0).is_ok());
        assert!(checked(f64::NAN, 0.0).is_err());
        assert!(checked(0.0, f64::INFINITY).is_err());
    }

    #[test]
    fn exact_and_approximate_equality() {
        let a = Complex::new(1.0, 2.0);
        let b = Complex::new(1.0 + 1e-14, 2.0);
        assert!(!approx_eq(a, b, 0.0));
        assert!(approx_eq(a, b, 1e-12));
        assert!(approx_eq(
            Complex::new(0.0, 0.0),
            Complex::new(-0.0, 0.0),
            0.0
        ));
    }
}
