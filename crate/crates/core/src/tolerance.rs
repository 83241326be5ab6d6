//! Numerical thresholds for decisions that are exact in theory.

/// Thresholds used when a floating-point computation has to make a discrete decision.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Pivot threshold, relative to the largest modulus of the original column.
    pub pivot: f64,
    /// Absolute modulus below which an idempotent component counts as zero.
    pub zero: f64,
    /// Absolute residual bound for kernel vectors, coordinates and solutions.
    pub resid: f64,
    /// Componentwise slack for equality of vectors, matrices and maps. `0.0` means exact.
    pub eq: f64,
}

impl Tolerances {
    pub const DEFAULT_PIVOT: f64 = 1e-10;
    pub const DEFAULT_ZERO: f64 = 1e-10;
    pub const DEFAULT_RESID: f64 = 1e-9;

    pub fn with_pivot(mut self, pivot: f64) -> Self {
        self.pivot = pivot;
        self
    }

    pub fn with_zero(mut self, zero: f64) -> Self {
        self.zero = zero;
        self
    }

    pub fn with_resid(mut self, resid: f64) -> Self {
        self.resid = resid;
        self
    }

    pub fn with_eq(mut self, eq: f64) -> Self {
        self.eq = eq;
        self
    }
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            pivot: Self::DEFAULT_PIVOT,
            zero: Self::DEFAULT_ZERO,
            resid: Self::DEFAULT_RESID,
            eq: 0.0,
        }
    }
}
