//! Linear algebra over the bicomplex numbers.
//!
//! A bicomplex number `ξ = z1 + i2 z2` is stored through its idempotent
//! components, `ξ = ξ⁻ e1 + ξ⁺ e2` with `e1 = (1 + i1 i2)/2` and
//! `e2 = (1 - i1 i2)/2`. Since `e1 e2 = 0` and `e1 + e2 = 1`, every
//! bicomplex computation splits into two independent complex computations,
//! one per component. This crate builds on that split:
//!
//! - [`BiComplex`]: scalars, zero-divisor classification, inverses.
//! - [`BCVector`]: elements of `C2^n`, with split/join and the `e1`/`e2` products.
//! - [`linalg`]: a small complex backend (RREF, kernels, solve, det, inverse, bases).
//! - [`BCMatrix`]: bicomplex matrices stored as the pair `(A1, A2)`.
//! - [`LinMap`]: maps `e1 T1 + e2 T2`, their kernels, images, ranks, inverses
//!   and their matrix representation relative to a pair of complex bases.
//! - [`text`] and [`io`]: literal syntax and the JSON file formats used by the `bcx` binary.

pub mod bicomplex;
pub mod complex;
pub mod error;
pub mod io;
pub mod linalg;
pub mod linmap;
pub mod matrix;
pub mod text;
pub mod tolerance;
pub mod vector;

pub use bicomplex::{BiComplex, Class};
pub use complex::Complex;
pub use error::{Components, Error, Result};
pub use linalg::{Basis, CMatrix, CVector};
pub use linmap::{BasisPair, ImageBasis, LinMap};
pub use matrix::BCMatrix;
pub use tolerance::Tolerances;
pub use vector::{BCVector, Part};
