//! Oracles and random generators shared by the integration tests.
//!
//! The oracles here deliberately avoid the idempotent representation: scalar
//! products are expanded over the real basis `1, i1, i2, i1i2`, and
//! determinants use cofactor expansion over bicomplex entries.

#![allow(dead_code)]

use bcx::{BCMatrix, BiComplex, CMatrix, CVector, Complex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Product of `a1 + a2 i1 + a3 i2 + a4 i1i2` and `b1 + ..` using
/// `i1² = i2² = -1`, `(i1i2)² = 1`, `i1 (i1i2) = -i2`, `i2 (i1i2) = -i1`.
pub fn cartesian_mul(a: [f64; 4], b: [f64; 4]) -> [f64; 4] {
    let [a1, a2, a3, a4] = a;
    let [b1, b2, b3, b4] = b;
    [
        a1 * b1 - a2 * b2 - a3 * b3 + a4 * b4,
        a1 * b2 + a2 * b1 - a3 * b4 - a4 * b3,
        a1 * b3 + a3 * b1 - a2 * b4 - a4 * b2,
        a1 * b4 + a4 * b1 + a2 * b3 + a3 * b2,
    ]
}

/// Laplace expansion along the first row, in bicomplex arithmetic.
pub fn cofactor_det(m: &[Vec<BiComplex>]) -> BiComplex {
    let n = m.len();
    if n == 0 {
        return BiComplex::ONE;
    }
    if n == 1 {
        return m[0][0];
    }
    let mut total = BiComplex::ZERO;
    for col in 0..n {
        let minor: Vec<Vec<BiComplex>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != col)
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect();
        let term = m[0][col] * cofactor_det(&minor);
        if col % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

pub fn complex(rng: &mut TestRng) -> Complex {
    Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

pub fn small_int_complex(rng: &mut TestRng) -> Complex {
    Complex::new(rng.gen_range(-3..=3) as f64, rng.gen_range(-3..=3) as f64)
}

pub fn bicomplex(rng: &mut TestRng) -> BiComplex {
    BiComplex::join(complex(rng), complex(rng))
}

pub fn cvector(rng: &mut TestRng, n: usize) -> CVector {
    (0..n).map(|_| complex(rng)).collect()
}

pub fn cmatrix(rng: &mut TestRng, rows: usize, cols: usize) -> CMatrix {
    CMatrix::from_fn(rows, cols, |_, _| complex(rng))
}

pub fn bcmatrix(rng: &mut TestRng, rows: usize, cols: usize) -> BCMatrix {
    BCMatrix::join(cmatrix(rng, rows, cols), cmatrix(rng, rows, cols)).unwrap()
}

/// `rows × cols` matrix of rank exactly `rank`: a product of small-integer
/// `rows × rank` and `rank × cols` factors, resampled until the Gram-Schmidt
/// rank confirms it.
pub fn low_rank(rng: &mut TestRng, rows: usize, cols: usize, rank: usize) -> CMatrix {
    assert!(rank <= rows.min(cols));
    loop {
        let left = CMatrix::from_fn(rows, rank, |_, _| small_int_complex(rng));
        let right = CMatrix::from_fn(rank, cols, |_, _| small_int_complex(rng));
        let m = left.try_mul(&right).unwrap();
        if gram_schmidt_rank(&m, 1e-9) == rank {
            return m;
        }
    }
}

/// Complex rank of `m` without row elimination: columns are orthogonalised
/// one by one (Gram-Schmidt) and a column counts when its residual norm
/// exceeds `tol` times its original norm.
pub fn gram_schmidt_rank(m: &CMatrix, tol: f64) -> usize {
    let mut basis: Vec<CVector> = Vec::new();
    for j in 0..m.cols() {
        let col = m.column(j);
        let norm0 = col.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm0 == 0.0 {
            continue;
        }
        let mut v = col;
        // two passes for numerical stability
        for _ in 0..2 {
            for q in &basis {
                let proj: Complex = q.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
                for (x, y) in v.iter_mut().zip(q) {
                    *x -= proj * y;
                }
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > tol * norm0 {
            basis.push(v.iter().map(|z| z / norm).collect());
        }
    }
    basis.len()
}

/// Random square matrix with condition estimate below `max_cond`.
pub fn well_conditioned(rng: &mut TestRng, n: usize, max_cond: f64) -> CMatrix {
    loop {
        let m = cmatrix(rng, n, n);
        if let Some(c) = m.condition_estimate(1e-10) {
            if c < max_cond {
                return m;
            }
        }
    }
}

/// Largest modulus of `a - b`.
pub fn max_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    assert_eq!(a.shape(), b.shape());
    a.try_sub(b).unwrap().max_abs()
}

pub fn vec_inf(v: &[Complex]) -> f64 {
    v.iter().map(|z| z.norm()).fold(0.0, f64::max)
}
