//! Maps in the idempotent product `L1^{nm} ×e L1^{nm}`.
//!
//! For complex-linear `T1, T2: C1^n → C1^m` the map `T = e1 T1 + e2 T2` acts
//! on `C2^n` by
//!
//! ```text
//! T(ξ) = e1 T1(ξ⁻) + e2 T2(ξ⁺).
//! ```
//!
//! `T` is `C1`-linear. Because bicomplex multiplication also acts
//! componentwise, `T(η ξ) = η T(ξ)` holds for every bicomplex `η` as well, even
//! when `T1 ≠ T2`. Both components are
//! stored as standard-basis matrices, which makes equality, composition and
//! rank decidable.
//!
//! Kernels, images and ranks decompose componentwise:
//! `ker T = ker T1 ×e ker T2`, `Im T = Im T1 ×e Im T2`, and
//! `rank T = rank T1 + rank T2`. The matrix of `T` relative to complex bases
//! `B1` of `C1^n` and `B2` of `C1^m` is `e1 [T1] + e2 [T2]`.

use crate::complex::{self, Complex};
use crate::error::{Components, Error, Result};
use crate::linalg::{Basis, CMatrix, CVector};
use crate::matrix::BCMatrix;
use crate::tolerance::Tolerances;
use crate::vector::BCVector;

#[derive(Debug, Clone, PartialEq)]
pub struct LinMap {
    t1: CMatrix,
    t2: CMatrix,
}

/// Ordered bases for the domain `C1^n` and codomain `C1^m`.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisPair {
    pub domain: Basis,
    pub codomain: Basis,
}

impl BasisPair {
    pub fn new(domain: Basis, codomain: Basis) -> Self {
        BasisPair { domain, codomain }
    }

    /// The same basis on both sides, for operators on `C2^n`.
    pub fn square(basis: Basis) -> Self {
        BasisPair {
            domain: basis.clone(),
            codomain: basis,
        }
    }
}

/// Image basis together with a preimage for every basis vector.
#[derive(Debug, Clone, PartialEq)]
pub struct ImageBasis {
    /// `join(z_i, 0)` for the pivot columns `z_i` of `T1`, then `join(0, w_j)` for `T2`.
    pub vectors: Vec<BCVector>,
    /// `preimages[k]` is mapped by `T` onto `vectors[k]`.
    pub preimages: Vec<BCVector>,
}

impl ImageBasis {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }
}

impl LinMap {
    /// `e1 T1 + e2 T2` from the standard matrices of `T1` and `T2` (both `m × n`).
    pub fn new(t1: CMatrix, t2: CMatrix) -> Result<Self> {
        if t1.shape() != t2.shape() {
            return Err(Error::dim(
                "map components",
                format!("{}x{}", t1.rows(), t1.cols()),
                format!("{}x{}", t2.rows(), t2.cols()),
            ));
        }
        Ok(LinMap { t1, t2 })
    }

    /// Tabulates two complex-linear maps `C1^n → C1^m` on the standard basis.
    pub fn from_fns<F1, F2>(n: usize, m: usize, f1: F1, f2: F2) -> Result<Self>
    where
        F1: Fn(&[Complex]) -> CVector,
        F2: Fn(&[Complex]) -> CVector,
    {
        let tabulate = |f: &dyn Fn(&[Complex]) -> CVector| -> Result<CMatrix> {
            let columns: Vec<CVector> = (0..n)
                .map(|j| {
                    let mut u = vec![complex::ZERO; n];
                    u[j] = complex::ONE;
                    f(&u)
                })
                .collect();
            CMatrix::from_columns(m, &columns)
        };
        LinMap::new(tabulate(&f1)?, tabulate(&f2)?)
    }

    pub fn identity(n: usize) -> Self {
        LinMap {
            t1: CMatrix::identity(n),
            t2: CMatrix::identity(n),
        }
    }

    pub fn zero(m: usize, n: usize) -> Self {
        LinMap {
            t1: CMatrix::zeros(m, n),
            t2: CMatrix::zeros(m, n),
        }
    }

    /// Domain dimension `n`.
    pub fn n(&self) -> usize {
        self.t1.cols()
    }

    /// Codomain dimension `m`.
    pub fn m(&self) -> usize {
        self.t1.rows()
    }

    pub fn t1(&self) -> &CMatrix {
        &self.t1
    }

    pub fn t2(&self) -> &CMatrix {
        &self.t2
    }

    pub fn into_components(self) -> (CMatrix, CMatrix) {
        (self.t1, self.t2)
    }

    /// `T(ξ) = e1 T1(ξ⁻) + e2 T2(ξ⁺)`.
    pub fn apply(&self, v: &BCVector) -> Result<BCVector> {
        if v.len() != self.n() {
            return Err(Error::dim("map application", self.n(), v.len()));
        }
        let (x, y) = v.split();
        BCVector::join(&self.t1.mul_vec(&x)?, &self.t2.mul_vec(&y)?)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        Ok(LinMap {
            t1: self.t1.try_add(&other.t1)?,
            t2: self.t2.try_add(&other.t2)?,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        Ok(LinMap {
            t1: self.t1.try_sub(&other.t1)?,
            t2: self.t2.try_sub(&other.t2)?,
        })
    }

    /// `α T = e1 (α T1) + e2 (α T2)`.
    pub fn scale_complex(&self, alpha: Complex) -> Self {
        LinMap {
            t1: self.t1.scale(alpha),
            t2: self.t2.scale(alpha),
        }
    }

    /// `self ∘ inner = e1 (S1 T1) + e2 (S2 T2)`.
    pub fn compose(&self, inner: &LinMap) -> Result<Self> {
        if self.n() != inner.m() {
            return Err(Error::dim("composition", self.n(), inner.m()));
        }
        Ok(LinMap {
            t1: self.t1.try_mul(&inner.t1)?,
            t2: self.t2.try_mul(&inner.t2)?,
        })
    }

    /// `T = 0` iff `T1 = 0` and `T2 = 0`.
    pub fn eq_zero(&self, tol: f64) -> bool {
        self.t1.is_zero(tol) && self.t2.is_zero(tol)
    }

    /// `T = S` iff `T1 = S1` and `T2 = S2`; maps of different shape are unequal.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.t1.approx_eq(&other.t1, tol) && self.t2.approx_eq(&other.t2, tol)
    }

    /// Basis of `ker T1 ×e ker T2`: `join(z_i, 0)` for `z_i ∈ ker T1`, then `join(0, w_j)`.
    pub fn kernel_basis(&self, tol: &Tolerances) -> Vec<BCVector> {
        let n = self.n();
        let zero = vec![complex::ZERO; n];
        let minus = self.t1.kernel_basis(tol.pivot);
        let plus = self.t2.kernel_basis(tol.pivot);
        minus
            .iter()
            .map(|z| BCVector::join(z, &zero))
            .chain(plus.iter().map(|w| BCVector::join(&zero, w)))
            .collect::<Result<_>>()
            .expect("kernel vectors have domain length")
    }

    /// Basis of `Im T1 ×e Im T2` built from the pivot columns of each component.
    /// The preimage of pivot column `p` of `T1` is `e1 u_p`, and likewise `e2 u_p` for `T2`.
    pub fn image_basis(&self, tol: &Tolerances) -> ImageBasis {
        let (n, m) = (self.n(), self.m());
        let zero_m = vec![complex::ZERO; m];
        let zero_n = vec![complex::ZERO; n];
        let unit = |p: usize| {
            let mut u = zero_n.clone();
            u[p] = complex::ONE;
            u
        };
        let mut vectors = Vec::new();
        let mut preimages = Vec::new();
        for p in self.t1.image_pivots(tol.pivot) {
            vectors.push(BCVector::join(&self.t1.column(p), &zero_m).expect("codomain length"));
            preimages.push(BCVector::join(&unit(p), &zero_n).expect("domain length"));
        }
        for p in self.t2.image_pivots(tol.pivot) {
            vectors.push(BCVector::join(&zero_m, &self.t2.column(p)).expect("codomain length"));
            preimages.push(BCVector::join(&zero_n, &unit(p)).expect("domain length"));
        }
        ImageBasis { vectors, preimages }
    }

    /// `rank T1 + rank T2`.
    pub fn rank(&self, tol: &Tolerances) -> usize {
        self.t1.rank(tol.pivot) + self.t2.rank(tol.pivot)
    }

    /// `dim ker T1 + dim ker T2 = 2n - rank T`.
    pub fn nullity(&self, tol: &Tolerances) -> usize {
        2 * self.n() - self.rank(tol)
    }

    /// Square with both components invertible.
    pub fn is_invertible(&self, tol: &Tolerances) -> bool {
        self.t1.is_square()
            && self.t1.rank(tol.pivot) == self.n()
            && self.t2.rank(tol.pivot) == self.n()
    }

    /// `(e1 T1 + e2 T2)⁻¹ = e1 T1⁻¹ + e2 T2⁻¹`.
    pub fn inverse(&self, tol: &Tolerances) -> Result<Self> {
        if !self.t1.is_square() {
            return Err(Error::dim(
                "inverse",
                "square map",
                format!("{}x{}", self.m(), self.n()),
            ));
        }
        match (self.t1.inverse(tol.pivot), self.t2.inverse(tol.pivot)) {
            (Ok(t1), Ok(t2)) => Ok(LinMap { t1, t2 }),
            (a, b) => Err(Error::NotInvertible(
                Components::from_flags(a.is_err(), b.is_err()).expect("one component failed"),
            )),
        }
    }

    /// Injective, i.e. trivial kernel.
    pub fn is_nonsingular(&self, tol: &Tolerances) -> bool {
        self.t1.rank(tol.pivot) == self.n() && self.t2.rank(tol.pivot) == self.n()
    }

    /// Matrix representation `e1 [T1] + e2 [T2]` relative to `bases`: column `j`
    /// of `[Tk]` holds the codomain coordinates of `Tk(b_j)` for domain basis vector `b_j`.
    pub fn matrix_rep(&self, bases: &BasisPair) -> Result<BCMatrix> {
        if bases.domain.dim() != self.n() {
            return Err(Error::dim("domain basis", self.n(), bases.domain.dim()));
        }
        if bases.codomain.dim() != self.m() {
            return Err(Error::dim("codomain basis", self.m(), bases.codomain.dim()));
        }
        let represent = |t: &CMatrix| -> Result<CMatrix> {
            let columns = bases
                .domain
                .vectors()
                .iter()
                .map(|b| bases.codomain.coords(&t.mul_vec(b)?))
                .collect::<Result<Vec<_>>>()?;
            CMatrix::from_columns(self.m(), &columns)
        };
        BCMatrix::join(represent(&self.t1)?, represent(&self.t2)?)
    }

    /// Solves `T(ξ) = η` by solving `T1 x = η⁻` and `T2 y = η⁺` independently;
    /// returns `join(x, y)` with free variables set to zero.
    pub fn solve(&self, rhs: &BCVector, tol: &Tolerances) -> Result<BCVector> {
        if rhs.len() != self.m() {
            return Err(Error::dim("bicomplex system", self.m(), rhs.len()));
        }
        let (minus, plus) = rhs.split();
        let x = self.t1.solve(&minus, tol.pivot);
        let y = self.t2.solve(&plus, tol.pivot);
        match (x, y) {
            (Ok(x), Ok(y)) => BCVector::join(&x, &y),
            (x, y) => {
                for r in [&x, &y] {
                    if let Err(e) = r {
                        if *e != Error::Inconsistent {
                            return Err(e.clone());
                        }
                    }
                }
                Err(Error::NoSolution(
                    Components::from_flags(x.is_err(), y.is_err()).expect("one component failed"),
                ))
            }
        }
    }

    /// Coordinates of `T` in `C1^{2mn}`: the entries of `T1` then those of `T2`, row-major.
    pub fn flatten(&self) -> CVector {
        self.t1
            .data()
            .iter()
            .chain(self.t2.data())
            .copied()
            .collect()
    }

    /// The `2mn` maps `e1 E_ij` followed by `e2 E_ij`.
    pub fn standard_spanning_set(m: usize, n: usize) -> Vec<LinMap> {
        BCMatrix::standard_spanning_set(m, n)
            .into_iter()
            .map(LinMap::from)
            .collect()
    }
}

/// Every bicomplex matrix acts as `e1 M1 + e2 M2` on standard coordinates.
impl From<BCMatrix> for LinMap {
    fn from(m: BCMatrix) -> Self {
        let (t1, t2) = m.into_split();
        LinMap { t1, t2 }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bicomplex::BiComplex;

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    fn r(rows: &[&[f64]]) -> CMatrix {
        CMatrix::from_real(rows)
    }

    fn cv(xs: &[f64]) -> CVector {
        xs.iter().map(|&x| Complex::new(x, 0.0)).collect()
    }

    fn j(m: f64, p: f64) -> BiComplex {
        BiComplex::join(Complex::new(m, 0.0), Complex::new(p, 0.0))
    }

    fn example_map() -> LinMap {
        LinMap::from_fns(
            2,
            3,
            |v| vec![v[0], v[0] + v[1], v[1]],
            |v| vec![v[0] - v[1], v[1], v[0]],
        )
        .unwrap()
    }

    fn example_bases() -> BasisPair {
        let t = tol();
        BasisPair::new(
            Basis::new(vec![cv(&[1.0, 1.0]), cv(&[1.0, 0.0])], t.pivot).unwrap(),
            Basis::new(
                vec![
                    cv(&[1.0, 0.0, 1.0]),
                    cv(&[1.0, 1.0, 0.0]),
                    cv(&[0.0, 0.0, 1.0]),
                ],
                t.pivot,
            )
            .unwrap(),
        )
    }

    #[test]
    fn apply_examples() {
        let t = LinMap::new(r(&[&[1.0, 1.0]]), r(&[&[1.0, -1.0]])).unwrap();
        let v = BCVector::new(vec![j(1.0, 1.0), j(1.0, 1.0)]);
        assert_eq!(t.apply(&v).unwrap(), BCVector::new(vec![j(2.0, 0.0)]));
        assert_eq!(
            LinMap::zero(2, 3)
                .apply(&BCVector::new(vec![BiComplex::I2; 3]))
                .unwrap(),
            BCVector::zeros(2)
        );
        assert_eq!(
            example_map().apply(&v).unwrap(),
            BCVector::new(vec![j(1.0, 0.0), j(2.0, 1.0), j(1.0, 1.0)])
        );
        assert!(t.apply(&BCVector::zeros(3)).is_err());
    }

    #[test]
    fn apply_commutes_with_bicomplex_scalars() {
        let t = LinMap::new(r(&[&[1.0, 1.0]]), r(&[&[1.0, -1.0]])).unwrap();
        let v = BCVector::unit(2, 0);
        for eta in [BiComplex::I1, BiComplex::I2, BiComplex::E1, j(2.0, -3.0)] {
            let lhs = t.apply(&v.scale(eta)).unwrap();
            let rhs = t.apply(&v).unwrap().scale(eta);
            assert!(lhs.equals(&rhs).unwrap());
        }
    }

    #[test]
    fn linear_structure() {
        let t = example_map();
        assert_eq!(t.try_add(&LinMap::zero(3, 2)).unwrap(), t);
        assert_eq!(t.scale_complex(complex::ONE), t);
        let s = LinMap::new(
            r(&[&[1.0, 0.0], &[0.0, 0.0], &[2.0, 2.0]]),
            r(&[&[0.0, 1.0], &[1.0, 1.0], &[0.0, 0.0]]),
        )
        .unwrap();
        let sum = t.try_add(&s).unwrap();
        assert_eq!(sum.t1(), &t.t1().try_add(s.t1()).unwrap());
        assert!(t.try_add(&LinMap::zero(2, 2)).is_err());
        assert!(LinMap::zero(3, 2).eq_zero(0.0));
        assert!(!t.eq_zero(0.0));
        assert!(t.approx_eq(&t.clone(), 0.0));
        assert!(!t.approx_eq(&s, 0.0));
    }

    #[test]
    fn compose_examples() {
        let t = example_map();
        assert_eq!(LinMap::identity(3).compose(&t).unwrap(), t);
        let s = LinMap::new(
            r(&[&[1.0, 2.0, 0.0], &[0.0, 1.0, -1.0]]),
            r(&[&[0.0, 1.0, 1.0], &[3.0, 0.0, 1.0]]),
        )
        .unwrap();
        let st = s.compose(&t).unwrap();
        assert_eq!(st.t2(), &s.t2().try_mul(t.t2()).unwrap());
        assert_eq!(st.n(), 2);
        assert_eq!(st.m(), 2);
        assert!(t.compose(&t).is_err());
    }

    #[test]
    fn kernel_examples() {
        let t0 = tol();
        let t = LinMap::new(r(&[&[1.0, 1.0]]), r(&[&[1.0, -1.0]])).unwrap();
        let k = t.kernel_basis(&t0);
        assert_eq!(
            k,
            vec![
                BCVector::join(&cv(&[-1.0, 1.0]), &cv(&[0.0, 0.0])).unwrap(),
                BCVector::join(&cv(&[0.0, 0.0]), &cv(&[1.0, 1.0])).unwrap(),
            ]
        );
        for v in &k {
            assert_eq!(t.apply(v).unwrap().norm_inf(), 0.0);
        }
        assert!(LinMap::identity(3).kernel_basis(&t0).is_empty());
        assert_eq!(LinMap::zero(2, 2).kernel_basis(&t0).len(), 4);
    }

    #[test]
    fn image_with_preimages() {
        let t0 = tol();
        let t = example_map();
        let image = t.image_basis(&t0);
        assert_eq!(image.len(), 4);
        for (v, w) in image.vectors.iter().zip(&image.preimages) {
            assert_eq!(&t.apply(w).unwrap(), v);
        }
        let t = LinMap::new(r(&[&[1.0, 2.0], &[2.0, 4.0]]), CMatrix::zeros(2, 2)).unwrap();
        let image = t.image_basis(&t0);
        assert_eq!(
            image.vectors,
            vec![BCVector::join(&cv(&[1.0, 2.0]), &cv(&[0.0, 0.0])).unwrap()]
        );
    }

    #[test]
    fn rank_and_nullity() {
        let t0 = tol();
        let id = LinMap::identity(3);
        assert_eq!((id.rank(&t0), id.nullity(&t0)), (6, 0));
        let z = LinMap::zero(2, 2);
        assert_eq!((z.rank(&t0), z.nullity(&t0)), (0, 4));
        let t = LinMap::new(
            r(&[&[1.0, 2.0], &[2.0, 4.0]]),
            r(&[&[1.0, 0.0], &[1.0, 1.0]]),
        )
        .unwrap();
        assert_eq!((t.rank(&t0), t.nullity(&t0)), (3, 1));
        assert_eq!(t.kernel_basis(&t0).len(), 1);
    }

    #[test]
    fn inverse_examples() {
        let t0 = tol();
        assert_eq!(
            LinMap::identity(3).inverse(&t0).unwrap(),
            LinMap::identity(3)
        );
        let t = LinMap::new(
            r(&[&[2.0, 1.0], &[1.0, 1.0]]),
            r(&[&[1.0, 2.0], &[2.0, 4.0]]),
        )
        .unwrap();
        assert!(!t.is_invertible(&t0));
        assert!(!t.is_nonsingular(&t0));
        assert_eq!(t.inverse(&t0), Err(Error::NotInvertible(Components::Plus)));
        let t = LinMap::new(
            r(&[&[2.0, 1.0], &[1.0, 1.0]]),
            r(&[&[0.0, 1.0], &[1.0, 0.0]]),
        )
        .unwrap();
        let inv = t.inverse(&t0).unwrap();
        assert!(inv
            .compose(&t)
            .unwrap()
            .approx_eq(&LinMap::identity(2), 1e-15));
        assert!(example_map().inverse(&t0).is_err());
        assert!(!example_map().is_invertible(&t0));
        assert!(example_map().is_nonsingular(&t0));
    }

    #[test]
    fn example_representation() {
        let rep = example_map().matrix_rep(&example_bases()).unwrap();
        assert_eq!(rep.minus(), &r(&[&[-1.0, 0.0], &[2.0, 1.0], &[2.0, 0.0]]));
        assert_eq!(rep.plus(), &r(&[&[-1.0, 1.0], &[1.0, 0.0], &[2.0, 0.0]]));
    }

    #[test]
    fn representation_in_trivial_bases() {
        let t = example_map();
        let std = BasisPair::new(Basis::standard(2), Basis::standard(3));
        let rep = t.matrix_rep(&std).unwrap();
        assert_eq!(rep, BCMatrix::join(t.t1().clone(), t.t2().clone()).unwrap());
        let b = Basis::new(vec![cv(&[1.0, 1.0]), cv(&[1.0, 0.0])], 1e-10).unwrap();
        let rep = LinMap::identity(2)
            .matrix_rep(&BasisPair::square(b))
            .unwrap();
        assert!(rep.approx_eq(&BCMatrix::identity(2), 1e-15));
        assert!(t
            .matrix_rep(&BasisPair::square(Basis::standard(2)))
            .is_err());
    }

    #[test]
    fn solve_examples() {
        let t0 = tol();
        let eta = BCVector::new(vec![j(1.0, 2.0), BiComplex::I2]);
        assert_eq!(LinMap::identity(2).solve(&eta, &t0).unwrap(), eta);
        let t = LinMap::new(r(&[&[1.0], &[1.0]]), r(&[&[1.0], &[1.0]])).unwrap();
        let eta = BCVector::join(&cv(&[1.0, 2.0]), &cv(&[3.0, 3.0])).unwrap();
        assert_eq!(
            t.solve(&eta, &t0),
            Err(Error::NoSolution(Components::Minus))
        );
        let eta = BCVector::join(&cv(&[1.0, 2.0]), &cv(&[3.0, 4.0])).unwrap();
        assert_eq!(t.solve(&eta, &t0), Err(Error::NoSolution(Components::Both)));
        assert!(matches!(
            t.solve(&BCVector::zeros(3), &t0),
            Err(Error::Dimension { .. })
        ));

        let t = example_map();
        let v = BCVector::new(vec![j(1.0, -2.0), BiComplex::I2]);
        let eta = t.apply(&v).unwrap();
        let sol = t.solve(&eta, &t0).unwrap();
        assert!(t.apply(&sol).unwrap().approx_eq(&eta, 1e-12).unwrap());
    }

    #[test]
    fn bicomplex_matrix_converts_to_map() {
        let m = BCMatrix::join(r(&[&[1.0, 2.0]]), r(&[&[3.0, 4.0]])).unwrap();
        let t = m.to_linmap();
        let v = BCVector::new(vec![BiComplex::I1, j(2.0, -1.0)]);
        assert_eq!(t.apply(&v).unwrap(), m.mul_vec(&v).unwrap());
    }
}
