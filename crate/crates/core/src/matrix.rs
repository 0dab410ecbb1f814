//! Dense complex matrices, skew-Hermitian structure and the Hermitian
//! eigensolver.
//!
//! Skew-Hermitian matrices `S` are handled through the Hermitian form `S/i`,
//! so a spectrum `β` of `S/i` means `S` has eigenvalues `iβ`.

use std::ops::Deref;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::weights::DominantWeight;

pub type CMatrix = DMatrix<Complex64>;
pub type CVector = DVector<Complex64>;

const I: Complex64 = Complex64::new(0.0, 1.0);

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MatrixError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix has non-finite entries")]
    NonFinite,
    #[error("matrix is not Hermitian (defect {0:e})")]
    NotHermitian(f64),
    #[error("matrix is not skew-Hermitian (defect {0:e})")]
    NotSkewHermitian(f64),
    #[error("Jacobi iteration did not converge within {0} sweeps")]
    NoConvergence(usize),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("coefficient must be nonzero")]
    ZeroCoefficient,
    #[error("repeated entries in {0}; use the grouped construction")]
    RepeatedEntries(DominantWeight),
}

/// Square matrix with finite entries.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix(CMatrix);

impl ComplexMatrix {
    pub fn new(m: CMatrix) -> Result<Self, MatrixError> {
        if !m.is_square() {
            return Err(MatrixError::NotSquare { rows: m.nrows(), cols: m.ncols() });
        }
        if m.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(MatrixError::NonFinite);
        }
        Ok(Self(m))
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn into_inner(self) -> CMatrix {
        self.0
    }
}

impl Deref for ComplexMatrix {
    type Target = CMatrix;
    fn deref(&self) -> &CMatrix {
        &self.0
    }
}

impl Serialize for ComplexMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serde_complex::serialize_matrix(&self.0, s)
    }
}

impl<'de> Deserialize<'de> for ComplexMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let m = serde_complex::deserialize_matrix(d)?;
        ComplexMatrix::new(m).map_err(serde::de::Error::custom)
    }
}

/// Skew-Hermitian matrix: `‖M + M*‖_F ≤ 1e−12·(1 + ‖M‖_F)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SkewHermitian(CMatrix);

impl SkewHermitian {
    pub fn new(m: CMatrix) -> Result<Self, MatrixError> {
        let m = ComplexMatrix::new(m)?.into_inner();
        let defect = (&m + m.adjoint()).norm();
        if defect > 1e-12 * (1.0 + m.norm()) {
            return Err(MatrixError::NotSkewHermitian(defect));
        }
        Ok(Self(m))
    }

    /// Projects onto the skew-Hermitian part, for matrices that are
    /// skew-Hermitian up to rounding from a product like `A S A*`.
    pub fn from_rounded(m: CMatrix) -> Self {
        let half = (&m - m.adjoint()) * Complex64::new(0.5, 0.0);
        Self(half)
    }

    pub fn zeros(n: usize) -> Self {
        Self(CMatrix::zeros(n, n))
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn into_inner(self) -> CMatrix {
        self.0
    }

    /// `A S A*`.
    pub fn conjugate_by(&self, a: &CMatrix) -> Self {
        Self::from_rounded(a * &self.0 * a.adjoint())
    }

    pub fn add(&self, other: &SkewHermitian) -> Self {
        Self(&self.0 + &other.0)
    }

    /// The Hermitian form `S/i`.
    pub fn hermitian_form(&self) -> CMatrix {
        self.0.map(|z| z * -I)
    }
}

impl Deref for SkewHermitian {
    type Target = CMatrix;
    fn deref(&self) -> &CMatrix {
        &self.0
    }
}

impl Serialize for SkewHermitian {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serde_complex::serialize_matrix(&self.0, s)
    }
}

impl<'de> Deserialize<'de> for SkewHermitian {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let m = serde_complex::deserialize_matrix(d)?;
        SkewHermitian::new(m).map_err(serde::de::Error::custom)
    }
}

/// Real eigenvalues in nonincreasing order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Spectrum(Vec<f64>);

impl Spectrum {
    pub fn from_unsorted(mut v: Vec<f64>) -> Self {
        v.sort_by(|a, b| b.total_cmp(a));
        Self(v)
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest absolute difference to `other` entrywise; infinite on length
    /// mismatch.
    pub fn max_diff(&self, other: &[f64]) -> f64 {
        if self.0.len() != other.len() {
            return f64::INFINITY;
        }
        self.0.iter().zip(other).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
    }
}

#[derive(Clone, Debug)]
pub struct HermitianEigen {
    pub values: Spectrum,
    /// Column `j` is a unit eigenvector for `values[j]`.
    pub vectors: CMatrix,
}

const MAX_SWEEPS: usize = 100;

/// Eigen-decomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations.
pub fn eig_hermitian(h: &CMatrix) -> Result<HermitianEigen, MatrixError> {
    if !h.is_square() {
        return Err(MatrixError::NotSquare { rows: h.nrows(), cols: h.ncols() });
    }
    let scale = h.norm();
    let defect = (h - h.adjoint()).norm();
    if !scale.is_finite() {
        return Err(MatrixError::NonFinite);
    }
    if defect > 1e-10 * (1.0 + scale) {
        return Err(MatrixError::NotHermitian(defect));
    }
    let n = h.nrows();
    let mut a = (h + h.adjoint()) * Complex64::new(0.5, 0.0);
    let mut v = CMatrix::identity(n, n);
    let threshold = 1e-13 * scale;

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a) <= threshold {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    if !converged && off_diagonal_norm(&a) > threshold {
        return Err(MatrixError::NoConvergence(MAX_SWEEPS));
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].re.total_cmp(&a[(i, i)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = CMatrix::from_fn(n, n, |r, c| v[(r, order[c])]);
    Ok(HermitianEigen { values: Spectrum(values), vectors })
}

fn off_diagonal_norm(a: &CMatrix) -> f64 {
    let n = a.nrows();
    let mut s = 0.0;
    for j in 0..n {
        for i in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// One Jacobi step annihilating `a[p][q]`: `a ← G* a G`, `v ← v G` with
/// `G = diag(1, e^{−iφ}) · [[c, s], [−s, c]]` acting on coordinates `(p, q)`.
fn rotate(a: &mut CMatrix, v: &mut CMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let mag = apq.norm();
    if mag == 0.0 {
        return;
    }
    let phase = apq / mag;
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let tau = (aqq - app) / (2.0 * mag);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let g_pp = Complex64::new(c, 0.0);
    let g_pq = Complex64::new(s, 0.0);
    let g_qp = -phase.conj() * s;
    let g_qq = phase.conj() * c;

    let n = a.nrows();
    // columns: a ← a G
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * g_pp + akq * g_qp;
        a[(k, q)] = akp * g_pq + akq * g_qq;
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * g_pp + vkq * g_qp;
        v[(k, q)] = vkp * g_pq + vkq * g_qq;
    }
    // rows: a ← G* a
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = g_pp.conj() * apk + g_qp.conj() * aqk;
        a[(q, k)] = g_pq.conj() * apk + g_qq.conj() * aqk;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);
}

/// Eigenvalues of `S/i`.
pub fn spectrum_skew(s: &SkewHermitian) -> Result<Spectrum, MatrixError> {
    Ok(eig_hermitian(&s.hermitian_form())?.values)
}

/// `J_λ = diag(iλ_1, …, iλ_n)`.
pub fn j_diag(lambda: &DominantWeight) -> SkewHermitian {
    let l = lambda.entries();
    let n = l.len();
    SkewHermitian(CMatrix::from_fn(n, n, |i, j| if i == j { I * l[i] as f64 } else { Complex64::new(0.0, 0.0) }))
}

/// `J_μ ⊕ 0` at rank `n` (`μ` of rank `n − 1`).
pub fn j_embed(mu: &DominantWeight) -> SkewHermitian {
    let m = mu.entries();
    let n = m.len() + 1;
    SkewHermitian(CMatrix::from_fn(n, n, |i, j| {
        if i == j && i < m.len() {
            I * m[i] as f64
        } else {
            Complex64::new(0.0, 0.0)
        }
    }))
}

/// `J_λ + i c z z*`.
pub fn rank_one_update(lambda: &DominantWeight, z: &CVector, c: f64) -> Result<SkewHermitian, MatrixError> {
    let n = lambda.rank();
    if z.len() != n {
        return Err(MatrixError::DimensionMismatch { expected: n, got: z.len() });
    }
    if c == 0.0 {
        return Err(MatrixError::ZeroCoefficient);
    }
    let outer = z * z.adjoint();
    Ok(SkewHermitian(j_diag(lambda).0 + outer * (I * c)))
}

/// `J_μ ⊕ 0 + B` with `B` zero except for the last column
/// `(−z_1, …, −z_{n−1}, ix)` and last row `(z̄_1, …, z̄_{n−1}, ix)`.
pub fn arrowhead(mu: &DominantWeight, z: &CVector, x: f64) -> Result<SkewHermitian, MatrixError> {
    let m = mu.rank();
    if z.len() != m {
        return Err(MatrixError::DimensionMismatch { expected: m, got: z.len() });
    }
    let mut a = j_embed(mu).0;
    for j in 0..m {
        a[(j, m)] = -z[j];
        a[(m, j)] = z[j].conj();
    }
    a[(m, m)] = I * x;
    Ok(SkewHermitian(a))
}

/// `Q(y) = Π(y − λ_i) − Σ_j (|z_j|²/α) Π_{i≠j}(y − λ_i)`, the characteristic
/// polynomial of `J_λ/i + zz*/α`.
pub fn char_poly_q(lambda: &DominantWeight, z: &CVector, alpha: f64, y: f64) -> Result<f64, MatrixError> {
    if alpha == 0.0 {
        return Err(MatrixError::ZeroCoefficient);
    }
    let l = lambda.to_f64();
    if z.len() != l.len() {
        return Err(MatrixError::DimensionMismatch { expected: l.len(), got: z.len() });
    }
    let full: f64 = l.iter().map(|li| y - li).product();
    let mut s = full;
    for j in 0..l.len() {
        let rest: f64 = l.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, li)| y - li).product();
        s -= z[j].norm_sqr() / alpha * rest;
    }
    Ok(s)
}

/// `P(y) = (y − x)Π(y − μ_i) − Σ_j |z_j|² Π_{i≠j}(y − μ_i)`, satisfying
/// `det(J_μ ⊕ 0 + B − iy) = (−i)^n P(y)`. Requires pairwise distinct `μ`.
pub fn char_poly_p(mu: &DominantWeight, z: &CVector, x: f64, y: f64) -> Result<f64, MatrixError> {
    let m = mu.to_f64();
    if z.len() != m.len() {
        return Err(MatrixError::DimensionMismatch { expected: m.len(), got: z.len() });
    }
    if mu.entries().windows(2).any(|w| w[0] == w[1]) {
        return Err(MatrixError::RepeatedEntries(mu.clone()));
    }
    let full: f64 = m.iter().map(|mi| y - mi).product();
    let mut s = (y - x) * full;
    for j in 0..m.len() {
        let rest: f64 = m.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, mi)| y - mi).product();
        s -= z[j].norm_sqr() * rest;
    }
    Ok(s)
}

/// `z × u = (i/2)(u z* + z u*)`.
pub fn cross(z: &CVector, u: &CVector) -> Result<SkewHermitian, MatrixError> {
    if z.len() != u.len() {
        return Err(MatrixError::DimensionMismatch { expected: z.len(), got: u.len() });
    }
    let m = (u * z.adjoint() + z * u.adjoint()) * (I * 0.5);
    Ok(SkewHermitian(m))
}

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the phases
/// of `diag(R)` moved into `Q`.
pub fn haar_unitary<R: Rng + ?Sized>(n: usize, rng: &mut R) -> CMatrix {
    let g = CMatrix::from_fn(n, n, |_, _| complex_normal(rng));
    let qr = g.qr();
    let mut q = qr.q();
    let r = qr.r();
    for j in 0..n {
        let d = r[(j, j)];
        let ph = if d.norm() > 0.0 { d / d.norm() } else { Complex64::new(1.0, 0.0) };
        for i in 0..n {
            q[(i, j)] *= ph;
        }
    }
    q
}

/// Standard complex normal: real and imaginary parts i.i.d. N(0, 1/2).
pub fn complex_normal<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

pub fn random_complex_vector<R: Rng + ?Sized>(n: usize, rng: &mut R) -> CVector {
    CVector::from_fn(n, |_, _| complex_normal(rng))
}

/// Hermitian matrix with Gaussian entries scaled by `scale`.
pub fn random_hermitian<R: Rng + ?Sized>(n: usize, scale: f64, rng: &mut R) -> CMatrix {
    let g = CMatrix::from_fn(n, n, |_, _| complex_normal(rng) * scale);
    (&g + g.adjoint()) * Complex64::new(0.5, 0.0)
}

pub fn unitarity_defect(a: &CMatrix) -> f64 {
    let n = a.nrows();
    (a * a.adjoint() - CMatrix::identity(n, n)).norm()
}

/// JSON encoding of complex data as `[re, im]` pairs.
pub mod serde_complex {
    use super::*;
    use serde::de::Error as _;

    pub fn serialize_matrix<S: Serializer>(m: &CMatrix, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<[f64; 2]>> =
            (0..m.nrows()).map(|i| (0..m.ncols()).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect()).collect();
        rows.serialize(s)
    }

    pub fn deserialize_matrix<'de, D: Deserializer<'de>>(d: D) -> Result<CMatrix, D::Error> {
        let rows: Vec<Vec<[f64; 2]>> = Vec::deserialize(d)?;
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(D::Error::custom("matrix must be square"));
        }
        Ok(CMatrix::from_fn(n, n, |i, j| Complex64::new(rows[i][j][0], rows[i][j][1])))
    }

    pub fn serialize_vector<S: Serializer>(v: &CVector, s: S) -> Result<S::Ok, S::Error> {
        let items: Vec<[f64; 2]> = v.iter().map(|z| [z.re, z.im]).collect();
        items.serialize(s)
    }

    pub fn deserialize_vector<'de, D: Deserializer<'de>>(d: D) -> Result<CVector, D::Error> {
        let items: Vec<[f64; 2]> = Vec::deserialize(d)?;
        Ok(CVector::from_iterator(items.len(), items.iter().map(|p| Complex64::new(p[0], p[1]))))
    }

    pub mod vector {
        pub use super::{deserialize_vector as deserialize, serialize_vector as serialize};
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn w(v: &[i64]) -> DominantWeight {
        DominantWeight::new(v.to_vec()).unwrap()
    }

    /// Roots of the monic cubic `y³ + a y² + b y + c` with three real roots,
    /// via the trigonometric formula; descending.
    fn cubic_roots(a: f64, b: f64, c0: f64) -> [f64; 3] {
        let p = b - a * a / 3.0;
        let q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c0;
        let m = 2.0 * (-p / 3.0).sqrt();
        let arg = (3.0 * q / (p * m)).clamp(-1.0, 1.0);
        let theta = arg.acos() / 3.0;
        let mut r = [0.0; 3];
        for (k, slot) in r.iter_mut().enumerate() {
            *slot = m * (theta - 2.0 * std::f64::consts::PI * k as f64 / 3.0).cos() - a / 3.0;
        }
        r.sort_by(|x, y| y.total_cmp(x));
        r
    }

    #[test]
    fn eig_trivial_examples() {
        let d = CMatrix::from_diagonal(&CVector::from_vec(vec![c(1.0, 0.0), c(3.0, 0.0), c(-2.0, 0.0)]));
        assert_eq!(eig_hermitian(&d).unwrap().values.values(), &[3.0, 1.0, -2.0]);
        let swap = CMatrix::from_row_slice(2, 2, &[c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)]);
        let e = eig_hermitian(&swap).unwrap();
        assert!(e.values.max_diff(&[1.0, -1.0]) < 1e-15);
    }

    #[test]
    fn eig_matches_cubic_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let h = random_hermitian(3, 2.0, &mut rng);
            // det(yI − H) = y³ − tr(H) y² + e2 y − det(H)
            let tr = h.trace().re;
            let e2 = {
                let mut s = 0.0;
                for i in 0..3 {
                    for j in i + 1..3 {
                        s += (h[(i, i)] * h[(j, j)] - h[(i, j)] * h[(j, i)]).re;
                    }
                }
                s
            };
            let det = h.determinant().re;
            let roots = cubic_roots(-tr, e2, -det);
            let got = eig_hermitian(&h).unwrap().values;
            assert!(got.max_diff(&roots) < 1e-9 * (1.0 + h.norm()), "{got:?} vs {roots:?}");
        }
    }

    #[test]
    fn eig_reconstructs() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in [1usize, 2, 5, 10, 16] {
            let h = random_hermitian(n, 1.0, &mut rng);
            let e = eig_hermitian(&h).unwrap();
            let d = CMatrix::from_diagonal(&CVector::from_iterator(n, e.values.values().iter().map(|&x| c(x, 0.0))));
            let rec = &e.vectors * d * e.vectors.adjoint();
            assert!((rec - &h).norm() <= 1e-10 * (1.0 + h.norm()));
            assert!(unitarity_defect(&e.vectors) < 1e-10);
        }
    }

    #[test]
    fn eig_rejects_non_hermitian() {
        let m = CMatrix::from_row_slice(2, 2, &[c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        assert!(matches!(eig_hermitian(&m), Err(MatrixError::NotHermitian(_))));
    }

    #[test]
    fn eig_of_zero_and_empty() {
        let z = CMatrix::zeros(3, 3);
        assert_eq!(eig_hermitian(&z).unwrap().values.values(), &[0.0, 0.0, 0.0]);
        assert!(eig_hermitian(&CMatrix::zeros(0, 0)).unwrap().values.is_empty());
    }

    #[test]
    fn builders() {
        assert_eq!(spectrum_skew(&j_diag(&w(&[2, 0]))).unwrap().values(), &[2.0, 0.0]);
        assert_eq!(j_diag(&w(&[0, 0])).into_inner(), CMatrix::zeros(2, 2));
        let j = j_diag(&w(&[1, 0]));
        assert_eq!(j[(0, 0)], I);
        let e = j_embed(&w(&[1]));
        assert_eq!(e.into_inner(), CMatrix::from_row_slice(2, 2, &[I, c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]));

        let a = arrowhead(&w(&[1]), &CVector::from_vec(vec![c(1.0, 0.0)]), 1.0).unwrap();
        assert_eq!(a.into_inner(), CMatrix::from_row_slice(2, 2, &[I, c(-1.0, 0.0), c(1.0, 0.0), I]));
        let a0 = arrowhead(&w(&[1]), &CVector::zeros(1), 0.0).unwrap();
        assert_eq!(a0, j_embed(&w(&[1])));
    }

    #[test]
    fn rank_one_examples() {
        let l = w(&[3, -1]);
        assert_eq!(rank_one_update(&l, &CVector::zeros(2), 2.0).unwrap(), j_diag(&l));
        let one = rank_one_update(&w(&[0]), &CVector::from_vec(vec![c(1.0, 0.0)]), 1.0).unwrap();
        assert_eq!(one[(0, 0)], I);
        assert_eq!(spectrum_skew(&one).unwrap().values(), &[1.0]);
        let two = rank_one_update(&w(&[0, 0]), &CVector::from_vec(vec![c(1.0, 0.0), c(0.0, 0.0)]), 1.0).unwrap();
        assert!(spectrum_skew(&two).unwrap().max_diff(&[1.0, 0.0]) < 1e-15);
        assert!(rank_one_update(&l, &CVector::zeros(2), 0.0).is_err());
    }

    #[test]
    fn char_poly_examples() {
        let z = CVector::from_vec(vec![c(1.0, 0.0), c(0.0, 0.0)]);
        assert_eq!(char_poly_q(&w(&[0, 0]), &z, 1.0, 1.0).unwrap(), 0.0);
        let q1 = char_poly_q(&w(&[2]), &CVector::from_vec(vec![c(0.0, 2.0)]), 0.5, 1.0).unwrap();
        assert_eq!(q1, (1.0 - 2.0) - 4.0 / 0.5);
        assert!(char_poly_q(&w(&[2]), &CVector::zeros(1), 0.0, 1.0).is_err());

        let p = char_poly_p(&w(&[1]), &CVector::from_vec(vec![c(1.0, 0.0)]), 1.0, 0.0).unwrap();
        assert_eq!(p, 0.0);
        assert!(char_poly_p(&w(&[1, 1]), &CVector::zeros(2), 0.0, 0.0).is_err());
        let y = 0.3;
        assert_eq!(char_poly_p(&w(&[2, 1]), &CVector::zeros(2), 4.0, y).unwrap(), (y - 4.0) * (y - 2.0) * (y - 1.0));
    }

    #[test]
    fn char_poly_p_matches_determinant() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mu = w(&[4, 1, -2]);
        for _ in 0..50 {
            let z = random_complex_vector(3, &mut rng);
            let x: f64 = rng.random_range(-3.0..3.0);
            let y: f64 = rng.random_range(-5.0..5.0);
            let m = arrowhead(&mu, &z, x).unwrap().into_inner() - CMatrix::identity(4, 4) * (I * y);
            let det = m.determinant();
            let expect = c(0.0, -1.0).powi(4) * char_poly_p(&mu, &z, x, y).unwrap();
            assert!((det - expect).norm() < 1e-8 * (1.0 + expect.norm()));
        }
    }

    #[test]
    fn cross_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let z = random_complex_vector(3, &mut rng);
        let u = random_complex_vector(3, &mut rng);
        assert_eq!(cross(&CVector::zeros(3), &u).unwrap().into_inner(), CMatrix::zeros(3, 3));
        let zz = cross(&z, &z).unwrap();
        assert!((zz.into_inner() - (&z * z.adjoint()) * I).norm() < 1e-15);
        assert_eq!(cross(&z, &u).unwrap(), cross(&u, &z).unwrap());
    }

    #[test]
    fn haar_is_unitary_and_seeded() {
        let mut r1 = ChaCha8Rng::seed_from_u64(1);
        let mut r2 = ChaCha8Rng::seed_from_u64(1);
        let a = haar_unitary(4, &mut r1);
        assert!(unitarity_defect(&a) < 1e-12);
        assert_eq!(a, haar_unitary(4, &mut r2));
    }

    #[test]
    fn skew_hermitian_validation() {
        assert!(SkewHermitian::new(CMatrix::identity(2, 2)).is_err());
        assert!(SkewHermitian::new(CMatrix::identity(2, 2) * I).is_ok());
        assert!(ComplexMatrix::new(CMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn matrix_json_roundtrip() {
        let a = arrowhead(&w(&[1]), &CVector::from_vec(vec![c(1.0, 0.5)]), 1.0).unwrap();
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, "[[[0.0,1.0],[-1.0,-0.5]],[[1.0,-0.5],[0.0,1.0]]]");
        let back: SkewHermitian = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
        assert!(serde_json::from_str::<SkewHermitian>("[[[1.0,0.0]]]").is_err());
    }
}
