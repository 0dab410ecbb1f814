//! Points of `𝔤_n^* ≅ 𝔲(n) × ℂⁿ × ℝ`, the coadjoint action of `G_n` and the
//! three orbit families.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matrix::{self, serde_complex, CMatrix, CVector, MatrixError, SkewHermitian};
use crate::weights::DominantWeight;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CoadjointError {
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is not unitary (defect {0:e})")]
    NotUnitary(f64),
    #[error("generic orbit parameter needs alpha != 0")]
    ZeroAlpha,
    #[error("intermediate orbit parameter needs r > 0, got {0}")]
    NonPositiveRadius(f64),
    #[error("matrix is not in the span of z x v_r (upper-left block defect {0:e})")]
    OutsideW(f64),
}

/// A linear functional `(U, u, x)` with `U` skew-Hermitian.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Functional {
    #[serde(rename = "U")]
    pub mat: SkewHermitian,
    #[serde(rename = "u", with = "serde_complex::vector")]
    pub vec: CVector,
    pub x: f64,
}

impl Functional {
    pub fn new(mat: SkewHermitian, vec: CVector, x: f64) -> Result<Self, CoadjointError> {
        if vec.len() != mat.dim() {
            return Err(CoadjointError::DimensionMismatch { expected: mat.dim(), got: vec.len() });
        }
        Ok(Self { mat, vec, x })
    }

    pub fn zero(n: usize) -> Self {
        Self { mat: SkewHermitian::zeros(n), vec: CVector::zeros(n), x: 0.0 }
    }

    pub fn dim(&self) -> usize {
        self.mat.dim()
    }

    pub fn scale(&self, c: f64) -> Self {
        let k = Complex64::new(c, 0.0);
        Self { mat: SkewHermitian::from_rounded(self.mat.clone().into_inner() * k), vec: &self.vec * k, x: self.x * c }
    }
}

/// `(A, z, t) ∈ U(n) ⋉ H_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupElement {
    a: CMatrix,
    z: CVector,
    t: f64,
}

impl GroupElement {
    pub fn new(a: CMatrix, z: CVector, t: f64) -> Result<Self, CoadjointError> {
        if !a.is_square() || a.nrows() != z.len() {
            return Err(CoadjointError::DimensionMismatch { expected: a.nrows(), got: z.len() });
        }
        let defect = matrix::unitarity_defect(&a);
        if defect > 1e-10 {
            return Err(CoadjointError::NotUnitary(defect));
        }
        Ok(Self { a, z, t })
    }

    pub fn identity(n: usize) -> Self {
        Self { a: CMatrix::identity(n, n), z: CVector::zeros(n), t: 0.0 }
    }

    pub fn a(&self) -> &CMatrix {
        &self.a
    }

    pub fn z(&self) -> &CVector {
        &self.z
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    /// `(A, z, t)(B, z', t') = (AB, z + Az', t + t' − ½ ω(z, Az'))` with
    /// `ω(v, w) = Im Σ v_j w̄_j`.
    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        let az = &self.a * &other.z;
        let omega = self.z.iter().zip(az.iter()).map(|(v, w)| v * w.conj()).sum::<Complex64>().im;
        GroupElement { a: &self.a * &other.a, z: &self.z + az, t: self.t + other.t - 0.5 * omega }
    }
}

/// The three orbit families of `G_n`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum OrbitParam {
    Generic { lambda: DominantWeight, alpha: f64 },
    Intermediate { mu: DominantWeight, r: f64 },
    Character { lambda: DominantWeight },
}

impl OrbitParam {
    pub fn generic(lambda: DominantWeight, alpha: f64) -> Result<Self, CoadjointError> {
        let p = OrbitParam::Generic { lambda, alpha };
        p.validate()?;
        Ok(p)
    }

    pub fn intermediate(mu: DominantWeight, r: f64) -> Result<Self, CoadjointError> {
        let p = OrbitParam::Intermediate { mu, r };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), CoadjointError> {
        match self {
            OrbitParam::Generic { alpha, .. } if *alpha == 0.0 || !alpha.is_finite() => Err(CoadjointError::ZeroAlpha),
            OrbitParam::Intermediate { r, .. } if !(*r > 0.0 && r.is_finite()) => {
                Err(CoadjointError::NonPositiveRadius(*r))
            }
            _ => Ok(()),
        }
    }

    /// The `n` of `G_n` the orbit lives in.
    pub fn rank(&self) -> usize {
        match self {
            OrbitParam::Generic { lambda, .. } | OrbitParam::Character { lambda } => lambda.rank(),
            OrbitParam::Intermediate { mu, .. } => mu.rank() + 1,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            OrbitParam::Generic { .. } => "generic",
            OrbitParam::Intermediate { .. } => "intermediate",
            OrbitParam::Character { .. } => "character",
        }
    }
}

/// `v_r = (0, …, 0, r)`.
pub fn v_r(n: usize, r: f64) -> CVector {
    let mut v = CVector::zeros(n);
    if n > 0 {
        v[n - 1] = Complex64::new(r, 0.0);
    }
    v
}

/// `(AUA* + z×(Au) + (x/2) z×z, Au + xz, x)`.
pub fn coadjoint_act(g: &GroupElement, l: &Functional) -> Result<Functional, CoadjointError> {
    let n = l.dim();
    if g.a.nrows() != n {
        return Err(CoadjointError::DimensionMismatch { expected: n, got: g.a.nrows() });
    }
    let au = &g.a * &l.vec;
    let mut m = g.a.clone() * l.mat.clone().into_inner() * g.a.adjoint();
    m += matrix::cross(&g.z, &au)?.into_inner();
    m += matrix::cross(&g.z, &g.z)?.into_inner() * Complex64::new(l.x / 2.0, 0.0);
    let vec = au + &g.z * Complex64::new(l.x, 0.0);
    Ok(Functional { mat: SkewHermitian::from_rounded(m), vec, x: l.x })
}

/// `ℓ_{λ,α} = (J_λ, 0, α)`, `ℓ_{μ,r} = (J_μ ⊕ 0, v_r, 0)`, `ℓ_λ = (J_λ, 0, 0)`.
pub fn base_functional(p: &OrbitParam) -> Functional {
    match p {
        OrbitParam::Generic { lambda, alpha } => {
            Functional { mat: matrix::j_diag(lambda), vec: CVector::zeros(lambda.rank()), x: *alpha }
        }
        OrbitParam::Intermediate { mu, r } => {
            let n = mu.rank() + 1;
            Functional { mat: matrix::j_embed(mu), vec: v_r(n, *r), x: 0.0 }
        }
        OrbitParam::Character { lambda } => {
            Functional { mat: matrix::j_diag(lambda), vec: CVector::zeros(lambda.rank()), x: 0.0 }
        }
    }
}

/// `(A(J_λ + (i/α) zz*)A*, √2·Az, α)`, the image of `ℓ_{λ,α}` under
/// `(A, √2·Az/α, 0)`.
pub fn orbit_point_generic(
    lambda: &DominantWeight,
    alpha: f64,
    a: &CMatrix,
    z: &CVector,
) -> Result<Functional, CoadjointError> {
    if alpha == 0.0 {
        return Err(CoadjointError::ZeroAlpha);
    }
    let n = lambda.rank();
    check_dims(n, a, z)?;
    let inner = matrix::rank_one_update(lambda, z, 1.0 / alpha)?;
    let vec = (a * z) * Complex64::new(std::f64::consts::SQRT_2, 0.0);
    Ok(Functional { mat: inner.conjugate_by(a), vec, x: alpha })
}

/// `(A(J_μ ⊕ 0 + w)A*, A v_r, 0)` for `w` in `𝒲 = span{z × v_r}`.
pub fn orbit_point_intermediate(
    mu: &DominantWeight,
    r: f64,
    a: &CMatrix,
    w: &SkewHermitian,
) -> Result<Functional, CoadjointError> {
    if !(r > 0.0) {
        return Err(CoadjointError::NonPositiveRadius(r));
    }
    let n = mu.rank() + 1;
    if w.dim() != n {
        return Err(CoadjointError::DimensionMismatch { expected: n, got: w.dim() });
    }
    check_dims(n, a, &CVector::zeros(n))?;
    let defect = upper_left_defect(w);
    if defect > 1e-12 * (1.0 + w.norm()) {
        return Err(CoadjointError::OutsideW(defect));
    }
    let inner = matrix::j_embed(mu).add(w);
    Ok(Functional { mat: inner.conjugate_by(a), vec: a * v_r(n, r), x: 0.0 })
}

fn upper_left_defect(w: &SkewHermitian) -> f64 {
    let n = w.dim();
    let mut s = 0.0;
    for i in 0..n.saturating_sub(1) {
        for j in 0..n - 1 {
            s += w[(i, j)].norm_sqr();
        }
    }
    s.sqrt()
}

fn check_dims(n: usize, a: &CMatrix, z: &CVector) -> Result<(), CoadjointError> {
    if a.nrows() != n || a.ncols() != n {
        return Err(CoadjointError::DimensionMismatch { expected: n, got: a.nrows() });
    }
    if z.len() != n {
        return Err(CoadjointError::DimensionMismatch { expected: n, got: z.len() });
    }
    Ok(())
}

/// `sqrt(‖U₁−U₂‖_F² + |u₁−u₂|² + (x₁−x₂)²)`.
pub fn functional_distance(l1: &Functional, l2: &Functional) -> Result<f64, CoadjointError> {
    if l1.dim() != l2.dim() {
        return Err(CoadjointError::DimensionMismatch { expected: l1.dim(), got: l2.dim() });
    }
    let dm = (&*l1.mat - &*l2.mat).norm_squared();
    let dv = (&l1.vec - &l2.vec).norm_squared();
    let dx = (l1.x - l2.x).powi(2);
    Ok((dm + dv + dx).sqrt())
}

pub fn stabilizer_member(p: &OrbitParam, g: &GroupElement) -> Result<bool, CoadjointError> {
    let base = base_functional(p);
    let moved = coadjoint_act(g, &base)?;
    Ok(functional_distance(&moved, &base)? <= 1e-9)
}
