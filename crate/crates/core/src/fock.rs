//! Scalar computations in the Fock space `𝓕_α(n)` of entire functions on
//! `ℂⁿ`, square integrable against `(α/2π)ⁿ e^{−α|w|²/2} dw`.
//!
//! The orthonormal basis is `h_{q,α}(w) = w^q / √(q!·(2/α)^{|q|})` and the
//! Heisenberg group acts by
//! `σ_α(z,t)f(w) = e^{iαt − α|z|²/4 − (α/2)⟨w,z⟩} f(w + z)`,
//! `⟨w,z⟩ = Σ w_i z̄_i`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matrix::{CMatrix, CVector};
use crate::quadrature::{circle_angles, gauss_laguerre};
use crate::Complex64;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FockError {
    #[error("alpha must be positive, got {0}")]
    NonPositiveAlpha(f64),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("quadrature supports n = 1 or 2, got {0}")]
    Unsupported(usize),
    #[error("quadrature resolution insufficient: {0}")]
    Unresolved(String),
}

/// Multi-index `q ∈ ℕⁿ`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HermiteIndex(pub Vec<u32>);

impl HermiteIndex {
    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// `|q|`
    pub fn total(&self) -> u64 {
        self.0.iter().map(|&v| v as u64).sum()
    }

    /// `q! = Π q_i!`
    pub fn factorial(&self) -> f64 {
        self.0.iter().map(|&v| (1..=v).map(f64::from).product::<f64>()).product()
    }
}

/// Polynomials of degree `≤ max_degree` inside `𝓕_α(n)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FockTruncation {
    n: usize,
    max_degree: u32,
    alpha: f64,
}

impl FockTruncation {
    pub fn new(n: usize, max_degree: u32, alpha: f64) -> Result<Self, FockError> {
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(FockError::NonPositiveAlpha(alpha));
        }
        Ok(Self { n, max_degree, alpha })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    /// Basis indices, by degree and then in descending lexicographic order.
    pub fn basis(&self) -> Vec<HermiteIndex> {
        (0..=self.max_degree).flat_map(|d| monomials(self.n, d)).collect()
    }

    pub fn dim(&self) -> u128 {
        (0..=self.max_degree as u64).map(|d| dim_homog(d, self.n)).sum()
    }

    /// `h_{q,α}(w)`
    pub fn basis_value(&self, q: &HermiteIndex, w: &[Complex64]) -> Complex64 {
        basis_value(q, self.alpha, w)
    }
}

/// Exponents `m` with `|m| = d`, in descending lexicographic order.
pub fn monomials(n: usize, d: u32) -> Vec<HermiteIndex> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<HermiteIndex>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(HermiteIndex(prefix.clone()));
            prefix.pop();
            return;
        }
        for first in (0..=d).rev() {
            prefix.push(first);
            rec(n, d - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(HermiteIndex(vec![]));
        }
        return out;
    }
    rec(n, d, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Dimension `binom(N+n−1, n−1)` of the homogeneous polynomials of degree
/// `N` in `n` variables.
pub fn dim_homog(big_n: u64, n: usize) -> u128 {
    if n == 0 {
        return u128::from(big_n == 0);
    }
    let k = (n - 1) as u128;
    let top = big_n as u128 + k;
    // binom(top, k) with exact intermediate divisions
    (1..=k).fold(1u128, |acc, i| acc * (top - k + i) / i)
}

/// `h_{q,α}(w)`
pub fn basis_value(q: &HermiteIndex, alpha: f64, w: &[Complex64]) -> Complex64 {
    let norm2 = q.factorial() * (2.0 / alpha).powi(q.total() as i32);
    let mono: Complex64 = q.0.iter().zip(w).map(|(&e, &wi)| wi.powu(e)).product();
    mono / norm2.sqrt()
}

/// `σ_α(z,t)f` evaluated at `w`.
pub fn sigma_apply(
    alpha: f64,
    z: &[Complex64],
    t: f64,
    f: impl Fn(&[Complex64]) -> Complex64,
    w: &[Complex64],
) -> Complex64 {
    let z2: f64 = z.iter().map(|v| v.norm_sqr()).sum();
    let wz: Complex64 = w.iter().zip(z).map(|(a, b)| a * b.conj()).sum();
    let shifted: Vec<Complex64> = w.iter().zip(z).map(|(a, b)| a + b).collect();
    let phase = Complex64::new(-alpha * z2 / 4.0, alpha * t) - wz * (alpha / 2.0);
    phase.exp() * f(&shifted)
}

/// `L_0(x), …, L_N(x)` by the three-term recurrence.
pub fn laguerre_all(big_n: usize, x: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(big_n + 1);
    out.push(1.0);
    if big_n >= 1 {
        out.push(1.0 - x);
    }
    for k in 1..big_n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 - x) * out[k] - kf * out[k - 1]) / (kf + 1.0);
        out.push(next);
    }
    out
}

fn check_alpha(alpha: f64) -> Result<(), FockError> {
    if alpha > 0.0 && alpha.is_finite() {
        Ok(())
    } else {
        Err(FockError::NonPositiveAlpha(alpha))
    }
}

/// `⟨σ_α(z,t)h_{q,α}, h_{q,α}⟩ = e^{iαt − α|z|²/4} Π L_{q_i}(α|z_i|²/2)`.
pub fn diag_coeff(q: &HermiteIndex, alpha: f64, z: &CVector, t: f64) -> Result<Complex64, FockError> {
    check_alpha(alpha)?;
    if z.len() != q.rank() {
        return Err(FockError::DimensionMismatch { expected: q.rank(), got: z.len() });
    }
    let z2 = z.norm_squared();
    let lag: f64 = q.0.iter().zip(z.iter()).map(|(&e, zi)| laguerre_all(e as usize, alpha * zi.norm_sqr() / 2.0)[e as usize]).product();
    Ok(Complex64::new(-alpha * z2 / 4.0, alpha * t).exp() * lag)
}

/// Average of the diagonal coefficients over `|q| = N`, without the
/// `e^{iαt − α|z|²/4}` prefactor.
pub fn zeta(z: &CVector, big_n: usize, alpha: f64) -> Result<Complex64, FockError> {
    check_alpha(alpha)?;
    // coefficients of Π_i (Σ_a L_a(x_i) s^a), truncated at s^N
    let mut conv = vec![0.0; big_n + 1];
    conv[0] = 1.0;
    for zi in z.iter() {
        let lag = laguerre_all(big_n, alpha * zi.norm_sqr() / 2.0);
        let mut next = vec![0.0; big_n + 1];
        for (d, slot) in next.iter_mut().enumerate() {
            *slot = (0..=d).map(|a| conv[d - a] * lag[a]).sum();
        }
        conv = next;
    }
    let r = dim_homog(big_n as u64, z.len()) as f64;
    Ok(Complex64::new(conv[big_n] / r, 0.0))
}

const SERIES_TOL: f64 = 1e-14;
const SERIES_CAP: usize = 60;

/// `(n−1)! Σ_j Π(c_i^{j_i}/j_i!) / (|j|+n−1)!` with `c_i = −r²|z_i|²/4`,
/// summed by total degree `|j|`: `(n−1)!(x/2)^{1−n} J_{n−1}(x)`, `x = r|z|`.
pub fn bessel_sphere_target(r: f64, z: &CVector) -> f64 {
    let n = z.len().max(1) as f64;
    let c = -r * r * z.norm_squared() / 4.0;
    let mut term = 1.0;
    let mut sum = 1.0;
    for j in 0..SERIES_CAP {
        let jf = j as f64;
        let ratio = c / ((jf + 1.0) * (jf + n));
        term *= ratio;
        sum += term;
        if term.abs() < SERIES_TOL && ratio.abs() < 1.0 {
            break;
        }
    }
    sum
}

/// `|ζ(z, N, r²/(2N)) − target(r, z)|`.
pub fn limit_gap(r: f64, z: &CVector, big_n: usize) -> Result<f64, FockError> {
    let target = bessel_sphere_target(r, z);
    let zeta = if big_n == 0 {
        Complex64::new(1.0, 0.0)
    } else {
        zeta(z, big_n, r * r / (2.0 * big_n as f64))?
    };
    Ok((zeta - target).norm())
}

/// Matrix of `f ↦ f(A⁻¹·)` on the homogeneous polynomials of degree `d`, in
/// the orthonormal basis `w^m/√m!` ordered as [`monomials`].
pub fn w_action_matrix(a: &CMatrix, d: u32) -> Result<CMatrix, FockError> {
    let n = a.nrows();
    if a.ncols() != n {
        return Err(FockError::DimensionMismatch { expected: n, got: a.ncols() });
    }
    let basis = monomials(n, d);
    let index: BTreeMap<&HermiteIndex, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let b = a.adjoint();
    let mut out = CMatrix::zeros(basis.len(), basis.len());
    for (col, q) in basis.iter().enumerate() {
        // Π_i (Σ_j B_ij w_j)^{q_i}
        let mut poly: BTreeMap<Vec<u32>, Complex64> = BTreeMap::from([(vec![0; n], Complex64::new(1.0, 0.0))]);
        for (i, &e) in q.0.iter().enumerate() {
            for _ in 0..e {
                let mut next = BTreeMap::new();
                for (mono, c) in &poly {
                    for j in 0..n {
                        let mut m = mono.clone();
                        m[j] += 1;
                        *next.entry(m).or_insert(Complex64::new(0.0, 0.0)) += c * b[(i, j)];
                    }
                }
                poly = next;
            }
        }
        let qf = q.factorial();
        for (mono, c) in poly {
            let m = HermiteIndex(mono);
            let row = index[&m];
            out[(row, col)] = c * (m.factorial() / qf).sqrt();
        }
    }
    Ok(out)
}

/// Eigenvalue `−|α|(n + 2|m|)` of the Heisenberg sub-Laplacian on `h_m`.
pub fn sub_laplacian_diag(alpha: f64, m: &HermiteIndex) -> f64 {
    -alpha.abs() * (m.rank() as f64 + 2.0 * m.total() as f64)
}

/// `∫ f ḡ (α/2π)ⁿ e^{−α|w|²/2} dw` for `n ∈ {1, 2}`, with `w_i = √(2s_i/α)e^{iθ_i}`:
/// Gauss–Laguerre in each `s_i`, periodic trapezoid in each `θ_i`.
pub fn fock_pairing(
    n: usize,
    alpha: f64,
    radial: usize,
    angular: usize,
    f: impl Fn(&[Complex64]) -> Complex64,
    g: impl Fn(&[Complex64]) -> Complex64,
) -> Result<Complex64, FockError> {
    check_alpha(alpha)?;
    let rule = gauss_laguerre(radial);
    let angles = circle_angles(angular);
    let point = |s: f64, th: f64| Complex64::from_polar((2.0 * s / alpha).sqrt(), th);
    let weight_a = 1.0 / angular as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    match n {
        1 => {
            for (&s, &ws) in rule.nodes.iter().zip(&rule.weights) {
                for &th in &angles {
                    let w = [point(s, th)];
                    acc += f(&w) * g(&w).conj() * (ws * weight_a);
                }
            }
        }
        2 => {
            for (&s1, &w1) in rule.nodes.iter().zip(&rule.weights) {
                for (&s2, &w2) in rule.nodes.iter().zip(&rule.weights) {
                    let wt = w1 * w2 * weight_a * weight_a;
                    if wt == 0.0 {
                        continue;
                    }
                    for &t1 in &angles {
                        for &t2 in &angles {
                            let w = [point(s1, t1), point(s2, t2)];
                            acc += f(&w) * g(&w).conj() * wt;
                        }
                    }
                }
            }
        }
        other => return Err(FockError::Unsupported(other)),
    }
    Ok(acc)
}

/// `⟨h_{p,α}, h_{q,α}⟩` by quadrature with `degree` radial nodes per variable.
pub fn fock_inner_numeric(p: &HermiteIndex, q: &HermiteIndex, alpha: f64, degree: usize) -> Result<Complex64, FockError> {
    if p.rank() != q.rank() {
        return Err(FockError::DimensionMismatch { expected: p.rank(), got: q.rank() });
    }
    let angular = degree + 1;
    for (&a, &b) in p.0.iter().zip(&q.0) {
        // radial integrand s^{(a+b)/2}, angular mode a − b
        if 2 * degree <= a.max(b) as usize || angular <= a.abs_diff(b) as usize {
            return Err(FockError::Unresolved(format!("degree {degree} too small for exponents {a}, {b}")));
        }
    }
    fock_pairing(p.rank(), alpha, degree, angular, |w| basis_value(p, alpha, w), |w| basis_value(q, alpha, w))
}

/// `⟨σ_α(z,t)h_{q,α}, h_{q,α}⟩` by quadrature, checked against a 1.5× finer
/// rule.
pub fn sigma_diag_numeric(q: &HermiteIndex, alpha: f64, z: &CVector, t: f64, degree: usize) -> Result<Complex64, FockError> {
    let n = q.rank();
    if z.len() != n {
        return Err(FockError::DimensionMismatch { expected: n, got: z.len() });
    }
    let zs: Vec<Complex64> = z.iter().copied().collect();
    let run = |deg: usize| {
        fock_pairing(
            n,
            alpha,
            deg,
            2 * deg,
            |w| sigma_apply(alpha, &zs, t, |v| basis_value(q, alpha, v), w),
            |w| basis_value(q, alpha, w),
        )
    };
    let coarse = run(degree)?;
    let fine = run(degree + degree / 2)?;
    let diff = (fine - coarse).norm();
    if diff > 1e-8 {
        return Err(FockError::Unresolved(format!("rules of {degree} and {} nodes differ by {diff:.3e}", degree + degree / 2)));
    }
    Ok(fine)
}
