//! The unit sphere of `ℂⁿ ≅ ℝ²ⁿ`: a simplex-times-torus parameterization of
//! the ball, its Jacobian, the `U(n)`-invariant probability measure, and a
//! Haar Monte-Carlo estimate of `∫ e^{−i(rv,z)} dσ(v)`.

use nalgebra::DMatrix;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coadjoint::v_r;
use crate::matrix::{haar_unitary, CVector};
use crate::quadrature::{circle_angles, gauss_legendre_on};
use crate::Complex64;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SphereError {
    #[error("invalid sphere point: {0}")]
    InvalidPoint(String),
    #[error("point within {margin} of the boundary of the parameter domain")]
    NearBoundary { margin: f64 },
}

/// Parameters `(s_1, …, s_{n−1}, t_1, …, t_n, ρ)` with `s` in the simplex
/// `Σ s_i ≤ 1`, `t ∈ [0, 2π)ⁿ`, `ρ ∈ (0, 1]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpherePoint {
    s: Vec<f64>,
    t: Vec<f64>,
    rho: f64,
}

impl SpherePoint {
    pub fn new(s: Vec<f64>, t: Vec<f64>, rho: f64) -> Result<Self, SphereError> {
        let bad = |m: &str| Err(SphereError::InvalidPoint(m.into()));
        if t.is_empty() || s.len() + 1 != t.len() {
            return bad("need n angles and n − 1 simplex coordinates");
        }
        if s.iter().any(|&v| !(v >= 0.0)) || s.iter().sum::<f64>() > 1.0 + 1e-12 {
            return bad("s must be nonnegative with sum at most 1");
        }
        if t.iter().any(|&v| !(0.0..std::f64::consts::TAU).contains(&v)) {
            return bad("angles must lie in [0, 2π)");
        }
        if !(rho > 0.0 && rho <= 1.0) {
            return bad("rho must lie in (0, 1]");
        }
        Ok(Self { s, t, rho })
    }

    pub fn n(&self) -> usize {
        self.t.len()
    }

    pub fn s(&self) -> &[f64] {
        &self.s
    }

    pub fn t(&self) -> &[f64] {
        &self.t
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    /// Flattened `(s, t, ρ)`.
    fn coords(&self) -> Vec<f64> {
        self.s.iter().chain(&self.t).copied().chain([self.rho]).collect()
    }
}

/// `ψ` on raw coordinates, no domain checks.
fn psi_raw(n: usize, x: &[f64]) -> Vec<f64> {
    let (s, rest) = x.split_at(n - 1);
    let (t, rho) = rest.split_at(n);
    let rho = rho[0];
    let last = 1.0 - s.iter().sum::<f64>();
    let mut out = Vec::with_capacity(2 * n);
    for (i, &ti) in t.iter().enumerate() {
        let amp = if i + 1 < n { s[i] } else { last }.max(0.0).sqrt();
        out.push(rho * amp * ti.cos());
        out.push(rho * amp * ti.sin());
    }
    out
}

/// `ρ(√s₁cos t₁, √s₁sin t₁, …, √(1−Σs)cos t_n, √(1−Σs)sin t_n)`.
pub fn psi(p: &SpherePoint) -> Vec<f64> {
    psi_raw(p.n(), &p.coords())
}

/// `ρ^{2n−1}/2^{n−1}`
pub fn jacobian_analytic(rho: f64, n: usize) -> f64 {
    rho.powi(2 * n as i32 - 1) / 2f64.powi(n as i32 - 1)
}

/// `|det Dψ|` by central differences with step `h`.
pub fn jacobian_numeric(p: &SpherePoint, h: f64) -> Result<f64, SphereError> {
    let n = p.n();
    let margin = 2.0 * h;
    let slack = 1.0 - p.s.iter().sum::<f64>();
    if p.s.iter().any(|&v| v < margin) || slack < margin || p.rho < margin || p.rho > 1.0 - margin {
        return Err(SphereError::NearBoundary { margin });
    }
    let x = p.coords();
    let dim = 2 * n;
    let mut jac = DMatrix::<f64>::zeros(dim, dim);
    for c in 0..dim {
        let mut plus = x.clone();
        let mut minus = x.clone();
        plus[c] += h;
        minus[c] -= h;
        let fp = psi_raw(n, &plus);
        let fm = psi_raw(n, &minus);
        for r in 0..dim {
            jac[(r, c)] = (fp[r] - fm[r]) / (2.0 * h);
        }
    }
    Ok(jac.determinant().abs())
}

/// Resolution of the sphere quadrature: `simplex` steps per unit of each
/// `s_i` and `angles` trapezoid nodes per `t_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphereGrid {
    pub simplex: usize,
    pub angles: usize,
}

impl SphereGrid {
    pub fn uniform(res: usize) -> Self {
        Self { simplex: res, angles: res }
    }
}

/// Simplex nodes `s = h·i`, `Σ i ≤ m`, with weight halved for every boundary
/// face the node lies on.
fn simplex_nodes(dim: usize, m: usize) -> Vec<(Vec<f64>, f64)> {
    let mut out = Vec::new();
    let mut idx = vec![0usize; dim];
    loop {
        let total: usize = idx.iter().sum();
        if total <= m {
            let faces = idx.iter().filter(|&&i| i == 0).count() + usize::from(total == m);
            let s = idx.iter().map(|&i| i as f64 / m as f64).collect();
            out.push((s, 0.5f64.powi(faces as i32)));
        }
        // odometer over [0, m]^dim
        let mut k = 0;
        loop {
            if k == dim {
                return out;
            }
            idx[k] += 1;
            if idx[k] <= m {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// `∫ f dσ̄` over the unit sphere of `ℂⁿ` for the `U(n)`-invariant
/// probability measure `dσ̄ = ((n−1)!/(2π)ⁿ) ds dt` in the coordinates of
/// [`psi`] at `ρ = 1`.
pub fn sphere_integral(f: impl Fn(&[Complex64]) -> Complex64, n: usize, grid: SphereGrid) -> Complex64 {
    sphere_integral_at(&f, n, grid, 1.0)
}

fn sphere_integral_at(f: &impl Fn(&[Complex64]) -> Complex64, n: usize, grid: SphereGrid, rho: f64) -> Complex64 {
    let nodes = if n == 1 { vec![(vec![], 1.0)] } else { simplex_nodes(n - 1, grid.simplex.max(1)) };
    let angles = circle_angles(grid.angles.max(1));
    let m = angles.len();
    let total_angles = m.pow(n as u32);
    let mut acc = Complex64::new(0.0, 0.0);
    let mut wsum = 0.0;
    let mut v = vec![Complex64::new(0.0, 0.0); n];
    for (s, w) in &nodes {
        let last = (1.0 - s.iter().sum::<f64>()).max(0.0);
        let amps: Vec<f64> = (0..n).map(|i| rho * if i + 1 < n { s[i] } else { last }.sqrt()).collect();
        let mut inner = Complex64::new(0.0, 0.0);
        for flat in 0..total_angles {
            let mut rem = flat;
            for (i, vi) in v.iter_mut().enumerate() {
                *vi = Complex64::from_polar(amps[i], angles[rem % m]);
                rem /= m;
            }
            inner += f(&v);
        }
        acc += inner * (*w / total_angles as f64);
        wsum += w;
    }
    acc / wsum
}

/// Both sides of the decomposition of Lebesgue measure on the unit ball of
/// `ℝ²ⁿ`: a midpoint product grid with `grid` cells per axis and an indicator
/// (`lhs`), and `∫_0^1 ρ^{2n−1}/2^{n−1} ∫ f(ρv) dσ(v) dρ` with `σ` of total
/// mass `(2π)ⁿ/(n−1)!` (`rhs`).
pub fn ball_integral_check(f: impl Fn(&[f64]) -> f64, n: usize, grid: usize) -> (f64, f64) {
    let dim = 2 * n;
    let h = 2.0 / grid as f64;
    let mids: Vec<f64> = (0..grid).map(|i| -1.0 + h * (i as f64 + 0.5)).collect();
    let mut x = vec![0.0; dim];
    let mut lhs = 0.0;
    // nested loops over the first dim − 1 axes with running |x|²
    fn walk(axis: usize, r2: f64, x: &mut [f64], mids: &[f64], f: &impl Fn(&[f64]) -> f64, acc: &mut f64) {
        let last = axis + 1 == x.len();
        for &m in mids {
            let r = r2 + m * m;
            if r > 1.0 {
                continue;
            }
            x[axis] = m;
            if last {
                *acc += f(x);
            } else {
                walk(axis + 1, r, x, mids, f, acc);
            }
        }
    }
    walk(0, 0.0, &mut x, &mids, &f, &mut lhs);
    lhs *= h.powi(dim as i32);

    let mass = std::f64::consts::TAU.powi(n as i32) / (1..n).map(|k| k as f64).product::<f64>();
    let sg = SphereGrid { simplex: grid, angles: grid.min(64) };
    let radial = gauss_legendre_on(32, 0.0, 1.0);
    let fc = |v: &[Complex64]| {
        let real: Vec<f64> = v.iter().flat_map(|c| [c.re, c.im]).collect();
        Complex64::new(f(&real), 0.0)
    };
    let rhs = radial.integrate(|rho| {
        let avg = sphere_integral_at(&fc, n, sg, rho).re;
        jacobian_analytic(rho, n) * mass * avg
    });
    (lhs, rhs)
}

/// Monte-Carlo mean with its standard error.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MonteCarlo {
    pub mean: Complex64,
    pub stderr: f64,
}

/// `∫_{U(n)} e^{−i(Bv_r, z)} dB` over Haar-random `B`, where `(a, b) = Re Σ a_i b̄_i`.
pub fn haar_unitary_integral(r: f64, z: &CVector, samples: usize, seed: u64) -> MonteCarlo {
    let n = z.len();
    let samples = samples.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let v = v_r(n, r);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut sum_sq = 0.0;
    for _ in 0..samples {
        let bv = haar_unitary(n, &mut rng) * &v;
        let pairing: f64 = bv.iter().zip(z.iter()).map(|(a, b)| (a * b.conj()).re).sum();
        let x = Complex64::new(0.0, -pairing).exp();
        sum += x;
        sum_sq += x.norm_sqr();
    }
    let k = samples as f64;
    let mean = sum / k;
    let var = if samples > 1 { ((sum_sq - k * mean.norm_sqr()) / (k - 1.0)).max(0.0) } else { 0.0 };
    MonteCarlo { mean, stderr: (var / k).sqrt() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn psi_examples() {
        assert_eq!(psi(&SpherePoint::new(vec![], vec![0.0], 1.0).unwrap()), vec![1.0, 0.0]);
        assert_eq!(psi(&SpherePoint::new(vec![1.0], vec![0.0, 0.0], 1.0).unwrap()), vec![1.0, 0.0, 0.0, 0.0]);
        let p = SpherePoint::new(vec![0.2, 0.3], vec![0.1, 2.0, 4.0], 0.7).unwrap();
        let norm = psi(&p).iter().map(|v| v * v).sum::<f64>().sqrt();
        assert!((norm - 0.7).abs() < 1e-15);
        assert!(SpherePoint::new(vec![0.6, 0.6], vec![0.0; 3], 1.0).is_err());
        assert!(SpherePoint::new(vec![0.5], vec![0.0, 7.0], 1.0).is_err());
        assert!(SpherePoint::new(vec![0.5], vec![0.0, 0.0], 0.0).is_err());
    }

    #[test]
    fn jacobian_examples() {
        assert_eq!(jacobian_analytic(0.3, 1), 0.3);
        assert_eq!(jacobian_analytic(1.0, 2), 0.5);
        assert_eq!(jacobian_analytic(0.5, 2), 0.0625);
        let p = SpherePoint::new(vec![0.3], vec![1.0, 2.0], 0.6).unwrap();
        assert!((jacobian_numeric(&p, 1e-4).unwrap() - jacobian_analytic(0.6, 2)).abs() < 1e-6);
        let edge = SpherePoint::new(vec![1e-5], vec![1.0, 2.0], 0.6).unwrap();
        assert!(jacobian_numeric(&edge, 1e-4).is_err());
    }

    #[test]
    fn sphere_integral_examples() {
        for n in 1..=3 {
            let g = SphereGrid::uniform(16);
            let one = sphere_integral(|_| Complex64::new(1.0, 0.0), n, g);
            assert!((one.re - 1.0).abs() < 1e-14);
            let v1 = sphere_integral(|v| Complex64::new(v[0].norm_sqr(), 0.0), n, g);
            assert!((v1.re - 1.0 / n as f64).abs() < 1e-12, "n={n}: {v1}");
        }
    }

    #[test]
    fn ball_examples() {
        let (l, r) = ball_integral_check(|_| 1.0, 1, 400);
        assert!((l - PI).abs() / PI < 1e-3 && (r - PI).abs() < 1e-12, "{l} {r}");
        let (l, r) = ball_integral_check(|x| x.iter().map(|v| v * v).sum(), 1, 400);
        assert!((l - PI / 2.0).abs() / PI < 1e-3 && (r - PI / 2.0).abs() < 1e-12, "{l} {r}");
    }

    #[test]
    fn haar_examples() {
        let z0 = CVector::zeros(2);
        let mc = haar_unitary_integral(1.0, &z0, 100, 3);
        assert_eq!(mc.mean, Complex64::new(1.0, 0.0));
        assert_eq!(mc.stderr, 0.0);
    }
}
