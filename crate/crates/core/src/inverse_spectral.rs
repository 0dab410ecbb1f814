//! Inverse eigenvalue constructions.
//!
//! * [`build_arrowhead`]: given interlacing `μ` (rank `n−1`) and `λ` (rank
//!   `n`), moduli `|z_j|` and a real `x` such that `J_μ ⊕ 0 + B` has spectrum
//!   `iλ`.
//! * [`build_rank_one`]: given interlacing `λ`, `β`, moduli `|z_j|` such that
//!   `J_λ ± i zz*` has spectrum `iβ`.
//!
//! Only moduli are determined; every constructed vector has phase zero.

use nalgebra::DVector;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;
use twofloat::TwoFloat;

use crate::matrix::{self, CVector, MatrixError, Spectrum};
use crate::weights::{interlaces_down, precsim, weight_sum, DominantWeight, WeightError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum InverseSpectralError {
    #[error("Y entries must be pairwise distinct (Y[{0}] = Y[{1}])")]
    RepeatedY(usize, usize),
    #[error("index k = {k} out of range for n = {n}")]
    IndexOutOfRange { k: usize, n: usize },
    #[error("length mismatch: X has {x} entries, Y has {y} (expected {x} - 1)")]
    LengthMismatch { x: usize, y: usize },
    #[error("{lambda} does not interlace {mu}: need lambda_1 >= mu_1 >= lambda_2 >= ... >= mu_(n-1) >= lambda_n")]
    NotInterlacingArrowhead { lambda: DominantWeight, mu: DominantWeight },
    #[error("interlacing required for sign {sign:+}: {detail}")]
    NotInterlacingRankOne { sign: i8, detail: String },
    #[error("alpha must be nonzero")]
    ZeroAlpha,
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ArrowheadSolution {
    pub zmods: Vec<f64>,
    pub x: f64,
}

impl ArrowheadSolution {
    pub fn z(&self) -> CVector {
        DVector::from_iterator(self.zmods.len(), self.zmods.iter().map(|&m| Complex64::new(m, 0.0)))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RankOneSolution {
    pub zmods: Vec<f64>,
    pub sign: i8,
}

impl RankOneSolution {
    pub fn z(&self) -> CVector {
        DVector::from_iterator(self.zmods.len(), self.zmods.iter().map(|&m| Complex64::new(m, 0.0)))
    }
}

/// Both sides of
/// `Σ_j Π_{i≠k}(X_i − Y_j) / Π_{i≠j}(Y_i − Y_j) = Σ_{j≠k} X_j − Σ_j Y_j`
/// for `X` of length `n`, `Y` of length `n − 1` and a 0-based index `k`.
pub fn sum_identity_sides(x: &[f64], y: &[f64], k: usize) -> Result<(f64, f64), InverseSpectralError> {
    let n = x.len();
    if y.len() + 1 != n {
        return Err(InverseSpectralError::LengthMismatch { x: n, y: y.len() });
    }
    if k >= n {
        return Err(InverseSpectralError::IndexOutOfRange { k, n });
    }
    for i in 0..y.len() {
        for j in i + 1..y.len() {
            if y[i] == y[j] {
                return Err(InverseSpectralError::RepeatedY(i, j));
            }
        }
    }
    // The terms grow like 1/Π|Y_i − Y_j| and cancel, so clustered Y loses
    // digits in plain f64; double-double keeps the sum accurate.
    let dd = TwoFloat::from;
    let one = dd(1.0);
    let mut lhs = dd(0.0);
    for (j, &yj) in y.iter().enumerate() {
        let num = x.iter().enumerate().filter(|&(i, _)| i != k).fold(one, |p, (_, &xi)| p * (dd(xi) - dd(yj)));
        let den = y.iter().enumerate().filter(|&(i, _)| i != j).fold(one, |p, (_, &yi)| p * (dd(yi) - dd(yj)));
        // TwoFloat division is only f64-accurate; one correction step fixes it
        let q = num / den;
        lhs += q + (num - q * den) / den;
    }
    let rhs = x.iter().enumerate().filter(|&(j, _)| j != k).fold(dd(0.0), |s, (_, &v)| s + dd(v)) - y.iter().fold(dd(0.0), |s, &v| s + dd(v));
    Ok((f64::from(lhs), f64::from(rhs)))
}

/// Moduli and corner entry of the arrowhead matrix with spectrum `iλ`.
///
/// Equal entries of `μ` form runs; a run of length `L` forces `L − 1` entries
/// of `λ` to the same value and those eigenvalues decouple. The remaining
/// problem has distinct `μ` and is solved by
/// `|w_j|² = −Π_i(λ_i − μ_j) / Π_{i≠j}(μ_i − μ_j)`; each run's mass sits on its
/// first index.
pub fn build_arrowhead(mu: &DominantWeight, lambda: &DominantWeight) -> Result<ArrowheadSolution, InverseSpectralError> {
    if !interlaces_down(lambda, mu)? {
        return Err(InverseSpectralError::NotInterlacingArrowhead { lambda: lambda.clone(), mu: mu.clone() });
    }
    let m = mu.entries();
    let l = lambda.entries();
    let x = (weight_sum(lambda) - weight_sum(mu)) as f64;

    // runs of equal μ: (first index, value)
    let mut runs: Vec<(usize, i64)> = Vec::new();
    // λ indices strictly inside a run are the forced ones: μ_p ≥ λ_{p+1} ≥ μ_{p+1}
    // pins λ_{p+1} when μ_p = μ_{p+1}.
    let mut forced = vec![false; l.len()];
    for (j, &v) in m.iter().enumerate() {
        match runs.last() {
            Some(&(_, prev)) if prev == v => forced[j] = true,
            _ => runs.push((j, v)),
        }
    }
    let reduced_lambda: Vec<f64> = l.iter().zip(&forced).filter(|(_, &f)| !f).map(|(&v, _)| v as f64).collect();

    let mut zmods = vec![0.0; m.len()];
    for (a, &(first, value)) in runs.iter().enumerate() {
        let mj = value as f64;
        let num: f64 = reduced_lambda.iter().map(|li| li - mj).product();
        let den: f64 = runs.iter().enumerate().filter(|&(b, _)| b != a).map(|(_, &(_, v))| v as f64 - mj).product();
        let mass = -num / den;
        zmods[first] = clamp_mass(mass).sqrt();
    }
    Ok(ArrowheadSolution { zmods, x })
}

fn clamp_mass(v: f64) -> f64 {
    if (-1e-12..0.0).contains(&v) {
        0.0
    } else {
        v.max(0.0)
    }
}

/// Max entrywise gap between the spectrum of the arrowhead built from `sol`
/// and `λ`.
pub fn arrowhead_residual(
    mu: &DominantWeight,
    lambda: &DominantWeight,
    sol: &ArrowheadSolution,
) -> Result<f64, InverseSpectralError> {
    let s = matrix::spectrum_skew(&matrix::arrowhead(mu, &sol.z(), sol.x)?)?;
    Ok(s.max_diff(&lambda.to_f64()))
}

/// Moduli `|z_j|` with `spectrum(J_λ + sign·i zz*) = iβ`.
///
/// Coinciding neighbours in the interlacing chain are removed first, smallest
/// index first, each removal fixing `z_ℓ = 0`; the strict remainder uses
/// `|z_j|² = ∓Π_i(λ_j − β_i) / Π_{i≠j}(λ_j − λ_i)`.
pub fn build_rank_one(
    lambda: &DominantWeight,
    beta: &DominantWeight,
    sign: i8,
) -> Result<RankOneSolution, InverseSpectralError> {
    let sign: i8 = if sign >= 0 { 1 } else { -1 };
    let ok = if sign > 0 { precsim(lambda, beta)? } else { precsim(beta, lambda)? };
    if !ok {
        let detail = if sign > 0 {
            format!("need beta_1 >= lambda_1 >= beta_2 >= ... >= beta_n >= lambda_n, got lambda={lambda}, beta={beta}")
        } else {
            format!("need lambda_1 >= beta_1 >= lambda_2 >= ... >= lambda_n >= beta_n, got lambda={lambda}, beta={beta}")
        };
        return Err(InverseSpectralError::NotInterlacingRankOne { sign, detail });
    }
    let n = lambda.rank();
    // (original λ index, λ value) and β values still in play
    let mut lam: Vec<(usize, i64)> = lambda.entries().iter().copied().enumerate().collect();
    let mut bet: Vec<i64> = beta.entries().to_vec();
    'reduce: loop {
        for l in 0..bet.len() {
            if bet[l] == lam[l].1 {
                lam.remove(l);
                bet.remove(l);
                continue 'reduce;
            }
            let neighbour = if sign > 0 { l.checked_sub(1) } else { Some(l + 1).filter(|&i| i < lam.len()) };
            if let Some(i) = neighbour {
                if lam[i].1 == bet[l] {
                    lam.remove(i);
                    bet.remove(l);
                    continue 'reduce;
                }
            }
        }
        break;
    }

    let mut zmods = vec![0.0; n];
    for (j, &(orig, lj)) in lam.iter().enumerate() {
        let lj = lj as f64;
        let num: f64 = bet.iter().map(|&b| lj - b as f64).product();
        let den: f64 = lam.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, &(_, li))| lj - li as f64).product();
        let mass = -(sign as f64) * num / den;
        zmods[orig] = clamp_mass(mass).sqrt();
    }
    Ok(RankOneSolution { zmods, sign })
}

/// Max entrywise gap between the spectrum of `J_λ + sign·i zz*` and `β`.
pub fn rank_one_residual(
    lambda: &DominantWeight,
    beta: &DominantWeight,
    sol: &RankOneSolution,
) -> Result<f64, InverseSpectralError> {
    let s = matrix::spectrum_skew(&matrix::rank_one_update(lambda, &sol.z(), sol.sign as f64)?)?;
    Ok(s.max_diff(&beta.to_f64()))
}

/// Spectrum `β` of `J_λ + (i/α) zz*` and whether it interlaces `λ` on the side
/// given by the sign of `α` (above for `α > 0`, below for `α < 0`).
pub fn update_interlacing_verdict(
    lambda: &DominantWeight,
    z: &CVector,
    alpha: f64,
) -> Result<(Spectrum, bool), InverseSpectralError> {
    if alpha == 0.0 {
        return Err(InverseSpectralError::ZeroAlpha);
    }
    let beta = matrix::spectrum_skew(&matrix::rank_one_update(lambda, z, 1.0 / alpha)?)?;
    let l = lambda.to_f64();
    let b = beta.values();
    let scale = b.iter().chain(&l).fold(1.0f64, |m, v| m.max(v.abs()));
    let tol = 1e-10 * scale;
    let ge = |a: f64, c: f64| a >= c - tol;
    let n = l.len();
    let ok = if alpha > 0.0 {
        (0..n).all(|i| ge(b[i], l[i]) && (i + 1 == n || ge(l[i], b[i + 1])))
    } else {
        (0..n).all(|i| ge(l[i], b[i]) && (i + 1 == n || ge(b[i], l[i + 1])))
    };
    Ok((beta, ok))
}
