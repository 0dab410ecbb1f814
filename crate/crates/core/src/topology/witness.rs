//! Explicit points on the `k`-th orbit approaching the base point of a limit
//! orbit, and a numeric check of the convergence.

use serde::{Deserialize, Serialize};

use crate::coadjoint::{self, base_functional, functional_distance, Functional, OrbitParam};
use crate::inverse_spectral::{build_arrowhead, build_rank_one};
use crate::matrix::{self, CMatrix, CVector, SkewHermitian};
use crate::weights;
use crate::Complex64;

use super::descriptor::{SampleParam, SequenceDescriptor};
use super::{check_target, is_limit_orbit, TopologyError};

/// Parameters of a point on the `k`-th orbit.
#[derive(Clone, Debug)]
pub enum Witness {
    /// `(A(J_λ + (i/α)zz*)A*, √2·Az, α)`
    Generic { a: CMatrix, z: CVector },
    /// `(A(J_μ ⊕ 0 + w)A*, A v_r, 0)`
    Intermediate { a: CMatrix, w: SkewHermitian },
    /// `(A J_λ A*, 0, 0)`
    Character { a: CMatrix },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LimitReport {
    pub target: OrbitParam,
    /// `distances[k−1]` is the distance at sample `k`.
    pub distances: Vec<f64>,
    pub converged: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagnostic: Option<String>,
}

/// The witness `(A_k, z_k)` for a generic sequence converging to `target`.
pub fn witness_points(seq: &SequenceDescriptor, target: &OrbitParam, k: usize) -> Result<(CMatrix, CVector), TopologyError> {
    if !is_limit_orbit(seq, target)? {
        return Err(TopologyError::NotALimit(format!("{target:?}")));
    }
    match construct(seq, target, k)? {
        Witness::Generic { a, z } => Ok((a, z)),
        _ => Err(TopologyError::WrongBranch("witness_points needs a generic sequence".into())),
    }
}

/// The functional given by the witness at sample `k`.
pub fn witness_functional(seq: &SequenceDescriptor, target: &OrbitParam, k: usize) -> Result<Functional, TopologyError> {
    check_target(seq, target)?;
    let w = construct(seq, target, k)?;
    realize(seq, k, &w)
}

fn realize(seq: &SequenceDescriptor, k: usize, w: &Witness) -> Result<Functional, TopologyError> {
    Ok(match (seq.sample(k)?, w) {
        (SampleParam::Generic { lambda, alpha }, Witness::Generic { a, z }) => coadjoint::orbit_point_generic(lambda, alpha, a, z)?,
        (SampleParam::Intermediate { mu, r }, Witness::Intermediate { a, w }) => coadjoint::orbit_point_intermediate(mu, r, a, w)?,
        (SampleParam::Character { lambda }, Witness::Character { a }) => {
            let base = base_functional(&OrbitParam::Character { lambda: lambda.clone() });
            Functional::new(base.mat.conjugate_by(a), base.vec, 0.0)?
        }
        _ => unreachable!("witness family follows the sample family"),
    })
}

/// Distances from the witness points to the base point of `target`, for
/// every sample. Samples where the limit construction does not apply (early
/// samples, or targets that are not limits) use the same formulas with
/// negative radicands clamped to 0, falling back to the base point.
pub fn verify_convergence(seq: &SequenceDescriptor, target: &OrbitParam, tol: f64) -> LimitReport {
    let mut report = LimitReport { target: target.clone(), distances: Vec::new(), converged: false, diagnostic: None };
    if let Err(e) = check_target(seq, target) {
        report.diagnostic = Some(e.to_string());
        return report;
    }
    let goal = base_functional(target);
    for k in 1..=seq.len() {
        let d = witness_functional(seq, target, k)
            .map_err(|e| e.to_string())
            .and_then(|f| functional_distance(&f, &goal).map_err(|e| e.to_string()));
        match d {
            Ok(d) => report.distances.push(d),
            Err(e) => {
                report.diagnostic.get_or_insert(format!("witness failed at k={k}: {e}"));
                report.distances.push(f64::INFINITY);
            }
        }
    }
    report.converged = report.diagnostic.is_none() && report.distances.last().is_some_and(|&d| d < tol);
    report
}

fn identity(n: usize) -> CMatrix {
    CMatrix::identity(n, n)
}

/// `A = Q*` for an eigenbasis `Q` of `S/i`, so `A S A* = J_β` with `β` the
/// spectrum in nonincreasing order.
fn diagonalizer(s: &SkewHermitian) -> Result<CMatrix, TopologyError> {
    Ok(matrix::eig_hermitian(&s.hermitian_form())?.vectors.adjoint())
}

fn real_vec(v: &[f64]) -> CVector {
    CVector::from_iterator(v.len(), v.iter().map(|&x| Complex64::new(x, 0.0)))
}

fn construct(seq: &SequenceDescriptor, target: &OrbitParam, k: usize) -> Result<Witness, TopologyError> {
    let n = seq.n();
    Ok(match seq.sample(k)? {
        SampleParam::Generic { lambda, alpha } => {
            let l = lambda.entries();
            match target {
                OrbitParam::Generic { .. } => Witness::Generic { a: identity(n), z: CVector::zeros(n) },
                OrbitParam::Intermediate { .. } => {
                    // cancel the diverging edge entry of J_λ with (i/α)|z_edge|²
                    let mut z = vec![0.0; n];
                    if alpha > 0.0 {
                        z[n - 1] = (-alpha * l[n - 1] as f64).max(0.0).sqrt();
                        Witness::Generic { a: identity(n), z: real_vec(&z) }
                    } else {
                        z[0] = (-alpha * l[0] as f64).max(0.0).sqrt();
                        // e_1 ↦ e_n, e_{i+1} ↦ e_i
                        let a = CMatrix::from_fn(n, n, |i, j| {
                            if (j == i + 1) || (i == n - 1 && j == 0) {
                                Complex64::new(1.0, 0.0)
                            } else {
                                Complex64::new(0.0, 0.0)
                            }
                        });
                        Witness::Generic { a, z: real_vec(&z) }
                    }
                }
                OrbitParam::Character { lambda: rho } => {
                    let sign: i8 = if alpha > 0.0 { 1 } else { -1 };
                    let fits = if sign > 0 { weights::precsim(lambda, rho)? } else { weights::precsim(rho, lambda)? };
                    if !fits {
                        return Ok(Witness::Generic { a: identity(n), z: CVector::zeros(n) });
                    }
                    // J_λ + sign·i z̃z̃* has spectrum ρ; z = z̃√|α| makes the
                    // rank-one part of the orbit point equal to it.
                    let sol = build_rank_one(lambda, rho, sign)?;
                    let m = matrix::rank_one_update(lambda, &sol.z(), sign as f64)?;
                    let z = sol.z() * Complex64::new(alpha.abs().sqrt(), 0.0);
                    Witness::Generic { a: diagonalizer(&m)?, z }
                }
            }
        }
        SampleParam::Intermediate { mu, .. } => match target {
            OrbitParam::Character { lambda } if weights::interlaces_down(lambda, mu)? => {
                // arrowhead J_μ ⊕ 0 + B with spectrum λ; B lies in span{ζ × v_r}
                let sol = build_arrowhead(mu, lambda)?;
                let full = matrix::arrowhead(mu, &sol.z(), sol.x)?;
                let w = SkewHermitian::from_rounded(full.clone().into_inner() - matrix::j_embed(mu).into_inner());
                Witness::Intermediate { a: diagonalizer(&full)?, w }
            }
            _ => Witness::Intermediate { a: identity(n), w: SkewHermitian::zeros(n) },
        },
        SampleParam::Character { .. } => Witness::Character { a: identity(n) },
    })
}

/// A lower bound on the distance from the base point of `target` to the
/// `k`-th orbit, from quantities constant on the orbit: `x`, `|u|` (for
/// intermediate and character orbits), and the interval in which each
/// eigenvalue of `U/i` must lie (Hoffman–Wielandt).
pub fn orbit_distance_lower_bound(seq: &SequenceDescriptor, k: usize, target: &OrbitParam) -> Result<f64, TopologyError> {
    check_target(seq, target)?;
    let goal = base_functional(target);
    let sigma: Vec<f64> = match target {
        OrbitParam::Generic { lambda, .. } | OrbitParam::Character { lambda } => lambda.to_f64(),
        OrbitParam::Intermediate { mu, .. } => {
            let mut v = mu.to_f64();
            v.push(0.0);
            v.sort_by(|a, b| b.total_cmp(a));
            v
        }
    };
    let u_goal = goal.vec.norm();
    let inf = f64::INFINITY;
    let (boxes, x, u_gap): (Vec<(f64, f64)>, f64, f64) = match seq.sample(k)? {
        SampleParam::Generic { lambda, alpha } => {
            let l = lambda.to_f64();
            let n = l.len();
            let b = if alpha > 0.0 {
                (0..n).map(|i| (l[i], if i == 0 { inf } else { l[i - 1] })).collect()
            } else {
                (0..n).map(|i| (if i + 1 == n { -inf } else { l[i + 1] }, l[i])).collect()
            };
            (b, alpha, 0.0)
        }
        SampleParam::Intermediate { mu, r } => {
            let m = mu.to_f64();
            let n = m.len() + 1;
            let b = (0..n)
                .map(|i| (if i == n - 1 { -inf } else { m[i] }, if i == 0 { inf } else { m[i - 1] }))
                .collect();
            (b, 0.0, (r - u_goal).abs())
        }
        SampleParam::Character { lambda } => (lambda.to_f64().into_iter().map(|v| (v, v)).collect(), 0.0, u_goal),
    };
    let spec2: f64 = sigma.iter().zip(&boxes).map(|(s, &(lo, hi))| (s - s.clamp(lo, hi)).powi(2)).sum();
    Ok((spec2 + u_gap * u_gap + (x - goal.x).powi(2)).sqrt())
}
