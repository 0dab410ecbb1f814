//! Convergence of sequences of coadjoint orbits of `G_n`: the exact limit
//! conditions, explicit witness points realizing a limit, and the matching
//! conditions on the unitary-dual side.

mod descriptor;
mod dual;
mod witness;

pub use descriptor::{
    DescriptorError, DescriptorSpec, Family, Limit, Position, SampleParam, ScalarRule, SequenceDescriptor, TailRule,
    WeightRule,
};
pub use dual::rep_side_limit;
pub use witness::{orbit_distance_lower_bound, verify_convergence, witness_functional, witness_points, LimitReport, Witness};

use thiserror::Error;

use crate::coadjoint::{CoadjointError, OrbitParam};
use crate::inverse_spectral::InverseSpectralError;
use crate::matrix::MatrixError;
use crate::weights::{self, DominantWeight};

#[derive(Debug, Error)]
pub enum TopologyError {
    #[error(transparent)]
    Descriptor(#[from] DescriptorError),
    #[error("target has rank {got}, sequence has rank {expected}")]
    RankMismatch { expected: usize, got: usize },
    #[error("invalid target: {0}")]
    InvalidTarget(CoadjointError),
    #[error("target {0} is not a limit of the sequence")]
    NotALimit(String),
    #[error("wrong branch: {0}")]
    WrongBranch(String),
    #[error(transparent)]
    Coadjoint(#[from] CoadjointError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    InverseSpectral(#[from] InverseSpectralError),
    #[error(transparent)]
    Weight(#[from] weights::WeightError),
}

fn check_target(seq: &SequenceDescriptor, target: &OrbitParam) -> Result<(), TopologyError> {
    target.validate().map_err(TopologyError::InvalidTarget)?;
    if target.rank() != seq.n() {
        return Err(TopologyError::RankMismatch { expected: seq.n(), got: target.rank() });
    }
    Ok(())
}

fn limit_is(seq: &SequenceDescriptor, limit: Limit, target: f64) -> bool {
    match limit.value() {
        Some(v) => (v - target).abs() <= seq.limit_tol(&limit, target),
        None => false,
    }
}

/// Sign of `α_k` on the whole tail window, if constant.
fn tail_alpha_sign(seq: &SequenceDescriptor) -> Option<i8> {
    let alpha = seq.scalars()?;
    let tail = &alpha[seq.tail_window().start() - 1..];
    if tail.iter().all(|&a| a > 0.0) {
        Some(1)
    } else if tail.iter().all(|&a| a < 0.0) {
        Some(-1)
    } else {
        None
    }
}

fn eventually(seq: &SequenceDescriptor, pred: impl FnMut(&DominantWeight) -> bool) -> bool {
    let w = seq.weights();
    w[seq.tail_window().start() - 1..].iter().all(pred)
}

/// Whether the orbits of `seq` converge to the orbit of `target`.
pub fn is_limit_orbit(seq: &SequenceDescriptor, target: &OrbitParam) -> Result<bool, TopologyError> {
    check_target(seq, target)?;
    let n = seq.n();
    Ok(match (seq.family(), target) {
        (Family::Generic, OrbitParam::Generic { lambda, alpha }) => {
            limit_is(seq, seq.scalar_limit(), *alpha) && eventually(seq, |l| l == lambda)
        }
        (Family::Generic, OrbitParam::Intermediate { mu, r }) => {
            if !limit_is(seq, seq.scalar_limit(), 0.0) {
                return Ok(false);
            }
            let m = mu.entries();
            let goal = -r * r / 2.0;
            match tail_alpha_sign(seq) {
                Some(1) => eventually(seq, |l| &l.entries()[..n - 1] == m) && limit_is(seq, seq.product_limit(n - 1, 1.0, 0.0), goal),
                Some(-1) => eventually(seq, |l| &l.entries()[1..] == m) && limit_is(seq, seq.product_limit(0, 1.0, 0.0), goal),
                _ => false,
            }
        }
        (Family::Generic, OrbitParam::Character { lambda }) => {
            if !limit_is(seq, seq.scalar_limit(), 0.0) {
                return Ok(false);
            }
            match tail_alpha_sign(seq) {
                Some(1) => {
                    eventually(seq, |l| weights::precsim(l, lambda).unwrap_or(false))
                        && limit_is(seq, seq.product_limit(n - 1, 1.0, 0.0), 0.0)
                }
                Some(-1) => {
                    eventually(seq, |l| weights::precsim(lambda, l).unwrap_or(false))
                        && limit_is(seq, seq.product_limit(0, 1.0, 0.0), 0.0)
                }
                _ => false,
            }
        }
        (Family::Intermediate, OrbitParam::Intermediate { mu, r }) => {
            eventually(seq, |m| m == mu) && limit_is(seq, seq.scalar_limit(), *r)
        }
        (Family::Intermediate, OrbitParam::Character { lambda }) => {
            limit_is(seq, seq.scalar_limit(), 0.0)
                && eventually(seq, |m| weights::interlaces_down(lambda, m).unwrap_or(false))
        }
        (Family::Character, OrbitParam::Character { lambda }) => eventually(seq, |l| l == lambda),
        // x is constant on orbits and continuous, and |u| is constant on
        // intermediate orbits: these cannot approach the target.
        _ => false,
    })
}

/// All targets with weight entries in `[−bound, bound]` that are limits of
/// `seq`. Generic and intermediate targets take their scalar from the
/// detected limit; character targets are listed in ascending lexicographic
/// order.
pub fn enumerate_limit_orbits(seq: &SequenceDescriptor, bound: u64) -> Vec<OrbitParam> {
    let n = seq.n();
    let b = bound.min(i64::MAX as u64) as i64;
    let in_box = |w: &[i64]| w.iter().all(|v| v.abs() <= b);
    let last = seq.weights().last().expect("K > 0").clone();
    let mut out = Vec::new();
    let mut push_if = |t: OrbitParam| {
        if is_limit_orbit(seq, &t).unwrap_or(false) {
            out.push(t);
        }
    };
    match seq.family() {
        Family::Generic => {
            if let Some(a) = seq.scalar_limit().value() {
                if a != 0.0 && in_box(last.entries()) {
                    push_if(OrbitParam::Generic { lambda: last.clone(), alpha: a });
                }
            }
            let (idx, head) = match tail_alpha_sign(seq) {
                Some(1) => (n - 1, &last.entries()[..n - 1]),
                Some(-1) => (0, &last.entries()[1..]),
                _ => (0, &[][..]),
            };
            if tail_alpha_sign(seq).is_some() && in_box(head) {
                if let Some(l) = seq.product_limit(idx, 1.0, 0.0).value() {
                    if l < 0.0 {
                        if let Ok(mu) = DominantWeight::new(head.to_vec()) {
                            push_if(OrbitParam::Intermediate { mu, r: (-2.0 * l).sqrt() });
                        }
                    }
                }
            }
        }
        Family::Intermediate => {
            if let Some(r) = seq.scalar_limit().value() {
                if r > 0.0 && in_box(last.entries()) {
                    push_if(OrbitParam::Intermediate { mu: last.clone(), r });
                }
            }
        }
        Family::Character => {}
    }
    for lambda in weights::dominant_weights_in_box(n, -b, b) {
        push_if(OrbitParam::Character { lambda });
    }
    out
}

/// True iff the orbit-side and dual-side verdicts agree on every target.
pub fn homeomorphism_check(seq: &SequenceDescriptor, targets: &[OrbitParam]) -> bool {
    homeomorphism_check_with(seq, targets, rep_side_limit)
}

/// [`homeomorphism_check`] against a caller-supplied dual-side evaluator.
pub fn homeomorphism_check_with<F>(seq: &SequenceDescriptor, targets: &[OrbitParam], rep_side: F) -> bool
where
    F: Fn(&SequenceDescriptor, &OrbitParam) -> bool,
{
    targets.iter().all(|t| match is_limit_orbit(seq, t) {
        Ok(v) => v == rep_side(seq, t),
        Err(_) => false,
    })
}

/// `−α_k(n + 2μ_{n−1} − 2λ_n^k)`: the scalar by which the Heisenberg
/// sub-Laplacian acts on the lowest `U(n)`-type of the `k`-th representation,
/// with `μ_{n−1} = λ_{n−1}^k` (taken as 0 when `n = 1`). `k` is 1-based.
pub fn spectral_invariant_sublaplacian(seq: &SequenceDescriptor, k: usize) -> Result<f64, TopologyError> {
    let SampleParam::Generic { lambda, alpha } = seq.sample(k)? else {
        return Err(TopologyError::WrongBranch("needs a generic sequence".into()));
    };
    if alpha <= 0.0 || seq.position() != Position::Last {
        return Err(TopologyError::WrongBranch("needs alpha_k > 0 and the varying entry last".into()));
    }
    let l = lambda.entries();
    let n = l.len();
    let mu_last = if n >= 2 { l[n - 2] as f64 } else { 0.0 };
    Ok(-alpha * (n as f64 + 2.0 * mu_last - 2.0 * l[n - 1] as f64))
}

/// `α_k`, read off `dπ(T) = iα_k` on the centre; 0 for the families on which
/// the centre acts trivially. `k` is 1-based.
pub fn center_invariant(seq: &SequenceDescriptor, k: usize) -> Result<f64, TopologyError> {
    Ok(match seq.sample(k)? {
        SampleParam::Generic { alpha, .. } => alpha,
        _ => 0.0,
    })
}
