//! Convergence in the unitary dual, phrased in representation terms:
//! central characters, restriction to `U(n−1)`, Pieri constituents of
//! `τ_λ ⊗ Sym`, and the scaling `|α_k|·N_k` of the Fock degree `N_k`.
//!
//! Written separately from the orbit-side decision so the two can be
//! checked against each other.

use crate::coadjoint::OrbitParam;
use crate::weights::{interlacing_below, DominantWeight};

use super::descriptor::{Family, Limit, SampleParam, SequenceDescriptor};

/// Samples `k` of the tail window.
fn tail(seq: &SequenceDescriptor) -> impl Iterator<Item = SampleParam<'_>> {
    seq.tail_window().map(move |k| seq.sample(k).expect("window is in range"))
}

fn close(seq: &SequenceDescriptor, l: Limit, v: f64) -> bool {
    l.value().is_some_and(|x| (x - v).abs() <= seq.limit_tol(&l, v))
}

/// `ρ` is a constituent of `τ_λ ⊗ Sym^m ℂⁿ` for `m = |ρ| − |λ|`:
/// `ρ/λ` is a horizontal strip.
fn in_sym_tensor(lambda: &[i64], rho: &[i64]) -> bool {
    let n = rho.len();
    (0..n).all(|i| rho[i] >= lambda[i] && (i + 1 == n || lambda[i] >= rho[i + 1]))
}

/// `ρ` is a constituent of `τ_λ ⊗ Sym^m (ℂⁿ)*`, `m = |λ| − |ρ|`.
fn in_dual_sym_tensor(lambda: &[i64], rho: &[i64]) -> bool {
    in_sym_tensor(rho, lambda)
}

/// The dual-side verdict: does the sequence of irreducible representations
/// parametrized by `seq` converge to the one parametrized by `target`?
pub fn rep_side_limit(seq: &SequenceDescriptor, target: &OrbitParam) -> bool {
    if target.validate().is_err() || target.rank() != seq.n() {
        return false;
    }
    let n = seq.n();
    match seq.family() {
        Family::Generic => {
            // dπ(T) = iα_k must converge to the target's central character
            let centre = seq.scalar_limit();
            let mut alphas = tail(seq).map(|s| match s {
                SampleParam::Generic { alpha, .. } => alpha,
                _ => unreachable!(),
            });
            let positive = alphas.all(|a| a > 0.0);
            let negative = tail(seq).all(|s| matches!(s, SampleParam::Generic { alpha, .. } if alpha < 0.0));
            let lambdas = || {
                tail(seq).map(|s| match s {
                    SampleParam::Generic { lambda, .. } => lambda,
                    _ => unreachable!(),
                })
            };
            match target {
                OrbitParam::Generic { lambda, alpha } => {
                    close(seq, centre, *alpha) && lambdas().filter(|l| *l != lambda).count() == 0
                }
                OrbitParam::Intermediate { mu, r } => {
                    // The lowest U(n)-type restricts to the U(n−1)-type μ and
                    // the Fock degree N_k = |μ_edge − λ_edge^k| scales as
                    // |α_k| N_k → r²/2.
                    if !close(seq, centre, 0.0) {
                        return false;
                    }
                    let m = mu.entries();
                    let (edge, restriction_ok, mu_edge) = if positive {
                        let ok = lambdas().all(|l| l.entries().iter().zip(m).all(|(a, b)| a == b));
                        (n - 1, ok, m.last().copied().unwrap_or(0))
                    } else if negative {
                        let ok = lambdas().all(|l| l.entries()[1..] == *m);
                        (0, ok, m.first().copied().unwrap_or(0))
                    } else {
                        return false;
                    };
                    restriction_ok && close(seq, seq.product_limit(edge, -1.0, mu_edge as f64), r * r / 2.0)
                }
                OrbitParam::Character { lambda: rho } => {
                    if !close(seq, centre, 0.0) {
                        return false;
                    }
                    let p = rho.entries();
                    if positive {
                        lambdas().all(|l| in_sym_tensor(l.entries(), p))
                            && close(seq, seq.product_limit(n - 1, -1.0, p[n - 1] as f64), 0.0)
                    } else if negative {
                        lambdas().all(|l| in_dual_sym_tensor(l.entries(), p))
                            && close(seq, seq.product_limit(0, -1.0, p[0] as f64), 0.0)
                    } else {
                        false
                    }
                }
            }
        }
        Family::Intermediate => {
            let mus = || {
                tail(seq).map(|s| match s {
                    SampleParam::Intermediate { mu, .. } => mu,
                    _ => unreachable!(),
                })
            };
            match target {
                OrbitParam::Intermediate { mu, r } => {
                    mus().filter(|m| *m != mu).count() == 0 && close(seq, seq.scalar_limit(), *r)
                }
                OrbitParam::Character { lambda } => {
                    // τ_λ occurs in the representation induced from the
                    // U(n−1)-type μ iff μ occurs in τ_λ restricted to U(n−1).
                    if !close(seq, seq.scalar_limit(), 0.0) {
                        return false;
                    }
                    let branching: Vec<DominantWeight> = interlacing_below(lambda);
                    mus().all(|m| branching.contains(m))
                }
                // the centre acts trivially, so no central character α ≠ 0
                OrbitParam::Generic { .. } => false,
            }
        }
        Family::Character => match target {
            // characters form a discrete set
            OrbitParam::Character { lambda } => tail(seq).all(|s| matches!(s, SampleParam::Character { lambda: l } if l == lambda)),
            _ => false,
        },
    }
}
