//! Integer combinatorics of U(n) highest weights.
//!
//! Everything here is exact: interlacing orders, Pieri expansions of
//! `τ_λ ⊗ Sym^m` and its dual, Gelfand-Tsetlin enumeration and the Weyl
//! dimension. [`schur_eval`] is the only floating point routine; it exists as a
//! character oracle for the Pieri sets.

use std::collections::BTreeSet;
use std::fmt;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum WeightError {
    #[error("entries are not nonincreasing: {0:?}")]
    NotDominant(Vec<i64>),
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("degenerate Vandermonde denominator (coinciding coordinates)")]
    DegenerateDenominator,
}

/// A nonincreasing integer tuple, i.e. a highest weight of U(n).
///
/// Rank zero is allowed; it shows up as the `μ` of the intermediate orbits of
/// `G_1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct DominantWeight(Vec<i64>);

impl DominantWeight {
    pub fn new(entries: Vec<i64>) -> Result<Self, WeightError> {
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(WeightError::NotDominant(entries));
        }
        Ok(Self(entries))
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(|&v| v as f64).collect()
    }
}

impl TryFrom<Vec<i64>> for DominantWeight {
    type Error = WeightError;
    fn try_from(v: Vec<i64>) -> Result<Self, Self::Error> {
        Self::new(v)
    }
}

impl From<DominantWeight> for Vec<i64> {
    fn from(w: DominantWeight) -> Self {
        w.0
    }
}

impl AsRef<[i64]> for DominantWeight {
    fn as_ref(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// A torus weight; no ordering constraint.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVector(pub Vec<i64>);

impl AsRef<[i64]> for WeightVector {
    fn as_ref(&self) -> &[i64] {
        &self.0
    }
}

/// Gelfand-Tsetlin pattern stored top row first: `rows[0]` is the highest
/// weight (length n), `rows[n-1]` has length 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GtPattern {
    rows: Vec<Vec<i64>>,
}

impl GtPattern {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self, WeightError> {
        let n = rows.len();
        for (k, row) in rows.iter().enumerate() {
            if row.len() != n - k {
                return Err(WeightError::RankMismatch { expected: n - k, got: row.len() });
            }
        }
        DominantWeight::new(rows.first().cloned().unwrap_or_default())?;
        for k in 1..n {
            let (upper, lower) = (&rows[k - 1], &rows[k]);
            for i in 0..lower.len() {
                if !(upper[i] >= lower[i] && lower[i] >= upper[i + 1]) {
                    return Err(WeightError::NotDominant(lower.clone()));
                }
            }
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// `weight_i = Σ(row of length i) − Σ(row of length i−1)`.
    pub fn weight(&self) -> WeightVector {
        let n = self.rows.len();
        let mut prev = 0;
        let mut w = Vec::with_capacity(n);
        for len in 1..=n {
            let s: i64 = self.rows[n - len].iter().sum();
            w.push(s - prev);
            prev = s;
        }
        WeightVector(w)
    }
}

/// `λ₁ ≥ μ₁ ≥ λ₂ ≥ … ≥ μ_{n−1} ≥ λ_n`.
pub fn interlaces_down(lambda: &DominantWeight, mu: &DominantWeight) -> Result<bool, WeightError> {
    let (l, m) = (lambda.entries(), mu.entries());
    if l.is_empty() || m.len() + 1 != l.len() {
        return Err(WeightError::RankMismatch { expected: l.len().saturating_sub(1), got: m.len() });
    }
    Ok(m.iter().enumerate().all(|(i, &mi)| l[i] >= mi && mi >= l[i + 1]))
}

/// `ν₁ ≥ μ₁ ≥ ν₂ ≥ μ₂ ≥ … ≥ ν_n ≥ μ_n`, evaluated literally, so torus weights
/// are accepted as well.
pub fn precsim<A: AsRef<[i64]>, B: AsRef<[i64]>>(mu: &A, nu: &B) -> Result<bool, WeightError> {
    let (m, v) = (mu.as_ref(), nu.as_ref());
    if m.len() != v.len() {
        return Err(WeightError::RankMismatch { expected: v.len(), got: m.len() });
    }
    let n = m.len();
    Ok((0..n).all(|i| v[i] >= m[i] && (i + 1 == n || m[i] >= v[i + 1])))
}

pub fn weight_sum<A: AsRef<[i64]>>(nu: &A) -> i64 {
    nu.as_ref().iter().sum()
}

/// Constituents of `τ_λ ⊗ τ_{[m]}`: all `λ'` with `λ ≾ λ'` and `|λ'| = |λ| + m`.
pub fn pieri_up(lambda: &DominantWeight, m: u64) -> BTreeSet<DominantWeight> {
    let l = lambda.entries();
    let n = l.len();
    let mut out = BTreeSet::new();
    if n == 0 {
        if m == 0 {
            out.insert(lambda.clone());
        }
        return out;
    }
    // λ'_1 ∈ [λ_1, λ_1 + m], λ'_i ∈ [λ_i, λ_{i-1}] for i ≥ 2.
    let mut cur = Vec::with_capacity(n);
    fn rec(l: &[i64], i: usize, left: i64, cur: &mut Vec<i64>, out: &mut BTreeSet<DominantWeight>) {
        let n = l.len();
        if i == n {
            if left == 0 {
                out.insert(DominantWeight(cur.clone()));
            }
            return;
        }
        let hi = if i == 0 { l[0] + left } else { l[i - 1].min(l[i] + left) };
        for v in l[i]..=hi {
            cur.push(v);
            rec(l, i + 1, left - (v - l[i]), cur, out);
            cur.pop();
        }
    }
    rec(l, 0, m as i64, &mut cur, &mut out);
    out
}

/// Constituents of `τ_λ ⊗ τ_{[m]}^*`: all `λ'` with `λ' ≾ λ` and `|λ'| = |λ| − m`.
pub fn pieri_down(lambda: &DominantWeight, m: u64) -> BTreeSet<DominantWeight> {
    let l = lambda.entries();
    let n = l.len();
    let mut out = BTreeSet::new();
    if n == 0 {
        if m == 0 {
            out.insert(lambda.clone());
        }
        return out;
    }
    // λ'_i ∈ [λ_{i+1}, λ_i] for i < n, λ'_n ∈ [λ_n − m, λ_n].
    let mut cur = Vec::with_capacity(n);
    fn rec(l: &[i64], i: usize, left: i64, cur: &mut Vec<i64>, out: &mut BTreeSet<DominantWeight>) {
        let n = l.len();
        if i == n {
            if left == 0 {
                out.insert(DominantWeight(cur.clone()));
            }
            return;
        }
        let lo = if i + 1 == n { l[i] - left } else { l[i + 1].max(l[i] - left) };
        for v in (lo..=l[i]).rev() {
            cur.push(v);
            rec(l, i + 1, left - (l[i] - v), cur, out);
            cur.pop();
        }
    }
    rec(l, 0, m as i64, &mut cur, &mut out);
    out
}

/// All `λ` of rank `μ.rank() + 1` with `interlaces_down(λ, μ)`, `λ₁ ≤ top` and
/// `λ_n ≥ bottom`. The unbounded set is never materialized.
pub fn interlacing_above(mu: &DominantWeight, bottom: i64, top: i64) -> Vec<DominantWeight> {
    let m = mu.entries();
    let n = m.len() + 1;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(m: &[i64], i: usize, bottom: i64, top: i64, cur: &mut Vec<i64>, out: &mut Vec<DominantWeight>) {
        let n = m.len() + 1;
        if i == n {
            out.push(DominantWeight(cur.clone()));
            return;
        }
        let hi = if i == 0 { top } else { m[i - 1] };
        let lo = if i == n - 1 { bottom } else { m[i] };
        for v in (lo..=hi).rev() {
            cur.push(v);
            rec(m, i + 1, bottom, top, cur, out);
            cur.pop();
        }
    }
    rec(m, 0, bottom, top, &mut cur, &mut out);
    out
}

/// All `μ` of rank `λ.rank() − 1` with `interlaces_down(λ, μ)` (the U(n−1)
/// branching support of `τ_λ`).
pub fn interlacing_below(lambda: &DominantWeight) -> Vec<DominantWeight> {
    let l = lambda.entries();
    if l.is_empty() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(l.len() - 1);
    fn rec(l: &[i64], i: usize, cur: &mut Vec<i64>, out: &mut Vec<DominantWeight>) {
        if i + 1 == l.len() {
            out.push(DominantWeight(cur.clone()));
            return;
        }
        for v in (l[i + 1]..=l[i]).rev() {
            cur.push(v);
            rec(l, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(l, 0, &mut cur, &mut out);
    out
}

/// Every dominant weight of rank `n` with entries in `[lo, hi]`, in
/// lexicographically increasing order.
pub fn dominant_weights_in_box(n: usize, lo: i64, hi: i64) -> Vec<DominantWeight> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(n: usize, lo: i64, hi: i64, cur: &mut Vec<i64>, out: &mut Vec<DominantWeight>) {
        if cur.len() == n {
            out.push(DominantWeight(cur.clone()));
            return;
        }
        let top = cur.last().copied().unwrap_or(hi);
        for v in lo..=top {
            cur.push(v);
            rec(n, lo, hi, cur, out);
            cur.pop();
        }
    }
    if lo <= hi {
        rec(n, lo, hi, &mut cur, &mut out);
    }
    out.sort();
    out
}

pub fn gt_patterns(lambda: &DominantWeight) -> Vec<GtPattern> {
    let mut out = Vec::new();
    let mut rows = vec![lambda.entries().to_vec()];
    fn rec(rows: &mut Vec<Vec<i64>>, out: &mut Vec<GtPattern>) {
        let last = rows.last().unwrap();
        if last.len() <= 1 {
            out.push(GtPattern { rows: rows.clone() });
            return;
        }
        let below = interlacing_below(&DominantWeight(last.clone()));
        for mu in below {
            rows.push(mu.0);
            rec(rows, out);
            rows.pop();
        }
    }
    if lambda.rank() == 0 {
        return vec![GtPattern { rows: Vec::new() }];
    }
    rec(&mut rows, &mut out);
    out
}

/// Weight multiset of `τ_λ`, one entry per Gelfand-Tsetlin pattern.
pub fn gt_weights(lambda: &DominantWeight) -> Vec<WeightVector> {
    gt_patterns(lambda).iter().map(GtPattern::weight).collect()
}

/// Weyl product formula `Π_{i<j} (λ_i − λ_j + j − i)/(j − i)`.
pub fn weyl_dim(lambda: &DominantWeight) -> u128 {
    let l = lambda.entries();
    let n = l.len();
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..n {
        for j in i + 1..n {
            num *= (l[i] - l[j] + (j - i) as i64) as u128;
            den *= (j - i) as u128;
            let g = gcd(num, den);
            num /= g;
            den /= g;
        }
    }
    num / den
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// For every weight `ν ≠ μ̃` of `τ_μ̃`: `ν ≾ μ̃` fails and the first `n−1`
/// entries of `ν` differ from those of `μ̃`.
pub fn verify_weight_order(mu_tilde: &DominantWeight) -> bool {
    let m = mu_tilde.entries();
    let n = m.len();
    let head = n.saturating_sub(1);
    gt_weights(mu_tilde).iter().filter(|nu| nu.0 != m).all(|nu| {
        !precsim(nu, mu_tilde).expect("equal ranks") && nu.0[..head] != m[..head]
    })
}

/// Schur polynomial on the torus. Falls back to the Gelfand-Tsetlin monomial
/// sum when the Vandermonde denominator is numerically degenerate.
pub fn schur_eval(lambda: &DominantWeight, x: &[Complex64]) -> Result<Complex64, WeightError> {
    match schur_bialternant(lambda, x) {
        Err(WeightError::DegenerateDenominator) => schur_gt_sum(lambda, x),
        other => other,
    }
}

/// `det(x_i^{λ_j + n − j}) / det(x_i^{n − j})`.
pub fn schur_bialternant(lambda: &DominantWeight, x: &[Complex64]) -> Result<Complex64, WeightError> {
    let l = lambda.entries();
    let n = l.len();
    if x.len() != n {
        return Err(WeightError::RankMismatch { expected: n, got: x.len() });
    }
    if n == 0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let pow = |z: Complex64, e: i64| z.powi(e as i32);
    let num = DMatrix::from_fn(n, n, |i, j| pow(x[i], l[j] + (n - 1 - j) as i64));
    let den = DMatrix::from_fn(n, n, |i, j| pow(x[i], (n - 1 - j) as i64));
    // The Vandermonde determinant is Π_{i<j}(x_i − x_j); test it directly.
    let mut min_gap = f64::INFINITY;
    for i in 0..n {
        for j in i + 1..n {
            min_gap = min_gap.min((x[i] - x[j]).norm());
        }
    }
    if min_gap < 1e-6 {
        return Err(WeightError::DegenerateDenominator);
    }
    Ok(num.determinant() / den.determinant())
}

/// `Σ_{ν ∈ gt_weights(λ)} x^ν`.
pub fn schur_gt_sum(lambda: &DominantWeight, x: &[Complex64]) -> Result<Complex64, WeightError> {
    let n = lambda.rank();
    if x.len() != n {
        return Err(WeightError::RankMismatch { expected: n, got: x.len() });
    }
    Ok(gt_weights(lambda)
        .iter()
        .map(|w| w.0.iter().zip(x).map(|(&e, &xi)| xi.powi(e as i32)).product::<Complex64>())
        .sum())
}

/// Complete homogeneous symmetric polynomial `h_m(x)`.
pub fn complete_homogeneous(m: u64, x: &[Complex64]) -> Complex64 {
    // h_m(x_1..x_k) = Σ_j x_k^j h_{m-j}(x_1..x_{k-1}), tabulated over degree.
    let m = m as usize;
    let mut h = vec![Complex64::new(0.0, 0.0); m + 1];
    h[0] = Complex64::new(1.0, 0.0);
    for &xi in x {
        for d in 1..=m {
            let prev = h[d - 1];
            h[d] += xi * prev;
        }
    }
    h[m]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> DominantWeight {
        DominantWeight::new(v.to_vec()).unwrap()
    }

    #[test]
    fn rejects_increasing_entries() {
        assert!(DominantWeight::new(vec![0, 1]).is_err());
        assert!(serde_json::from_str::<DominantWeight>("[0,1]").is_err());
        let ok: DominantWeight = serde_json::from_str("[3,1,0]").unwrap();
        assert_eq!(serde_json::to_string(&ok).unwrap(), "[3,1,0]");
    }

    #[test]
    fn interlacing_examples() {
        assert!(interlaces_down(&w(&[2, 0]), &w(&[1])).unwrap());
        assert!(!interlaces_down(&w(&[1, 0]), &w(&[2])).unwrap());
        assert!(interlaces_down(&w(&[3, 1, 1]), &w(&[2, 1])).unwrap());
        assert!(interlaces_down(&w(&[3, 1, 1]), &w(&[2])).is_err());
    }

    #[test]
    fn precsim_examples() {
        assert!(precsim(&w(&[0, 0]), &w(&[1, 0])).unwrap());
        assert!(precsim(&w(&[3, 1, -2]), &w(&[3, 1, -2])).unwrap());
        assert!(!precsim(&w(&[2, 0]), &w(&[1, 1])).unwrap());
        assert!(precsim(&w(&[1]), &w(&[1, 0])).is_err());
    }

    #[test]
    fn weight_sums() {
        assert_eq!(weight_sum(&w(&[0, 0, 0])), 0);
        assert_eq!(weight_sum(&w(&[2, 0])), 2);
        assert_eq!(weight_sum(&w(&[3, 1, -1])), 3);
    }

    #[test]
    fn pieri_examples() {
        let up: Vec<_> = pieri_up(&w(&[1, 0]), 2).into_iter().collect();
        assert_eq!(up, vec![w(&[2, 1]), w(&[3, 0])]);
        assert_eq!(pieri_up(&w(&[0, 0]), 1).into_iter().collect::<Vec<_>>(), vec![w(&[1, 0])]);
        assert_eq!(pieri_up(&w(&[4, 2, -1]), 0).into_iter().collect::<Vec<_>>(), vec![w(&[4, 2, -1])]);

        // dim 4 · dim 3 = 2 + 4 + 6
        let down: Vec<_> = pieri_down(&w(&[3, 0]), 2).into_iter().collect();
        assert_eq!(down, vec![w(&[1, 0]), w(&[2, -1]), w(&[3, -2])]);
        assert_eq!(pieri_down(&w(&[0, 0]), 1).into_iter().collect::<Vec<_>>(), vec![w(&[0, -1])]);
        assert_eq!(pieri_down(&w(&[4, 2, -1]), 0).into_iter().collect::<Vec<_>>(), vec![w(&[4, 2, -1])]);
    }

    #[test]
    fn gt_examples() {
        let mut ws = gt_weights(&w(&[1, 0]));
        ws.sort();
        assert_eq!(ws, vec![WeightVector(vec![0, 1]), WeightVector(vec![1, 0])]);
        assert_eq!(gt_weights(&w(&[0, 0, 0])), vec![WeightVector(vec![0, 0, 0])]);
        assert_eq!(gt_weights(&w(&[1, 1])), vec![WeightVector(vec![1, 1])]);
        assert_eq!(gt_weights(&w(&[5])), vec![WeightVector(vec![5])]);
    }

    #[test]
    fn gt_pattern_validation() {
        assert!(GtPattern::new(vec![vec![2, 0], vec![1]]).is_ok());
        assert!(GtPattern::new(vec![vec![2, 0], vec![3]]).is_err());
        assert!(GtPattern::new(vec![vec![2, 0], vec![1, 0]]).is_err());
    }

    #[test]
    fn weyl_dim_examples() {
        assert_eq!(weyl_dim(&w(&[0, 0])), 1);
        assert_eq!(weyl_dim(&w(&[1, 0])), 2);
        assert_eq!(weyl_dim(&w(&[2, 0])), 3);
        // adjoint of U(3)
        assert_eq!(weyl_dim(&w(&[1, 0, -1])), 8);
    }

    #[test]
    fn weight_order_examples() {
        assert!(verify_weight_order(&w(&[1, 0])));
        assert!(verify_weight_order(&w(&[0, 0])));
        assert!(verify_weight_order(&w(&[1, 1, 0])));
    }

    #[test]
    fn schur_examples() {
        let a = Complex64::from_polar(1.0, 0.3);
        let b = Complex64::from_polar(1.0, 2.1);
        let one = schur_eval(&w(&[0, 0]), &[a, b]).unwrap();
        assert!((one - 1.0).norm() < 1e-14);
        assert!((schur_eval(&w(&[1, 0]), &[a, b]).unwrap() - (a + b)).norm() < 1e-14);
        assert!((schur_eval(&w(&[1, 1]), &[a, b]).unwrap() - a * b).norm() < 1e-14);
    }

    #[test]
    fn schur_falls_back_on_coinciding_coordinates() {
        let a = Complex64::from_polar(1.0, 0.7);
        assert_eq!(schur_bialternant(&w(&[2, 0]), &[a, a]), Err(WeightError::DegenerateDenominator));
        // s_(2,0)(a, a) = a² + a·a + a² = 3a².
        let v = schur_eval(&w(&[2, 0]), &[a, a]).unwrap();
        assert!((v - 3.0 * a * a).norm() < 1e-14);
    }

    #[test]
    fn complete_homogeneous_small() {
        let a = Complex64::new(0.5, 0.25);
        let b = Complex64::new(-1.0, 0.5);
        let h2 = a * a + a * b + b * b;
        assert!((complete_homogeneous(2, &[a, b]) - h2).norm() < 1e-15);
        assert_eq!(complete_homogeneous(0, &[]), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn interlacing_enumerations() {
        let above = interlacing_above(&w(&[1]), -1, 2);
        assert_eq!(above.len(), 2 * 3);
        assert!(above.iter().all(|l| interlaces_down(l, &w(&[1])).unwrap()));
        let below = interlacing_below(&w(&[2, 0, -1]));
        assert_eq!(below.len(), 3 * 2);
        assert_eq!(dominant_weights_in_box(2, 0, 1), vec![w(&[0, 0]), w(&[1, 0]), w(&[1, 1])]);
    }
}
