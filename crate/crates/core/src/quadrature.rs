//! Gaussian quadrature rules from the Golub–Welsch eigenproblem.

use nalgebra::{DMatrix, SymmetricEigen};

/// Nodes and weights, nodes ascending.
#[derive(Clone, Debug, PartialEq)]
pub struct Rule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl Rule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn integrate(&self, mut f: impl FnMut(f64) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)).sum()
    }
}

/// Rule for the Jacobi matrix with diagonal `a` and off-diagonal `b`, for a
/// weight of total mass `mu0`.
fn golub_welsch(a: &[f64], b: &[f64], mu0: f64) -> Rule {
    let n = a.len();
    let j = DMatrix::from_fn(n, n, |i, k| {
        if i == k {
            a[i]
        } else if i + 1 == k {
            b[i]
        } else if k + 1 == i {
            b[k]
        } else {
            0.0
        }
    });
    let eig = SymmetricEigen::new(j);
    let mut pairs: Vec<(f64, f64)> =
        (0..n).map(|i| (eig.eigenvalues[i], mu0 * eig.eigenvectors[(0, i)].powi(2))).collect();
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0));
    Rule { nodes: pairs.iter().map(|p| p.0).collect(), weights: pairs.iter().map(|p| p.1).collect() }
}

/// `∫_0^∞ f(s) e^{−s} ds`, exact for polynomials of degree `< 2n`.
pub fn gauss_laguerre(n: usize) -> Rule {
    let a: Vec<f64> = (0..n).map(|k| 2.0 * k as f64 + 1.0).collect();
    let b: Vec<f64> = (1..n).map(|k| k as f64).collect();
    golub_welsch(&a, &b, 1.0)
}

/// `∫_{−1}^{1} f(x) dx`, exact for polynomials of degree `< 2n`.
pub fn gauss_legendre(n: usize) -> Rule {
    let a = vec![0.0; n];
    let b: Vec<f64> = (1..n).map(|k| k as f64 / (4.0 * (k * k) as f64 - 1.0).sqrt()).collect();
    golub_welsch(&a, &b, 2.0)
}

/// Gauss–Legendre on `[lo, hi]`.
pub fn gauss_legendre_on(n: usize, lo: f64, hi: f64) -> Rule {
    let base = gauss_legendre(n);
    let half = 0.5 * (hi - lo);
    let mid = 0.5 * (hi + lo);
    Rule {
        nodes: base.nodes.iter().map(|x| mid + half * x).collect(),
        weights: base.weights.iter().map(|w| half * w).collect(),
    }
}

/// `m` equispaced angles on `[0, 2π)`; the periodic trapezoid rule with
/// weights `1/m` averages over the circle.
pub fn circle_angles(m: usize) -> Vec<f64> {
    (0..m).map(|j| std::f64::consts::TAU * j as f64 / m as f64).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laguerre_moments() {
        let r = gauss_laguerre(12);
        // ∫ s^k e^{−s} = k!
        let mut fact = 1.0;
        for k in 0..24 {
            if k > 0 {
                fact *= k as f64;
            }
            let got = r.integrate(|s| s.powi(k));
            assert!((got - fact).abs() <= 1e-10 * fact, "k={k}: {got} vs {fact}");
        }
    }

    #[test]
    fn legendre_moments() {
        let r = gauss_legendre(8);
        for k in 0..16 {
            let exact = if k % 2 == 1 { 0.0 } else { 2.0 / (k as f64 + 1.0) };
            assert!((r.integrate(|x| x.powi(k)) - exact).abs() < 1e-13, "k={k}");
        }
        let r = gauss_legendre_on(20, 0.0, std::f64::consts::PI);
        assert!((r.integrate(f64::sin) - 2.0).abs() < 1e-13);
    }
}
