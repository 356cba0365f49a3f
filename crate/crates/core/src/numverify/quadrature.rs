//! Gauss-Jacobi quadrature for ∫_{-1}^{1} (1-z)^a (1+z)^b f(z) dz.
//!
//! Nodes are the eigenvalues of the symmetric Jacobi matrix built from the
//! known three-term recurrence (Golub-Welsch); weights come from the
//! Christoffel function, w_i = 1 / Σ_k φ_k(z_i)² with φ_k orthonormal. This
//! route needs no eigenvectors, so the bisection solver in
//! [`super::tridiag`] suffices.

use super::tridiag::SymTridiag;

/// ln Γ by Lanczos approximation, accurate to ~1e-13 relative for x > 0.
fn ln_gamma(x: f64) -> f64 {
    // Lanczos, g = 7, n = 9
    const COEFFS: [f64; 9] = [
        0.999_999_999_999_809_9,
        676.5203681218851,
        -1259.1392167224028,
        771.323_428_777_653_1,
        -176.615_029_162_140_6,
        12.507343278686905,
        -0.13857109526572012,
        9.984_369_578_019_572e-6,
        1.5056327351493116e-7,
    ];
    if x < 0.5 {
        // reflection; not needed for our a, b > 0 but kept total
        let pi = std::f64::consts::PI;
        return (pi / (pi * x).sin()).ln() - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let mut acc = COEFFS[0];
    for (i, c) in COEFFS.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    let t = x + 7.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (x + 0.5) * t.ln() - t + acc.ln()
}

/// μ₀ = ∫ (1-z)^a (1+z)^b dz = 2^(a+b+1) B(a+1, b+1).
pub fn weight_mass(a: f64, b: f64) -> f64 {
    ((a + b + 1.0) * 2f64.ln() + ln_gamma(a + 1.0) + ln_gamma(b + 1.0)
        - ln_gamma(a + b + 2.0))
        .exp()
}

/// An n-point rule, exact (to rounding) for polynomials of degree ≤ 2n-1.
#[derive(Clone, Debug)]
pub struct GaussJacobiRule {
    pub a: f64,
    pub b: f64,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussJacobiRule {
    pub fn new(n: usize, a: f64, b: f64) -> Self {
        assert!(n >= 1, "need at least one node");
        assert!(a > -1.0 && b > -1.0, "weight must be integrable");
        let (alpha, beta) = recurrence_coefficients(n, a, b);
        let off: Vec<f64> = beta[1..n].iter().map(|&x| x.sqrt()).collect();
        let jacobi = SymTridiag::new(alpha.clone(), off);
        let nodes = jacobi.lowest_eigenvalues(n);
        let mu0 = weight_mass(a, b);
        let weights = nodes
            .iter()
            .map(|&z| {
                // Christoffel: 1 / Σ_{k=0}^{n-1} φ_k(z)², orthonormal φ.
                let mut prev = 0.0f64;
                let mut cur = 1.0 / mu0.sqrt();
                let mut sum = cur * cur;
                for k in 0..n - 1 {
                    let next =
                        ((z - alpha[k]) * cur - if k == 0 { 0.0 } else { beta[k].sqrt() * prev })
                            / beta[k + 1].sqrt();
                    prev = cur;
                    cur = next;
                    sum += cur * cur;
                }
                1.0 / sum
            })
            .collect();
        Self { a, b, nodes, weights }
    }

    /// Σ w_i f(z_i); `f` receives the bare node, the weight function is
    /// already inside the weights.
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&z, &w)| w * f(z))
            .sum()
    }
}

/// Monic Jacobi recurrence p_{k+1} = (z - α_k) p_k - β_k p_{k-1};
/// β_0 is set to μ₀ by the usual convention.
fn recurrence_coefficients(n: usize, a: f64, b: f64) -> (Vec<f64>, Vec<f64>) {
    let mut alpha = Vec::with_capacity(n);
    let mut beta = Vec::with_capacity(n);
    for k in 0..n {
        let kf = k as f64;
        let s = 2.0 * kf + a + b;
        let al = if k == 0 {
            (b - a) / (a + b + 2.0)
        } else {
            (b * b - a * a) / (s * (s + 2.0))
        };
        let be = if k == 0 {
            weight_mass(a, b)
        } else if k == 1 {
            4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + a + b).powi(2) * (3.0 + a + b))
        } else {
            4.0 * kf * (kf + a) * (kf + b) * (kf + a + b)
                / (s * s * (s + 1.0) * (s - 1.0))
        };
        alpha.push(al);
        beta.push(be);
    }
    (alpha, beta)
}
