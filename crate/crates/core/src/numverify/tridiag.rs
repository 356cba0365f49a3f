//! Eigenvalues of symmetric tridiagonal matrices by Sturm-count bisection.
//!
//! One solver serves both numerical oracles: the Jacobi matrices behind
//! Gauss-Jacobi quadrature and the discretized Schrödinger operators. Only
//! the lowest few eigenvalues are ever needed, so bisection beats a full QR
//! sweep and needs no dependencies.

/// Symmetric tridiagonal matrix: `diag` of length n, `off` of length n-1.
#[derive(Clone, Debug)]
pub struct SymTridiag {
    pub diag: Vec<f64>,
    pub off: Vec<f64>,
}

impl SymTridiag {
    pub fn new(diag: Vec<f64>, off: Vec<f64>) -> Self {
        assert_eq!(off.len() + 1, diag.len(), "off must have length n-1");
        Self { diag, off }
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    /// Gershgorin bounds [lo, hi] containing every eigenvalue.
    fn bounds(&self) -> (f64, f64) {
        let n = self.dim();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let mut r = 0.0;
            if i > 0 {
                r += self.off[i - 1].abs();
            }
            if i + 1 < n {
                r += self.off[i].abs();
            }
            lo = lo.min(self.diag[i] - r);
            hi = hi.max(self.diag[i] + r);
        }
        (lo, hi)
    }

    /// Number of eigenvalues strictly below `x`, via the sign count of the
    /// LDLᵀ pivots of A - xI (Sturm sequence for tridiagonals).
    pub fn count_below(&self, x: f64) -> usize {
        let n = self.dim();
        let mut count = 0;
        let mut d = self.diag[0] - x;
        if d < 0.0 {
            count += 1;
        }
        for i in 1..n {
            let mut prev = d;
            if prev == 0.0 {
                // standard safeguard: nudge an exactly singular pivot
                prev = f64::EPSILON * (1.0 + self.off[i - 1].abs());
            }
            d = self.diag[i] - x - self.off[i - 1] * self.off[i - 1] / prev;
            if d < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// The k-th smallest eigenvalue (k = 0 is the smallest), bisected to
    /// machine-level relative accuracy.
    pub fn eigenvalue(&self, k: usize) -> f64 {
        assert!(k < self.dim());
        let (mut lo, mut hi) = self.bounds();
        // open the bracket slightly so count_below is decisive at both ends
        let pad = 1e-12 * (1.0 + lo.abs().max(hi.abs()));
        lo -= pad;
        hi += pad;
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.count_below(mid) <= k {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    /// The `k` smallest eigenvalues in ascending order.
    pub fn lowest_eigenvalues(&self, k: usize) -> Vec<f64> {
        (0..k.min(self.dim())).map(|i| self.eigenvalue(i)).collect()
    }
}
