//! Floating-point oracles, deliberately independent of the exact layer.
//!
//! Two checks live here: Gauss-Jacobi quadrature of the Gram matrix of the
//! Q family against its claimed orthogonality, and a finite-difference
//! Schrödinger eigensolver against the claimed spectrum. Both start from the
//! same exact objects but take entirely numerical routes, so structural bugs
//! in the symbolic pipeline cannot cancel against themselves.

pub mod quadrature;
pub mod tridiag;

use crate::exactmath::rational::{from_f64, to_f64};
use crate::exactmath::{Polynomial, RationalFunction};
use crate::extension::ExtendedModel;

pub use quadrature::GaussJacobiRule;
pub use tridiag::SymTridiag;

/// Default tolerance on normalized off-diagonal Gram entries.
pub const DEFAULT_ORTHO_TOL: f64 = 1e-10;
/// Default relative tolerance on finite-difference eigenvalues.
pub const DEFAULT_FD_REL_TOL: f64 = 0.01;
/// Absolute floor paired with [`DEFAULT_FD_REL_TOL`], so the zero eigenvalue
/// of the extended spectrum is checkable at all. It is 1% of the smallest
/// nonzero level gap occurring in practice (|E| = 24).
pub const DEFAULT_FD_ABS_TOL: f64 = 0.24;
/// Default tolerance for the quadrature self-test on exact moments.
pub const DEFAULT_QUAD_TOL: f64 = 1e-12;

/// Evaluates an exact polynomial at an f64 point with one rounding at the
/// end: the point is lifted to its exact dyadic rational, the Horner sweep
/// runs over the rationals, and only the final value is rounded.
pub fn eval_poly_f64(p: &Polynomial, z: f64) -> f64 {
    let zq = from_f64(z).expect("finite node");
    to_f64(&p.eval(&zq))
}

/// Same one-rounding evaluation for a rational function. Panics on a pole,
/// which cannot happen at quadrature nodes of a nodeless denominator.
pub fn eval_rf_f64(f: &RationalFunction, z: f64) -> f64 {
    let zq = from_f64(z).expect("finite node");
    to_f64(&f.eval(&zq).expect("pole at sample point"))
}

/// Gram matrix G_{jk} = ∫ Q_j Q_k dμ of the model's Q family under its
/// orthogonality measure μ = (1-z)^(N-1) (1+z)^(M-1)/p² dz, by `order`-point
/// Gauss-Jacobi quadrature with the polynomial weight part absorbed in the
/// rule and the 1/p² factor evaluated exactly per node.
pub fn gram_matrix(model: &ExtendedModel, order: usize) -> Vec<Vec<f64>> {
    let a = (model.index.big_n - 1) as f64;
    let b = (model.index.big_m - 1) as f64;
    let rule = GaussJacobiRule::new(order, a, b);
    let p = model.seed.rf.num();

    let fam = &model.q_family;
    let m = fam.len();
    // per-node values of each Q and of 1/p², one exact evaluation each
    let mut qv = vec![vec![0.0f64; rule.nodes.len()]; m];
    let mut pinv2 = vec![0.0f64; rule.nodes.len()];
    for (i, &z) in rule.nodes.iter().enumerate() {
        let pz = eval_poly_f64(p, z);
        pinv2[i] = 1.0 / (pz * pz);
        for (j, q) in fam.iter().enumerate() {
            qv[j][i] = eval_poly_f64(&q.poly, z);
        }
    }

    let mut g = vec![vec![0.0f64; m]; m];
    for j in 0..m {
        for k in j..m {
            let s: f64 = rule
                .weights
                .iter()
                .enumerate()
                .map(|(i, &w)| w * qv[j][i] * qv[k][i] * pinv2[i])
                .sum();
            g[j][k] = s;
            g[k][j] = s;
        }
    }
    g
}

/// Largest |G_{jk}|/√(G_{jj} G_{kk}) over j ≠ k: the orthogonality defect.
pub fn max_normalized_off_diagonal(g: &[Vec<f64>]) -> f64 {
    let m = g.len();
    let mut worst = 0.0f64;
    for j in 0..m {
        for k in 0..m {
            if j != k {
                let r = g[j][k].abs() / (g[j][j] * g[k][k]).sqrt();
                worst = worst.max(r);
            }
        }
    }
    worst
}

/// Uniform Dirichlet grid on (0, π/2) with `interior` interior points.
#[derive(Clone, Copy, Debug)]
pub struct GridSpec {
    pub interior: usize,
}

impl GridSpec {
    pub fn step(&self) -> f64 {
        std::f64::consts::FRAC_PI_2 / (self.interior as f64 + 1.0)
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        let h = self.step();
        (1..=self.interior).map(move |i| i as f64 * h)
    }
}

/// Lowest `count` eigenvalues of -d²/dx² + V on (0, π/2) with Dirichlet
/// walls, by the standard three-point stencil on `grid`.
pub fn fd_spectrum(v: impl Fn(f64) -> f64, grid: GridSpec, count: usize) -> Vec<f64> {
    let h = grid.step();
    let inv_h2 = 1.0 / (h * h);
    let diag: Vec<f64> = grid.points().map(|x| 2.0 * inv_h2 + v(x)).collect();
    let off = vec![-inv_h2; grid.interior - 1];
    SymTridiag::new(diag, off).lowest_eigenvalues(count)
}

/// Richardson-extrapolated spectrum: the m-point and (2m+1)-point grids halve
/// the step, so (4E_fine - E_coarse)/3 cancels the O(h²) error.
pub fn fd_spectrum_richardson(
    v: impl Fn(f64) -> f64 + Copy,
    grid: GridSpec,
    count: usize,
) -> Vec<f64> {
    let coarse = fd_spectrum(v, grid, count);
    let fine = fd_spectrum(
        v,
        GridSpec {
            interior: 2 * grid.interior + 1,
        },
        count,
    );
    coarse
        .iter()
        .zip(&fine)
        .map(|(&c, &f)| (4.0 * f - c) / 3.0)
        .collect()
}

/// Sampled eigenvalues match the expected ones within rel/abs tolerance, in
/// order, with nothing extra in between: the discretization must not invent
/// levels below the highest expected one.
pub fn no_extra_states(computed: &[f64], expected: &[f64], rel: f64, abs: f64) -> bool {
    if computed.len() < expected.len() {
        return false;
    }
    for (c, e) in computed.iter().zip(expected) {
        if (c - e).abs() > abs.max(rel * e.abs()) {
            return false;
        }
    }
    // anything further up must clear the top expected level
    if let Some(top) = expected.last() {
        for c in &computed[expected.len()..] {
            if *c < top + abs {
                return false;
            }
        }
    }
    true
}

/// V(x) on the grid, via z = cos 2x. Returns (x, V(x)) pairs.
pub fn sample_potential(v_of_z: &RationalFunction, grid: GridSpec) -> Vec<(f64, f64)> {
    grid.points()
        .map(|x| {
            let z = (2.0 * x).cos();
            (x, eval_rf_f64(v_of_z, z))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::{int, rat};
    use crate::extension::{extended_spectrum, ExtendedModel};
    use crate::tdpt::{tdpt_potential_z, TdptParams};

    #[test]
    fn exact_eval_has_single_rounding() {
        // (1/3)z² at z = 0.1 (a non-dyadic target): exact path lifts 0.1 to
        // its dyadic double and rounds once at the end
        let p = Polynomial::new(vec![int(0), int(0), rat(1, 3)]);
        let z = 0.1f64;
        let exact = eval_poly_f64(&p, z);
        assert!((exact - z * z / 3.0).abs() < 1e-17);
    }

    #[test]
    fn infinite_well_spectrum() {
        // V = 0 on (0, π/2): exact eigenvalues 4k² for k = 1, 2, 3
        let got = fd_spectrum_richardson(|_| 0.0, GridSpec { interior: 200 }, 3);
        for (k, e) in got.iter().enumerate() {
            let exact = 4.0 * ((k + 1) as f64).powi(2);
            assert!(
                (e - exact).abs() < 1e-4 * exact,
                "level {k}: {e} vs {exact}"
            );
        }
    }

    #[test]
    fn tdpt_fd_spectrum() {
        // shifted TDPT levels E_ν = 4ν(ν+α+β+1) for α=β=2
        let params = TdptParams::from_ints(2, 2);
        let v = tdpt_potential_z(&params);
        let f = |x: f64| eval_rf_f64(&v, (2.0 * x).cos());
        let got = fd_spectrum_richardson(f, GridSpec { interior: 400 }, 3);
        for (k, e) in got.iter().enumerate() {
            let nu = k as f64;
            let exact = 4.0 * nu * (nu + 5.0);
            assert!(
                (e - exact).abs() < DEFAULT_FD_ABS_TOL.max(0.01 * exact.abs()),
                "level {k}: {e} vs {exact}"
            );
        }
    }

    #[test]
    fn gram_is_nearly_diagonal() {
        let model = ExtendedModel::new(2, 2, 2, int(1), 4).unwrap();
        let g = gram_matrix(&model, 64);
        let defect = max_normalized_off_diagonal(&g);
        assert!(defect < DEFAULT_ORTHO_TOL, "defect {defect}");
        for (j, row) in g.iter().enumerate() {
            assert!(row[j] > 0.0, "diagonal entry {j} not positive");
        }
    }

    #[test]
    fn extended_fd_matches_exact_spectrum() {
        let model = ExtendedModel::new(2, 2, 2, int(1), 2).unwrap();
        let f = |x: f64| eval_rf_f64(&model.potential, (2.0 * x).cos());
        let got = fd_spectrum_richardson(f, GridSpec { interior: 500 }, 4);
        let expected: Vec<f64> = extended_spectrum(2, 2, 2, 2)
            .unwrap()
            .iter()
            .map(|(_, e)| crate::exactmath::rational::to_f64(e))
            .collect();
        assert!(
            no_extra_states(&got, &expected, DEFAULT_FD_REL_TOL, DEFAULT_FD_ABS_TOL),
            "got {got:?}, expected {expected:?}"
        );
    }

    #[test]
    fn no_extra_states_rejects_impostors() {
        assert!(no_extra_states(&[1.0, 4.0], &[1.0, 4.0], 0.01, 0.1));
        assert!(!no_extra_states(&[1.0, 2.5, 4.0], &[1.0, 4.0], 0.01, 0.1));
        assert!(!no_extra_states(&[1.0], &[1.0, 4.0], 0.01, 0.1));
        assert!(!no_extra_states(&[1.2, 4.0], &[1.0, 4.0], 0.01, 0.1));
    }

    #[test]
    fn potential_sampling_shape() {
        let params = TdptParams::from_ints(2, 2);
        let v = tdpt_potential_z(&params);
        let samples = sample_potential(&v, GridSpec { interior: 9 });
        assert_eq!(samples.len(), 9);
        // symmetric potential: V(x) = V(π/2 - x) for α = β
        let n = samples.len();
        for i in 0..n / 2 {
            assert!((samples[i].1 - samples[n - 1 - i].1).abs() < 1e-9);
        }
    }
}
