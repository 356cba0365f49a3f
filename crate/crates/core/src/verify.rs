//! Batched verification suites with reproducible failure reports.
//!
//! The `verify` subcommand and the acceptance tests both run these. Every
//! failure carries the parameters needed to reproduce it from the CLI, so a
//! red run is immediately actionable.

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::exactmath::rational::{self, to_f64, Rational};
use crate::exactmath::{sturm_root_count, Polynomial};
use crate::extension::{
    eigenstate, eigenstate_wronskian, extended_potential_explicit, extended_potential_log_form,
    extended_spectrum, schrodinger_residual, ExtendedModel,
};
use crate::numverify::{
    self, fd_spectrum_richardson, gram_matrix, max_normalized_off_diagonal, no_extra_states,
    GaussJacobiRule, GridSpec,
};
use crate::parajacobi::{
    self, boundary_values, is_nodeless, lambda_prime, lambda_tilde, nodeless_window, para_jacobi,
    para_jacobi_double_sum, ParaJacobiIndex,
};
use crate::tdpt::{jacobi_ode_residual, TdptParams};

/// One failed check with enough context to rerun it by hand.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckFailure {
    pub check: String,
    pub params: String,
    pub detail: String,
}

/// Outcome of one suite run.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: String,
    pub checks_run: usize,
    pub failures: Vec<CheckFailure>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Recorder {
    report: VerifyReport,
}

impl Recorder {
    fn new(suite: &str) -> Self {
        Self {
            report: VerifyReport {
                suite: suite.to_string(),
                checks_run: 0,
                failures: Vec::new(),
            },
        }
    }

    fn check(&mut self, name: &str, params: String, ok: bool, detail: impl FnOnce() -> String) {
        self.report.checks_run += 1;
        if !ok {
            self.report.failures.push(CheckFailure {
                check: name.to_string(),
                params,
                detail: detail(),
            });
        }
    }
}

/// All valid para-Jacobi indices with 1 ≤ N, M ≤ max_nm.
pub fn index_sweep(max_nm: u32) -> Vec<ParaJacobiIndex> {
    let mut out = Vec::new();
    for big_n in 1..=max_nm {
        for big_m in 1..=max_nm {
            for n in big_n.max(big_m)..(big_n + big_m) {
                if let Ok(ix) = ParaJacobiIndex::new(n, big_n, big_m) {
                    out.push(ix);
                }
            }
        }
    }
    out
}

/// Interior λ samples of the nodeless window, three per interval.
fn window_lambdas(n: u32, big_n: u32, big_m: u32) -> Vec<Rational> {
    let window = nodeless_window(n, big_n, big_m).expect("valid index");
    window
        .intervals
        .iter()
        .flat_map(|iv| iv.interior_points())
        .collect()
}

/// The exact identity suite over all indices with N, M ≤ max_nm.
pub fn exact_suite(max_nm: u32) -> VerifyReport {
    let mut rec = Recorder::new("exact");
    for ix in index_sweep(max_nm) {
        let (n, bn, bm) = (ix.n, ix.big_n, ix.big_m);
        let lambdas = window_lambdas(n, bn, bm);
        let tag = |lam: &Rational| format!("n={n} N={bn} M={bm} lambda={}", rational::to_string(lam));

        for lam in &lambdas {
            let p = para_jacobi(n, bn, bm, lam).expect("valid index");

            // two independent construction routes
            let pd = para_jacobi_double_sum(n, bn, bm, lam).expect("valid index");
            rec.check("construction-routes-agree", tag(lam), p == pd, || {
                format!("theta-basis {p} vs double-sum {pd}")
            });

            rec.check(
                "monic-of-degree-n",
                tag(lam),
                p.degree() == Some(n as usize) && p.is_monic(),
                || format!("got {p}"),
            );

            // first derivative transport
            let dp = p.diff();
            let lp = lambda_prime(n, bn, bm, lam);
            let reduced = parajacobi::para_jacobi_relaxed(n - 1, bn - 1, bm - 1, &lp)
                .scale(&rational::int(n as i64));
            rec.check("derivative-identity", tag(lam), dp == reduced, || {
                format!("p' = {dp} vs n*p_(n-1) = {reduced}")
            });

            // reflection through λ̃
            let lt = lambda_tilde(n, bn, bm, lam).expect("valid index");
            let refl = para_jacobi(n, bm, bn, &lt).expect("swapped index valid");
            let lhs = p.reflect();
            let rhs = if n % 2 == 1 { -&refl } else { refl };
            rec.check("reflection-identity", tag(lam), lhs == rhs, || {
                format!("p(-z) = {lhs} vs (-1)^n p~ = {rhs}")
            });

            // boundary closed forms
            let (at_minus, at_plus) = boundary_values(n, bn, bm, lam).expect("valid index");
            let (em, ep) = (p.eval(&rational::int(-1)), p.eval(&rational::int(1)));
            rec.check(
                "boundary-closed-forms",
                tag(lam),
                at_minus == em && at_plus == ep,
                || format!("closed ({at_minus}, {at_plus}) vs eval ({em}, {ep})"),
            );

            // Jacobi differential equation at (α, β) = (-N, -M)
            let params = TdptParams::from_ints(-(bn as i64), -(bm as i64));
            let res = jacobi_ode_residual(&p, &rational::int(n as i64), &params);
            rec.check("jacobi-ode", tag(lam), res.is_zero(), || {
                format!("residual {res}")
            });

            // nodelessness inside the window
            let nodeless = is_nodeless(n, bn, bm, lam);
            rec.check(
                "nodeless-inside-window",
                tag(lam),
                nodeless == Ok(true),
                || format!("oracle said {nodeless:?}"),
            );
        }

        // just outside each finite window endpoint the polynomial must have
        // a node (Sturm count ≥ 1), unless the step lands back in the window
        let window = nodeless_window(n, bn, bm).expect("valid index");
        let eps = rational::rat(1, 1000);
        for endpoint in window.finite_endpoints() {
            for lam in [&endpoint + &eps, &endpoint - &eps] {
                if window.contains(&lam) {
                    continue;
                }
                let p = para_jacobi(n, bn, bm, &lam).expect("valid index");
                let count = sturm_root_count(&p, &rational::int(-1), &rational::int(1));
                rec.check(
                    "node-outside-window",
                    format!("n={n} N={bn} M={bm} lambda={}", rational::to_string(&lam)),
                    matches!(count, Ok(c) if c >= 1),
                    || format!("Sturm count {count:?}"),
                );
            }
        }

        // extension-level identities need N, M ≥ 2
        if bn < 2 || bm < 2 {
            continue;
        }
        for lam in &lambdas {
            let v_log = extended_potential_log_form(n, bn, bm, lam).expect("in window");
            let v_explicit = extended_potential_explicit(n, bn, bm, lam).expect("in window");
            rec.check("potential-routes-agree", tag(lam), v_log == v_explicit, || {
                format!("log-form {v_log} vs explicit {v_explicit}")
            });

            for k in [-(n as i64) - 1, 0, 1, 2, 3] {
                let ktag = format!("{} k={k}", tag(lam));
                let psi = eigenstate(k, n, bn, bm, lam).expect("valid level");
                let psi_w = eigenstate_wronskian(k, n, bn, bm, lam).expect("valid level");
                rec.check(
                    "eigenstate-routes-agree",
                    ktag.clone(),
                    psi.proportional_to(&psi_w),
                    || format!("Q-route {:?} vs Wronskian {:?}", psi.rf, psi_w.rf),
                );

                let e = extended_spectrum(n, bn, bm, 3)
                    .expect("valid")
                    .into_iter()
                    .find(|(kk, _)| *kk == k)
                    .map(|(_, e)| e)
                    .expect("level in spectrum");
                let res = schrodinger_residual(&psi, &e, &v_log);
                rec.check("schrodinger-residual", ktag, res.is_zero(), || {
                    format!("residual {res}")
                });
            }

            // the added level must sit strictly below the old ground state
            let spectrum = extended_spectrum(n, bn, bm, 0).expect("valid");
            rec.check(
                "added-level-below-ground",
                tag(lam),
                spectrum[0].1.is_negative(),
                || format!("added level energy {}", spectrum[0].1),
            );
        }
    }
    rec.report
}

/// Parameters of the numeric suite; the defaults match the crate-level
/// tolerances and the reference model family (2,2,2) at λ ∈ {1/2, 1, 3/2}.
#[derive(Clone, Debug)]
pub struct NumericConfig {
    pub n: u32,
    pub big_n: u32,
    pub big_m: u32,
    pub lambdas: Vec<Rational>,
    pub quad_order: usize,
    pub grid: GridSpec,
    pub fd_levels: usize,
    pub ortho_tol: f64,
    pub fd_rel_tol: f64,
    pub fd_abs_tol: f64,
    pub quad_tol: f64,
}

impl Default for NumericConfig {
    fn default() -> Self {
        Self {
            n: 2,
            big_n: 2,
            big_m: 2,
            lambdas: vec![rational::rat(1, 2), rational::int(1), rational::rat(3, 2)],
            quad_order: 64,
            grid: GridSpec { interior: 500 },
            fd_levels: 4,
            ortho_tol: numverify::DEFAULT_ORTHO_TOL,
            fd_rel_tol: numverify::DEFAULT_FD_REL_TOL,
            fd_abs_tol: numverify::DEFAULT_FD_ABS_TOL,
            quad_tol: numverify::DEFAULT_QUAD_TOL,
        }
    }
}

/// The floating-point oracle suite on the configured model family.
pub fn numeric_suite(config: &NumericConfig) -> VerifyReport {
    let mut rec = Recorder::new("numeric");

    // quadrature self-test: an n-point rule integrates z^m exactly
    for (a, b) in [(1u32, 1u32), (1, 2), (3, 2)] {
        let rule = GaussJacobiRule::new(config.quad_order.min(12), a as f64, b as f64);
        for m in 0..(2 * rule.nodes.len() as u32) {
            let got = rule.integrate(|z| z.powi(m as i32));
            let want = to_f64(&exact_weighted_moment(a, b, m));
            rec.check(
                "quadrature-moments",
                format!("a={a} b={b} m={m}"),
                (got - want).abs() <= config.quad_tol * (1.0 + want.abs()),
                || format!("rule {got} vs exact {want}"),
            );
        }
    }

    let (n, bn, bm) = (config.n, config.big_n, config.big_m);
    for lam in &config.lambdas {
        let tag = format!("n={n} N={bn} M={bm} lambda={}", rational::to_string(lam));
        let model = match ExtendedModel::new(n, bn, bm, lam.clone(), 6) {
            Ok(m) => m,
            Err(e) => {
                rec.check("model-construction", tag, false, || e.to_string());
                continue;
            }
        };

        // orthogonality of the Q family under μ
        let g = gram_matrix(&model, config.quad_order);
        let defect = max_normalized_off_diagonal(&g);
        rec.check(
            "gram-orthogonality",
            tag.clone(),
            defect <= config.ortho_tol,
            || format!("normalized off-diagonal defect {defect:e}"),
        );
        rec.check(
            "gram-positive-norms",
            tag.clone(),
            g.iter().enumerate().all(|(j, row)| row[j] > 0.0),
            || "non-positive diagonal entry".to_string(),
        );

        // finite-difference spectrum against the exact one
        let f = |x: f64| numverify::eval_rf_f64(&model.potential, (2.0 * x).cos());
        let got = fd_spectrum_richardson(f, config.grid, config.fd_levels);
        let expected: Vec<f64> = extended_spectrum(n, bn, bm, config.fd_levels as u32 - 2)
            .expect("valid")
            .iter()
            .map(|(_, e)| to_f64(e))
            .collect();
        rec.check(
            "fd-spectrum",
            tag.clone(),
            no_extra_states(&got, &expected, config.fd_rel_tol, config.fd_abs_tol),
            || format!("fd {got:?} vs exact {expected:?}"),
        );
    }

    rec.report
}

/// ∫_{-1}^{1} (1-z)^a (1+z)^b z^m dz over the rationals.
fn exact_weighted_moment(a: u32, b: u32, m: u32) -> Rational {
    let w = &Polynomial::one_plus_signed_z_pow(-1, a as usize)
        * &Polynomial::one_plus_signed_z_pow(1, b as usize);
    let p = &w * &Polynomial::monomial(rational::int(1), m as usize);
    let mut acc = rational::int(0);
    for j in (0..=p.degree().expect("nonzero")).step_by(2) {
        acc += p.coeff(j) * rational::rat(2, j as i64 + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_suite_small_sweep_passes() {
        let report = exact_suite(3);
        assert!(
            report.passed(),
            "failures: {:#?}",
            report.failures
        );
        assert!(report.checks_run > 100, "only {} checks", report.checks_run);
    }

    #[test]
    fn numeric_suite_passes() {
        let config = NumericConfig {
            grid: GridSpec { interior: 300 },
            ..NumericConfig::default()
        };
        let report = numeric_suite(&config);
        assert!(report.passed(), "failures: {:#?}", report.failures);
    }

    #[test]
    fn report_serializes() {
        let report = VerifyReport {
            suite: "exact".into(),
            checks_run: 3,
            failures: vec![CheckFailure {
                check: "demo".into(),
                params: "n=2 N=2 M=2".into(),
                detail: "example".into(),
            }],
        };
        let json = serde_json::to_string(&report).unwrap();
        let back: VerifyReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back.checks_run, 3);
        assert!(!back.passed());
    }
}
