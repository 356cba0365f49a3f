//! Check the exact spectrum against a finite-difference Schrödinger solver
//! that knows nothing about the algebra: discretize -d²/dx² + V~ on (0, π/2)
//! and compare the lowest eigenvalues.
//!
//! Run with: cargo run --example fd_spectrum

use parajac::exactmath::rational::{int, to_f64};
use parajac::extension::{extended_potential_log_form, extended_spectrum};
use parajac::numverify::{eval_rf_f64, fd_spectrum_richardson, GridSpec};

fn main() {
    let lam = int(1);
    let v = extended_potential_log_form(2, 2, 2, &lam).expect("lambda in window");
    let f = |x: f64| eval_rf_f64(&v, (2.0 * x).cos());

    let grid = GridSpec { interior: 500 };
    let numeric = fd_spectrum_richardson(f, grid, 4);
    let exact: Vec<f64> = extended_spectrum(2, 2, 2, 2)
        .expect("valid index")
        .iter()
        .map(|(_, e)| to_f64(e))
        .collect();

    println!("level   exact        finite-difference   rel. error");
    for (e, n) in exact.iter().zip(&numeric) {
        let err = if *e == 0.0 { n.abs() } else { (n - e).abs() / e.abs() };
        println!("{e:>8.1}   {n:>16.6}   {err:>10.2e}");
        assert!(err < 0.01 || (n - e).abs() < 0.24, "FD must confirm the level");
    }
}
