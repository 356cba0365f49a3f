//! The state-adding spectrum and its eigenstates, each certified by an exact
//! Schrödinger residual.
//!
//! Run with: cargo run --example spectrum_and_eigenstates

use parajac::exactmath::rational::int;
use parajac::extension::{
    eigenstate, extended_potential_log_form, extended_spectrum, schrodinger_residual,
};

fn main() {
    let lam = int(1);
    let spectrum = extended_spectrum(2, 2, 2, 3).expect("valid index");
    let v = extended_potential_log_form(2, 2, 2, &lam).expect("lambda in window");

    println!("spectrum of the extended model (2,2,2):");
    for (k, energy) in &spectrum {
        let psi = eigenstate(*k, 2, 2, 2, &lam).expect("valid level");
        let residual = schrodinger_residual(&psi, energy, &v);
        assert!(residual.is_zero(), "residual must vanish identically");
        println!(
            "  level {k:>2}: E = {energy:>3}, psi rational part = {}, residual = 0",
            psi.rf
        );
    }

    // the added level is the image 1/psi_seed of the seed function
    let added = eigenstate(-3, 2, 2, 2, &lam).expect("valid level");
    println!(
        "\nadded state: (1-z)^{} (1+z)^{} * {}",
        added.exp_one_minus_z, added.exp_one_plus_z, added.rf
    );
}
