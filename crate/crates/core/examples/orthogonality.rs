//! Numerically confirm that the Q family is orthogonal under
//! μ = (1-z)^(N-1) (1+z)^(M-1) / p², via Gauss-Jacobi quadrature.
//!
//! Run with: cargo run --example orthogonality

use parajac::exactmath::rational::rat;
use parajac::extension::ExtendedModel;
use parajac::numverify::{gram_matrix, max_normalized_off_diagonal};

fn main() {
    let model = ExtendedModel::new(2, 2, 2, rat(1, 2), 5).expect("lambda in window");
    let gram = gram_matrix(&model, 48);

    println!("levels: {:?}", model.spectrum.iter().map(|(k, _)| *k).collect::<Vec<_>>());
    println!("Gram matrix (should be diagonal):");
    for row in &gram {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>11.3e}")).collect();
        println!("  [{}]", cells.join(" "));
    }

    let defect = max_normalized_off_diagonal(&gram);
    println!("largest normalized off-diagonal entry: {defect:.3e}");
    assert!(defect < 1e-10, "family must be orthogonal to quadrature accuracy");
}
