//! The simplest para-Jacobi family, (n, N, M) = (2, 2, 2):
//! p(z;λ) = z² + 2(1-λ)z + 1, nodeless exactly for 0 < λ < 2.
//!
//! Run with: cargo run --example worked_example

use parajac::exactmath::rational::{int, rat};
use parajac::parajacobi::{
    boundary_values, lambda_threshold, nodeless_window, para_jacobi,
};

fn main() {
    for lam in [rat(1, 2), int(1), rat(3, 2)] {
        let p = para_jacobi(2, 2, 2, &lam).expect("valid index");
        println!("p_2^(-2,-2)(z; {lam}) = {p}");
    }

    let thr = lambda_threshold(2, 2, 2).expect("valid index");
    println!("threshold lambda_2 = {thr}");

    let window = nodeless_window(2, 2, 2).expect("valid index");
    println!(
        "nodeless window: {}",
        serde_json::to_string(&window).expect("serializable")
    );

    // p(±1) never vanishes inside the window, so the extension is regular
    let lam = rat(1, 2);
    let (at_minus_one, at_plus_one) = boundary_values(2, 2, 2, &lam).expect("valid index");
    println!("p(-1; {lam}) = {at_minus_one}, p(1; {lam}) = {at_plus_one}");
}
