//! Classify λ windows across indices and cross-check each verdict with the
//! independent Sturm-sequence root count.
//!
//! Run with: cargo run --example nodeless_classification

use parajac::exactmath::rational::to_string;
use parajac::parajacobi::{is_nodeless, nodeless_window};
use parajac::verify::index_sweep;

fn main() {
    for ix in index_sweep(3) {
        let (n, big_n, big_m) = (ix.n, ix.big_n, ix.big_m);
        let window = nodeless_window(n, big_n, big_m).expect("valid index");
        println!(
            "n={n} N={big_n} M={big_m}: case {}, lambda_n = {}",
            serde_json::to_value(window.case)
                .expect("serializable")
                .as_str()
                .expect("string tag"),
            to_string(&window.lambda_n)
        );
        for interval in &window.intervals {
            let lam = interval.representative();
            let oracle = is_nodeless(n, big_n, big_m, &lam).expect("non-boundary lambda");
            println!(
                "  lambda = {:>8}: window says nodeless, Sturm count agrees: {oracle}",
                to_string(&lam)
            );
            assert!(oracle, "oracle must agree inside the window");
        }
    }
}
