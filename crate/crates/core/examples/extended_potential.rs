//! Build the rational extension of the TDPT potential along two independent
//! routes and confirm they agree as canonical rational functions.
//!
//! Run with: cargo run --example extended_potential

use parajac::exactmath::rational::{int, rat};
use parajac::extension::{extended_potential_explicit, extended_potential_log_form};
use parajac::tdpt::{tdpt_potential_z, TdptParams};

fn main() {
    let params = TdptParams::from_ints(2, 2);
    println!("initial potential V(z; 2, 2) = {}", tdpt_potential_z(&params));

    for lam in [rat(1, 2), int(1), rat(3, 2)] {
        let via_log = extended_potential_log_form(2, 2, 2, &lam).expect("lambda in window");
        let via_terms = extended_potential_explicit(2, 2, 2, &lam).expect("lambda in window");
        assert_eq!(via_log, via_terms, "routes must agree exactly");
        println!("\nlambda = {lam}: both routes give\n  V~ = {via_log}");
    }

    // a higher index for good measure
    let lam = int(-1);
    let v = extended_potential_log_form(4, 3, 3, &lam).expect("lambda in window");
    assert_eq!(
        v,
        extended_potential_explicit(4, 3, 3, &lam).expect("lambda in window")
    );
    println!("\n(4,3,3) at lambda = -1 agrees across routes as well");
}
