//! Emit the potential curves for λ ∈ {1/2, 1, 3/2} plus the unextended
//! partner as CSV files, mirroring `parajac plot-data`.
//!
//! Run with: cargo run --example plot_data [output-dir]

use std::fmt::Write as _;
use std::path::PathBuf;

use parajac::exactmath::rational::{int, rat, to_string};
use parajac::extension::extended_potential_log_form;
use parajac::numverify::{sample_potential, GridSpec};
use parajac::tdpt::{tdpt_potential_z, TdptParams};

fn main() {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(std::env::temp_dir);
    let grid = GridSpec { interior: 255 };

    let mut files = Vec::new();
    for lam in [rat(1, 2), int(1), rat(3, 2)] {
        let v = extended_potential_log_form(2, 2, 2, &lam).expect("lambda in window");
        files.push((
            format!("extended_lambda{}.csv", to_string(&lam).replace('/', "_")),
            sample_potential(&v, grid),
        ));
    }
    let partner = tdpt_potential_z(&TdptParams::from_ints(2, 2));
    files.push(("partner.csv".to_string(), sample_potential(&partner, grid)));

    for (name, samples) in files {
        let mut csv = String::from("# x,V\n");
        for (x, v) in samples {
            let _ = writeln!(csv, "{x},{v}");
        }
        let path = dir.join(name);
        std::fs::write(&path, csv).expect("writable output directory");
        println!("wrote {}", path.display());
    }
}
