//! Sweep the duality theorem over all compositions up to a weight and print a JSON summary.
//!
//! cargo run --release --example theorem1_sweep -- 6 8 4

use std::time::Instant;

use qharmonic::verify::{aggregate, sweep, IdentityId, SweepBounds};

fn main() {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer"))
        .collect();
    let bounds = SweepBounds {
        max_weight: *args.first().unwrap_or(&5) as u32,
        max_n: *args.get(1).unwrap_or(&6),
        threads: args.get(2).copied(),
        ..SweepBounds::default()
    };
    let start = Instant::now();
    let reports = sweep(IdentityId::Theorem1, &bounds).expect("sweep");
    let elapsed = start.elapsed();

    let summary = serde_json::json!({
        "id": "THEOREM1",
        "max_weight": bounds.max_weight,
        "max_n": bounds.max_n,
        "reports": reports.len(),
        "verdict": aggregate(&reports),
        "seconds": elapsed.as_secs_f64(),
    });
    println!("{}", serde_json::to_string_pretty(&summary).unwrap());
    if let Some(last) = reports.last() {
        println!("{}", serde_json::to_string(last).unwrap());
    }
}
