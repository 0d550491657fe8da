//! Closed-form unit versus golden-section search over random systems.

use carlos_scales::oracle::oracle_check;

fn main() {
    let count = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(5000);
    let s = oracle_check(count, 42, 1e-12);
    println!("{} random systems", s.systems);
    println!(
        "max |closed form - numeric|  {:.3e} octaves",
        s.max_discrepancy
    );
    println!(
        "max |sum k * residual|       {:.3e} octaves",
        s.max_stationarity
    );
    println!("bracket failures             {}", s.failures);
}
