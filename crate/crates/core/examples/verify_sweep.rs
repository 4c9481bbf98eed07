//! Check every coprime cusp with `a <= 60` in parallel.
//!
//! $ cargo run --release --example verify_sweep -- 60

use cuspval::run_verify;

fn main() {
    let max = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(60);
    let report = run_verify(max);
    print!("{}", report.to_text());
    println!(
        "off-origin intersections left unexamined: {}",
        report.off_origin_skipped()
    );
    std::process::exit(if report.all_passed() { 0 } else { 1 });
}
