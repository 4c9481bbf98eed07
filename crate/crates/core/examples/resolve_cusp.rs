//! Blow up `x^b = y^a` until it is resolved and compare the blown-up charts
//! with the positive path.
//!
//! $ cargo run --example resolve_cusp -- 3 2

use cuspval::{cf_expand, check_theorem, exactnum::rational, resolve};

fn main() -> cuspval::Result<()> {
    let args: Vec<i64> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let (a, b) = match args[..] {
        [a, b] => (a, b),
        _ => (3, 2),
    };
    let trace = resolve(a, b)?;
    for (i, step) in trace.steps.iter().enumerate() {
        println!("blow-up {}: {} [{}]", i + 1, step.chart, step.classification);
        for (c, k) in &step.children {
            println!("    {c} [{k}]");
        }
    }
    let cf = cf_expand(&rational(a, b));
    println!(
        "{} blow-ups, digit sum of {cf} is {}",
        trace.blow_up_count(),
        cf.digit_sum()
    );
    println!("charts equal positive path: {}", check_theorem(a, b)?.equal);
    Ok(())
}
