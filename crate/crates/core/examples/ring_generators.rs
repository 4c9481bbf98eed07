//! Generators of the valuation ring of `nu(x) = a, nu(y) = b` and
//! membership of a few rational functions.
//!
//! $ cargo run --example ring_generators

use cuspval::{membership_structural, parse_rational_function, ring_generators};

fn main() -> cuspval::Result<()> {
    let pres = ring_generators(24, 7)?;
    println!("u = {}, v = {}, {}*24 - {}*7 = 1", pres.u, pres.v, pres.p, pres.q);
    println!("v^24 u^17 = {}", pres.v.pow(24) * pres.u.pow(pres.q));
    println!("v^7 u^5   = {}", pres.v.pow(7) * pres.u.pow(pres.p));

    let pres = ring_generators(3, 2)?;
    for text in ["x/y", "y/x", "y^3/x^2", "(x^2 - y^3)/(x*y)", "(x + y^2)/(x - y)"] {
        let r = parse_rational_function(text)?;
        let m = membership_structural(&r, &pres)?;
        println!("{text:>20}: member {} (power of v: {})", m.member, m.gap);
    }
    Ok(())
}
