//! Finite expansions of rationals, and sign decisions against an infinite
//! periodic expansion.
//!
//! $ cargo run --example continued_fractions

use cuspval::exactnum::{cf_convergents, rational};
use cuspval::{cf_expand, stream_compare, CfStream};

fn main() -> cuspval::Result<()> {
    for (p, q) in [(3, 2), (24, 7), (-7, 3), (355, 113)] {
        let cf = cf_expand(&rational(p, q));
        let conv: Vec<String> = cf_convergents(&cf, cf.len())?.iter().map(|c| c.to_string()).collect();
        println!("{p}/{q} = {cf} = {}   convergents {}", cf.alternate(), conv.join(", "));
    }

    let sqrt2 = CfStream::sqrt2();
    for (p, q) in [(7, 5), (3, 2), (99, 70), (239, 169)] {
        let ord = stream_compare(&sqrt2, &rational(p, q), 256)?;
        println!("sqrt2 vs {p}/{q}: {ord:?}");
    }
    Ok(())
}
