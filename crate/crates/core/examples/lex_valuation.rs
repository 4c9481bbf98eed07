//! A path that ends in `k[f, g/f^t]` for every `t` has no real valuation,
//! but the lexicographic one on `Z^2` makes every vertex positive.
//!
//! $ cargo run --example lex_valuation

use cuspval::valtree::{lex_valuation_from_tail, positive_path};
use cuspval::{Monomial, MonomialValuation};

fn main() -> cuspval::Result<()> {
    let nu: MonomialValuation = lex_valuation_from_tail(Monomial::Y, Monomial::X)?;
    println!("{:?}", nu.group());
    let path = positive_path(&nu, 8)?;
    for v in &path.vertices {
        println!("{v}");
    }
    Ok(())
}
