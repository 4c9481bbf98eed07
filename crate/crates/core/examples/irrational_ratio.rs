//! `nu(x) = sqrt2, nu(y) = 1`: the positive path never ends, and a monomial
//! of nonnegative value shows up in one of its rings.
//!
//! $ cargo run --example irrational_ratio

use cuspval::valring::UnionSearch;
use cuspval::{membership_union, positive_path, CfStream, Monomial, MonomialValuation};

fn main() -> cuspval::Result<()> {
    let nu = MonomialValuation::stream(CfStream::sqrt2())?;
    let path = positive_path(&nu, 12)?;
    for v in &path.vertices {
        println!("{v}");
    }
    println!("{:?}", path.status);

    for m in [
        Monomial::new(1, -1),
        Monomial::new(-2, 3),
        Monomial::new(5, -7),
        Monomial::new(-1, 1),
    ] {
        match membership_union(m, &nu, 64)? {
            UnionSearch::Found { index, vertex } => println!("{m} lies in {vertex} (vertex {index})"),
            UnionSearch::NotFoundWithinBound { searched } => println!("{m} not in the first {searched} rings"),
        }
    }
    Ok(())
}
