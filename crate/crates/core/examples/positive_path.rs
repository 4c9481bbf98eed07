//! The positive path of `nu(x) = a, nu(y) = b` and its monotone branches,
//! whose lengths are read off the continued fraction of `a/b`.
//!
//! $ cargo run --example positive_path -- 24 7

use cuspval::{branch_decomposition, cf_correspondence_check, positive_path, MonomialValuation};

fn main() -> cuspval::Result<()> {
    let args: Vec<i64> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let (a, b) = match args[..] {
        [a, b] => (a, b),
        _ => (24, 7),
    };
    let nu = MonomialValuation::integral(a, b)?;
    let path = positive_path(&nu, 256)?;
    for (i, v) in path.vertices.iter().enumerate() {
        println!("{i:>3}  {v}");
    }
    for br in branch_decomposition(&path)? {
        println!("B({}, {}) length {}", br.s, br.t, br.length);
    }
    if num_integer::gcd(a, b) == 1 && a > b {
        let report = cf_correspondence_check(a, b)?;
        println!("digits {:?}, branch lengths {:?}", report.digits, report.branch_lengths);
    }
    Ok(())
}
