//! Parse rational functions in `x, y` and evaluate a monomial valuation on
//! them. The value of a sum is the least value among its terms.
//!
//! $ cargo run --example parse_and_value -- "(x^2 - y^3)/(x*y)"

use cuspval::{parse_rational_function, CfStream, MonomialValuation};

fn main() -> cuspval::Result<()> {
    let inputs: Vec<String> = std::env::args().skip(1).collect();
    let inputs = if inputs.is_empty() {
        vec!["x^2 - y^3".into(), "(x^2 - y^3)/(x*y)".into(), "(x + y)^3 / y^2".into()]
    } else {
        inputs
    };
    let integral = MonomialValuation::integral(3, 2)?;
    let sqrt2 = MonomialValuation::stream(CfStream::sqrt2())?;
    for text in &inputs {
        let r = parse_rational_function(text)?;
        let v = integral.value_of_rational_function(&r)?;
        let w = sqrt2.value_of_rational_function(&r)?;
        println!(
            "{text}\n  reduced: {r}\n  nu(x)=3, nu(y)=2:     {v}\n  nu(x)=sqrt2, nu(y)=1: {w}, positive {}",
            sqrt2.is_positive(w)?
        );
    }
    Ok(())
}
