//! Exact tan(n·x) for rational tan(x), by the binomial-sum formula and the
//! two oracles, plus the distance from f64 trigonometry.
//!
//!     cargo run --example tan_multiple_angle -- 3/7 12

use tanpoly::multiangle::{tan_addition_oracle, tan_beeler, tan_float_check, tan_gaussian_oracle, FloatCheck};
use tanpoly::Rational;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let t: Rational = args.next().as_deref().unwrap_or("1/3").parse()?;
    let max_n: u32 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(10);

    println!("tan x = {t}");
    for n in 0..=max_n {
        let value = tan_beeler(n, &t);
        let agree = value == tan_addition_oracle(n, &t) && value == tan_gaussian_oracle(n, &t);
        let float = match tan_float_check(n, &t) {
            FloatCheck::Diff(d) => format!("{d:.1e}"),
            FloatCheck::NotApplicable => "n/a".to_string(),
        };
        println!("tan({n:>2}x) = {:<40} oracles agree: {agree:<5} f64 diff: {float}", value.to_string());
    }
    Ok(())
}
