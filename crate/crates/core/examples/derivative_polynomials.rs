//! Hoffman's derivative polynomials and the R_n / T_n families, with R_n and
//! T_n computed both from their closed form and from the (Dz)^n expansion.

use tanpoly::symbolic::{hoffman_p, hoffman_q, r_poly_closed, r_poly_dz, t_poly_closed, t_poly_dz};

fn main() -> tanpoly::Result<()> {
    println!("d^n/dx^n tan x = P_n(tan x),  d^n/dx^n sec x = sec x · Q_n(tan x)");
    for n in 0..=6 {
        println!("  P_{n} = {}", hoffman_p(n));
        println!("  Q_{n} = {}", hoffman_q(n));
    }

    println!();
    for n in 1..=6 {
        let (r, t) = (r_poly_closed(n)?, t_poly_closed(n)?);
        let agree = r == r_poly_dz(n)? && t == t_poly_dz(n)?;
        println!("R_{n} = {r}");
        println!("T_{n} = {t}");
        println!("  operator route agrees: {agree}");
    }
    Ok(())
}
