//! Prints the first rows of all six coefficient triangles.
//!
//!     cargo run --example triangles -- 8

use tanpoly::triangles::Family;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let rows: u64 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(6);

    for family in Family::ALL {
        println!("{family}:");
        for row in family.rows(rows)? {
            let entries: Vec<String> = row.entries.iter().map(ToString::to_string).collect();
            println!("  n={:<2} {}", row.n, entries.join(" "));
        }
        println!();
    }
    Ok(())
}
