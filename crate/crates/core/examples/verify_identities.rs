//! Runs every identity suite and prints the report.
//!
//!     cargo run --release --example verify_identities -- 30

use tanpoly::verify::{run, Suite};

fn main() {
    let max_n: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(12);
    let report = run(Suite::All, max_n);
    print!("{}", report.render_text());
    if !report.pass {
        std::process::exit(1);
    }
}
