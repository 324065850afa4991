//! Writes a triangle as an OEIS-style b-file, then reads it back and checks
//! that it re-chunks into the same rows.
//!
//!     cargo run --example bfile_export -- Rtilde 12 rtilde.txt

use std::fs;

use tanpoly::cli::{chunk_rows, parse_bfile, render_rows, OutputFormat};
use tanpoly::triangles::Family;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let family: Family = args.next().as_deref().unwrap_or("Rtilde").parse()?;
    let rows: u64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(10);
    let path = args.next();

    let triangle = family.rows(rows)?;
    let text = render_rows(&triangle, OutputFormat::Bfile);
    match &path {
        Some(p) => fs::write(p, &text)?,
        None => print!("{text}"),
    }

    let reread = chunk_rows(family, &parse_bfile(&text)?)?;
    assert_eq!(reread, triangle);
    eprintln!("{family}: {} rows, {} terms, round-trip ok", triangle.len(), text.lines().count());
    Ok(())
}
