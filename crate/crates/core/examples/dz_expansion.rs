//! Iterates p ↦ D(z·p) on z and y, shows the unreduced expansions, their
//! M / N coefficients, and the canonical form modulo z^2 = 1 + y^2.

use tanpoly::symbolic::YZPoly;
use tanpoly::triangles::{m_rec_rows, n_rec_rows};

fn main() {
    let max_n = 5;
    let m = m_rec_rows(max_n);
    let n_rows = n_rec_rows(max_n);

    let mut pz = YZPoly::z();
    let mut py = YZPoly::y();
    for n in 0..=max_n as usize {
        println!("(Dz)^{n}(z) = {pz}");
        println!("    M row: {:?}", m[n].entries.iter().map(ToString::to_string).collect::<Vec<_>>());
        println!("    reduced: {}", pz.reduce_z());
        println!("(Dz)^{n}(y) = {py}");
        println!("    N row: {:?}", n_rows[n].entries.iter().map(ToString::to_string).collect::<Vec<_>>());
        println!("    reduced: {}", py.reduce_z());
        pz = pz.apply_dz();
        py = py.apply_dz();
    }
}
