//! Identity-checking suites. Each suite recomputes one family of identities
//! up to a size bound and records every mismatch as a structured failure
//! instead of stopping at the first.

use std::fmt;
use std::str::FromStr;

use num_traits::Pow;
use serde::Serialize;

use crate::exact::{Int, Rational};
use crate::multiangle::{tan_addition_oracle, tan_beeler, tan_gaussian_oracle, TanValue};
use crate::symbolic::{
    hoffman_p, hoffman_q, r_poly_closed, r_poly_dz, t_poly_closed, t_poly_dz, tilde_r_poly, tilde_t_poly, ReducedPair,
    YPoly, YZPoly,
};
use crate::triangles::{
    m_closed, m_rec_rows, m_upper, n_closed, n_rec_rows, n_upper, tilde_r_row, tilde_t_row, verify_rt_recurrences,
    TriangleRow,
};

/// Reference rows 1..=5 of `R~`.
pub const TILDE_R_REFERENCE_ROWS: [&[u64]; 5] = [&[1], &[1, 2], &[1, 5, 4], &[1, 9, 16, 8], &[1, 14, 41, 44, 16]];

/// Reference rows 1..=5 of `T~`.
pub const TILDE_T_REFERENCE_ROWS: [&[u64]; 5] = [&[1], &[2, 2], &[3, 7, 4], &[4, 16, 20, 8], &[5, 30, 61, 52, 16]];

/// The 13 evaluation points used for `tan(nx)` agreement.
pub fn tan_grid() -> Vec<Rational> {
    let base = [(0, 1), (1, 1), (1, 2), (2, 1), (1, 3), (3, 7), (7, 2)];
    let mut out = Vec::with_capacity(13);
    for (p, q) in base {
        out.push(Rational::new(p, q).unwrap());
        if p != 0 {
            out.push(Rational::new(-p, q).unwrap());
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    RtRecurrences,
    Corollary,
    DzExpansion,
    Hoffman,
    Theorem2,
    Tables,
    Beeler,
    All,
}

impl Suite {
    pub const LEAVES: [Suite; 7] = [
        Suite::RtRecurrences,
        Suite::Corollary,
        Suite::DzExpansion,
        Suite::Hoffman,
        Suite::Theorem2,
        Suite::Tables,
        Suite::Beeler,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::RtRecurrences => "rt-recurrences",
            Suite::Corollary => "corollary",
            Suite::DzExpansion => "dz-expansion",
            Suite::Hoffman => "hoffman",
            Suite::Theorem2 => "theorem2",
            Suite::Tables => "tables",
            Suite::Beeler => "beeler",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::LEAVES
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// One failed check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub suite: String,
    /// Which instance, e.g. `n=3 k=1`.
    pub case: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub max_n: u64,
    pub checked: usize,
    pub failures: Vec<Failure>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<VerifyReport>,
    pub pass: bool,
}

impl VerifyReport {
    fn new(suite: Suite, max_n: u64) -> Self {
        Self {
            suite: suite.name().to_string(),
            max_n,
            checked: 0,
            failures: Vec::new(),
            notes: Vec::new(),
            parts: Vec::new(),
            pass: true,
        }
    }

    fn check(
        &mut self,
        ok: bool,
        case: impl FnOnce() -> String,
        expected: impl fmt::Display,
        actual: impl fmt::Display,
    ) {
        self.checked += 1;
        if !ok {
            self.failures.push(Failure {
                suite: self.suite.clone(),
                case: case(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    fn finish(mut self) -> Self {
        self.pass = self.failures.is_empty();
        self
    }

    /// Human-readable rendering, one status line per suite.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for part in &self.parts {
            out.push_str(&part.render_text());
        }
        let status = if self.pass { "pass" } else { "FAIL" };
        out.push_str(&format!(
            "{status} {} (max-n {}): {} checks, {} failures\n",
            self.suite,
            self.max_n,
            self.checked,
            self.failures.len()
        ));
        for note in &self.notes {
            out.push_str(&format!("  note: {note}\n"));
        }
        if self.parts.is_empty() {
            for f in &self.failures {
                out.push_str(&format!("  {}: expected {}, got {}\n", f.case, f.expected, f.actual));
            }
        }
        out
    }
}

pub fn run(suite: Suite, max_n: u64) -> VerifyReport {
    match suite {
        Suite::RtRecurrences => rt_recurrences(max_n),
        Suite::Corollary => corollary(max_n),
        Suite::DzExpansion => dz_expansion(max_n),
        Suite::Hoffman => hoffman(max_n),
        Suite::Theorem2 => theorem2(max_n),
        Suite::Tables => tables(max_n),
        Suite::Beeler => beeler(max_n),
        Suite::All => {
            let mut all = VerifyReport::new(Suite::All, max_n);
            for leaf in Suite::LEAVES {
                let part = run(leaf, max_n);
                all.checked += part.checked;
                all.failures.extend(part.failures.iter().cloned());
                all.parts.push(part);
            }
            all.finish()
        }
    }
}

fn rt_recurrences(max_n: u64) -> VerifyReport {
    let mut report = VerifyReport::new(Suite::RtRecurrences, max_n);
    let check = verify_rt_recurrences(max_n);
    report.checked = check.checked;
    for v in check.violations {
        report.failures.push(Failure {
            suite: report.suite.clone(),
            case: format!("{} n={} k={}", v.family, v.n, v.k),
            expected: v.rhs.to_string(),
            actual: v.lhs.to_string(),
        });
    }
    report.finish()
}

fn corollary(max_n: u64) -> VerifyReport {
    let mut report = VerifyReport::new(Suite::Corollary, max_n);
    let m_rows = m_rec_rows(max_n);
    let n_rows = n_rec_rows(max_n);
    let mut beyond_half = 0usize;
    for n in 0..=max_n {
        let m_row = &m_rows[n as usize].entries;
        let n_row = &n_rows[n as usize].entries;
        let at = |row: &[Int], k: u64| row.get(k as usize).cloned().unwrap_or_default();
        if m_row.len() as u64 > m_upper(n) + 1 || n_row.len() as u64 > n_upper(n) + 1 {
            report.failures.push(Failure {
                suite: report.suite.clone(),
                case: format!("row {n} length"),
                expected: format!("M {}, N {}", m_upper(n) + 1, n_upper(n) + 1),
                actual: format!("M {}, N {}", m_row.len(), n_row.len()),
            });
        }
        for k in 0..=m_upper(n) {
            let (closed, v) = (m_closed(n, k as i64), at(m_row, k));
            report.check(v == closed, || format!("M n={n} k={k}"), &closed, &v);
        }
        for k in 0..=n_upper(n) {
            let (closed, v) = (n_closed(n, k as i64), at(n_row, k));
            if k > n / 2 {
                beyond_half += 1;
            }
            report.check(v == closed, || format!("N n={n} k={k}"), &closed, &v);
        }
    }
    report.notes.push(format!(
        "N(n,k) checked for 0 <= k <= floor((n+1)/2); {beyond_half} of those entries have k > floor(n/2)"
    ));
    report.finish()
}

/// Checks that `p` is exactly `Σ_k coef(k) · y^(a(k)) · z^(b(k))`.
fn check_expansion(
    report: &mut VerifyReport,
    label: &str,
    n: u64,
    p: &YZPoly,
    upper: u64,
    monomial: impl Fn(u64) -> (u32, u32),
    coef: impl Fn(u64) -> Int,
) {
    let mut expected = YZPoly::zero();
    for k in 0..=upper {
        let (a, b) = monomial(k);
        let c = coef(k);
        report.check(p.coeff(a, b) == c, || format!("{label} n={n} y^{a}z^{b}"), &c, p.coeff(a, b));
        expected.add_term(a, b, c);
    }
    report.check(p.len() == expected.len(), || format!("{label} n={n} monomial count"), expected.len(), p.len());
}

fn dz_expansion(max_n: u64) -> VerifyReport {
    let mut report = VerifyReport::new(Suite::DzExpansion, max_n);
    let mut pz = YZPoly::z();
    let mut py = YZPoly::y();
    for n in 0..=max_n {
        let ni = n as u32;
        check_expansion(
            &mut report,
            "(Dz)^n(z)",
            n,
            &pz,
            m_upper(n),
            |k| (ni - 2 * k as u32, ni + 2 * k as u32 + 1),
            |k| m_closed(n, k as i64),
        );
        check_expansion(
            &mut report,
            "(Dz)^n(y)",
            n,
            &py,
            n_upper(n),
            |k| (ni + 1 - 2 * k as u32, ni + 2 * k as u32),
            |k| n_closed(n, k as i64),
        );
        pz = pz.apply_dz();
        py = py.apply_dz();
    }
    report.finish()
}

fn hoffman(max_n: u64) -> VerifyReport {
    let mut report = VerifyReport::new(Suite::Hoffman, max_n);
    let mut dy = YZPoly::y();
    let mut dz = YZPoly::z();
    for n in 0..=max_n {
        let ni = n as u32;
        let p = ReducedPair::new(hoffman_p(ni), YPoly::zero());
        let q = ReducedPair::new(YPoly::zero(), hoffman_q(ni));
        let ry = dy.reduce_z();
        let rz = dz.reduce_z();
        report.check(ry == p, || format!("D^{n}(y)"), &p, &ry);
        report.check(rz == q, || format!("D^{n}(z)"), &q, &rz);
        dy = dy.diff();
        dz = dz.diff();
    }
    report.finish()
}

fn theorem2(max_n: u64) -> VerifyReport {
    let mut report = VerifyReport::new(Suite::Theorem2, max_n);
    for n in 1..=max_n as u32 {
        for (name, closed, dz) in [("R", r_poly_closed(n), r_poly_dz(n)), ("T", t_poly_closed(n), t_poly_dz(n))] {
            let ok = matches!((&closed, &dz), (Ok(a), Ok(b)) if a == b);
            report.check(ok, || format!("{name}_{n}"), show_poly(&closed), show_poly(&dz));
        }
    }
    report.finish()
}

fn row_string(row: &crate::Result<TriangleRow>) -> String {
    match row {
        Ok(r) => r.entries.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" "),
        Err(e) => format!("error: {e}"),
    }
}

struct TildeFamily {
    name: &'static str,
    row: fn(u64) -> crate::Result<TriangleRow>,
    closed: fn(u32) -> crate::Result<YPoly>,
    /// The same polynomial by way of the `(Dz)^n` expansion.
    operator: fn(u32) -> crate::Result<YPoly>,
    reference: &'static [&'static [u64]; 5],
}

fn show_poly(p: &crate::Result<YPoly>) -> String {
    match p {
        Ok(p) => p.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

fn tables(max_n: u64) -> VerifyReport {
    let mut report = VerifyReport::new(Suite::Tables, max_n);
    let families = [
        TildeFamily {
            name: "R~",
            row: tilde_r_row,
            closed: tilde_r_poly,
            operator: |n| if n % 2 == 0 { t_poly_dz(n) } else { r_poly_dz(n) },
            reference: &TILDE_R_REFERENCE_ROWS,
        },
        TildeFamily {
            name: "T~",
            row: tilde_t_row,
            closed: tilde_t_poly,
            operator: |n| if n % 2 == 0 { r_poly_dz(n) } else { t_poly_dz(n) },
            reference: &TILDE_T_REFERENCE_ROWS,
        },
    ];
    for n in 1..=max_n {
        for fam in &families {
            let name = fam.name;
            let row = (fam.row)(n);
            if n <= 5 {
                let want = fam.reference[n as usize - 1].iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
                let got = row_string(&row);
                report.check(want == got, || format!("{name} row {n} vs reference"), &want, &got);
                continue;
            }
            // Beyond the reference rows: shape, and agreement with the
            // operator-derived polynomial.
            let last = Int::from(2u32).pow((n - 1) as u32);
            let shape_ok = match &row {
                Ok(r) => {
                    r.len() == n as usize
                        && r.entries.last() == Some(&last)
                        && (name != "T~" || r.entries[0] == Int::from(n))
                }
                Err(_) => false,
            };
            report.check(
                shape_ok,
                || format!("{name} row {n} shape"),
                format!("{n} entries ending in {last}"),
                row_string(&row),
            );
            let closed = (fam.closed)(n as u32);
            let operator = (fam.operator)(n as u32);
            let ok = matches!((&closed, &operator), (Ok(a), Ok(b)) if a == b);
            report.check(ok, || format!("{name}_{n} closed vs operator"), show_poly(&closed), show_poly(&operator));
        }
    }
    report.finish()
}

fn beeler(max_n: u64) -> VerifyReport {
    let mut report = VerifyReport::new(Suite::Beeler, max_n);
    let grid = tan_grid();
    for n in 0..=max_n as u32 {
        for t in &grid {
            let b = tan_beeler(n, t);
            let a = tan_addition_oracle(n, t);
            let g = tan_gaussian_oracle(n, t);
            report.check(b == a && b == g, || format!("n={n} t={t}"), &b, format!("addition {a}, gaussian {g}"));
            let neg = tan_beeler(n, &-t);
            let want = -b.clone();
            report.check(neg == want, || format!("odd symmetry n={n} t={t}"), &want, &neg);
        }
    }
    // tan(ab·x) = tan(a·(bx)) whenever everything is finite
    let bound = max_n.min(12) as u32;
    for a in 1..=bound {
        for b in 1..=bound / a {
            for t in &grid {
                let TanValue::Finite(u) = tan_beeler(b, t) else { continue };
                let (lhs, rhs) = (tan_beeler(a * b, t), tan_beeler(a, &u));
                if lhs.is_pole() || rhs.is_pole() {
                    continue;
                }
                report.check(lhs == rhs, || format!("composition a={a} b={b} t={t}"), &lhs, &rhs);
            }
        }
    }
    report.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_has_thirteen_points() {
        let g = tan_grid();
        assert_eq!(g.len(), 13);
        assert!(g.contains(&Rational::new(-7, 2).unwrap()));
    }

    #[test]
    fn tables_at_five_checks_ten_rows() {
        let r = run(Suite::Tables, 5);
        assert!(r.pass, "{}", r.render_text());
        assert_eq!(r.checked, 10);
    }

    #[test]
    fn corollary_count_is_sum_of_row_lengths() {
        let r = run(Suite::Corollary, 25);
        assert!(r.pass);
        let entries: u64 = (0..=25).map(|n| m_upper(n) + 1 + n_upper(n) + 1).sum();
        assert_eq!(r.checked as u64, entries);
        assert_eq!(r.notes.len(), 1);
    }

    #[test]
    fn every_suite_passes_small() {
        for s in Suite::LEAVES {
            let r = run(s, 8);
            assert!(r.pass, "{}", r.render_text());
            assert!(r.checked > 0, "{s}");
        }
        let all = run(Suite::All, 8);
        assert!(all.pass);
        assert_eq!(all.parts.len(), 7);
        assert_eq!(all.checked, all.parts.iter().map(|p| p.checked).sum::<usize>());
    }

    #[test]
    fn report_pass_flag_tracks_failures() {
        let mut r = VerifyReport::new(Suite::Tables, 1);
        r.check(false, || "x".into(), 1, 2);
        let r = r.finish();
        assert!(!r.pass);
        assert!(r.render_text().contains("FAIL tables"));
        assert!(r.render_text().contains("x: expected 1, got 2"));
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::LEAVES.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
