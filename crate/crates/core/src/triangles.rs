//! Coefficient triangles.
//!
//! - `R(n,k) = C(n, 2k+1)`, `T(n,k) = C(n, 2k)`: the numerator and
//!   denominator coefficients of `tan(nx)` as a ratio of polynomials in
//!   `tan x`.
//! - `M(n,k)`, `N(n,k)`: coefficients of the `(Dz)^n` expansions
//!   `(Dz)^n(z) = Σ M(n,k) y^(n-2k) z^(n+2k+1)` and
//!   `(Dz)^n(y) = Σ N(n,k) y^(n-2k+1) z^(n+2k)`, generated by their
//!   three-term recurrences. Closed forms `n!·R(n+1,k)` and `n!·T(n+1,k)`
//!   are kept separately so the two can be checked against each other.
//! - `R~(n,k)`, `T~(n,k)`: coefficients of the parity-interleaved
//!   polynomials, extracted from [`crate::symbolic`].
//!
//! Every accessor returns 0 for `k` outside the family's range.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::Int;
use crate::symbolic::{tilde_r_poly, tilde_t_poly, YPoly};

/// One row of a triangle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriangleRow {
    pub n: u64,
    #[serde(serialize_with = "serialize_entries")]
    pub entries: Vec<Int>,
}

fn serialize_entries<S: serde::Serializer>(entries: &[Int], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(entries.iter().map(|e| e.to_string()))
}

impl TriangleRow {
    pub fn new(n: u64, entries: Vec<Int>) -> Self {
        Self { n, entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn sum(&self) -> Int {
        self.entries.iter().sum()
    }
}

/// C(n, k), zero outside `0 <= k <= n`.
pub fn binom(n: u64, k: i64) -> Int {
    if k < 0 || k as u64 > n {
        return Int::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = Int::one();
    for i in 0..k {
        // Each partial product is itself a binomial coefficient, so the
        // division is exact.
        acc = acc * Int::from(n - i) / Int::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> Int {
    (2..=n).map(Int::from).product()
}

/// `R(n,k) = C(n, 2k+1)`.
pub fn r_coef(n: u64, k: i64) -> Int {
    if k < 0 {
        return Int::zero();
    }
    binom(n, 2 * k + 1)
}

/// `T(n,k) = C(n, 2k)`.
pub fn t_coef(n: u64, k: i64) -> Int {
    if k < 0 {
        return Int::zero();
    }
    binom(n, 2 * k)
}

/// Largest `k` with a nonzero `M(n,k)`: `⌊n/2⌋`.
pub fn m_upper(n: u64) -> u64 {
    n / 2
}

/// Largest `k` with a nonzero `N(n,k)`: `⌊(n+1)/2⌋`.
pub fn n_upper(n: u64) -> u64 {
    n.div_ceil(2)
}

/// `M(n,k) = n!·R(n+1,k)`.
pub fn m_closed(n: u64, k: i64) -> Int {
    if k < 0 || k as u64 > m_upper(n) {
        return Int::zero();
    }
    factorial(n) * r_coef(n + 1, k)
}

/// `N(n,k) = n!·T(n+1,k)`.
pub fn n_closed(n: u64, k: i64) -> Int {
    if k < 0 || k as u64 > n_upper(n) {
        return Int::zero();
    }
    factorial(n) * t_coef(n + 1, k)
}

/// Rows `0..=max_n` of `X(n+1,k) = (n+2k+a)·X(n,k) + (n-2k+b)·X(n,k-1)`
/// with `X(0,0) = 1`.
fn recurrence_rows(max_n: u64, a: i64, b: i64, upper: fn(u64) -> u64) -> Vec<TriangleRow> {
    let mut rows = Vec::with_capacity(max_n as usize + 1);
    let mut cur = vec![Int::one()];
    rows.push(TriangleRow::new(0, cur.clone()));
    for n in 0..max_n {
        let get = |k: i64| -> Int {
            if k < 0 {
                Int::zero()
            } else {
                cur.get(k as usize).cloned().unwrap_or_default()
            }
        };
        let ni = n as i64;
        let next: Vec<Int> = (0..=upper(n + 1) as i64)
            .map(|k| Int::from(ni + 2 * k + a) * get(k) + Int::from(ni - 2 * k + b) * get(k - 1))
            .collect();
        cur = next;
        rows.push(TriangleRow::new(n + 1, cur.clone()));
    }
    rows
}

/// Rows `0..=max_n` of `M` from `M(n+1,k) = (n+2k+2)M(n,k) + (n-2k+2)M(n,k-1)`.
pub fn m_rec_rows(max_n: u64) -> Vec<TriangleRow> {
    recurrence_rows(max_n, 2, 2, m_upper)
}

/// Rows `0..=max_n` of `N` from `N(n+1,k) = (n+2k+1)N(n,k) + (n-2k+3)N(n,k-1)`.
pub fn n_rec_rows(max_n: u64) -> Vec<TriangleRow> {
    recurrence_rows(max_n, 1, 3, n_upper)
}

fn entry(rows: &[TriangleRow], n: u64, k: i64) -> Int {
    if k < 0 {
        return Int::zero();
    }
    rows[n as usize].entries.get(k as usize).cloned().unwrap_or_default()
}

/// Single entry of `M` by the recurrence. Builds every row up to `n`; use
/// [`m_rec_rows`] when many entries are needed.
pub fn m_rec(n: u64, k: i64) -> Int {
    entry(&m_rec_rows(n), n, k)
}

/// Single entry of `N` by the recurrence.
pub fn n_rec(n: u64, k: i64) -> Int {
    entry(&n_rec_rows(n), n, k)
}

/// Coefficients of `poly` at exponents `offset, offset+2, ...,
/// offset+2(n-1)`. Anything else in `poly` is an inconsistency.
fn interleaved_row(name: &str, n: u64, poly: &YPoly, offset: u32) -> Result<TriangleRow> {
    let width = n as u32;
    for (e, c) in poly.terms() {
        if e < offset || !(e - offset).is_multiple_of(2) || (e - offset) / 2 >= width {
            return Err(Error::InternalInconsistency(format!("{name}_{n} has an unexpected term {c}y^{e}")));
        }
    }
    let entries = (0..width).map(|k| poly.coeff(offset + 2 * k)).collect();
    Ok(TriangleRow::new(n, entries))
}

/// Row `n` of `R~`: coefficients of `y^0, y^2, ..., y^(2n-2)` in `R~_n`.
pub fn tilde_r_row(n: u64) -> Result<TriangleRow> {
    if n == 0 {
        return Err(Error::UndefinedIndex { family: "R~", n });
    }
    interleaved_row("R~", n, &tilde_r_poly(n as u32)?, 0)
}

/// Row `n` of `T~`: coefficients of `y^1, y^3, ..., y^(2n-1)` in `T~_n`.
pub fn tilde_t_row(n: u64) -> Result<TriangleRow> {
    if n == 0 {
        return Err(Error::UndefinedIndex { family: "T~", n });
    }
    interleaved_row("T~", n, &tilde_t_poly(n as u32)?, 1)
}

/// A single failed instance of a triangle identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecurrenceViolation {
    pub family: &'static str,
    pub n: u64,
    pub k: i64,
    #[serde(serialize_with = "serialize_display")]
    pub lhs: Int,
    #[serde(serialize_with = "serialize_display")]
    pub rhs: Int,
}

fn serialize_display<S: serde::Serializer>(v: &Int, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RecurrenceCheck {
    pub checked: usize,
    pub violations: Vec<RecurrenceViolation>,
}

impl RecurrenceCheck {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks, for `1 <= n <= max_n`,
///
/// - `n·R(n+1,k) = (n+2k+1)·R(n,k) + (n-2k+1)·R(n,k-1)`
/// - `n·T(n+1,k) = (n+2k)·T(n,k) + (n-2k+2)·T(n,k-1)`
///
/// over every `k` where row `n+1` can be nonzero, plus one column past it.
pub fn verify_rt_recurrences(max_n: u64) -> RecurrenceCheck {
    let mut report = RecurrenceCheck::default();
    for n in 1..=max_n {
        let ni = n as i64;
        for k in 0..=(n.div_ceil(2) + 1) as i64 {
            let cases = [
                (
                    "R",
                    Int::from(ni) * r_coef(n + 1, k),
                    Int::from(ni + 2 * k + 1) * r_coef(n, k) + Int::from(ni - 2 * k + 1) * r_coef(n, k - 1),
                ),
                (
                    "T",
                    Int::from(ni) * t_coef(n + 1, k),
                    Int::from(ni + 2 * k) * t_coef(n, k) + Int::from(ni - 2 * k + 2) * t_coef(n, k - 1),
                ),
            ];
            for (family, lhs, rhs) in cases {
                report.checked += 1;
                if lhs != rhs {
                    report.violations.push(RecurrenceViolation { family, n, k, lhs, rhs });
                }
            }
        }
    }
    report
}

/// The six triangles, by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    R,
    T,
    M,
    N,
    RTilde,
    TTilde,
}

impl Family {
    pub const ALL: [Family; 6] = [Family::R, Family::T, Family::M, Family::N, Family::RTilde, Family::TTilde];

    pub fn name(self) -> &'static str {
        match self {
            Family::R => "R",
            Family::T => "T",
            Family::M => "M",
            Family::N => "N",
            Family::RTilde => "Rtilde",
            Family::TTilde => "Ttilde",
        }
    }

    /// Index of the first row: 1 for the tilde triangles, 0 otherwise.
    pub fn first_row(self) -> u64 {
        match self {
            Family::RTilde | Family::TTilde => 1,
            _ => 0,
        }
    }

    /// Number of entries in row `n`. Row 0 of `R` is empty since
    /// `C(0, 2k+1) = 0` for all `k`.
    pub fn row_len(self, n: u64) -> usize {
        let len = match self {
            Family::R => n.div_ceil(2),
            Family::T => n / 2 + 1,
            Family::M => m_upper(n) + 1,
            Family::N => n_upper(n) + 1,
            Family::RTilde | Family::TTilde => n,
        };
        len as usize
    }

    /// The first `count` rows, starting from [`first_row`](Self::first_row).
    pub fn rows(self, count: u64) -> Result<Vec<TriangleRow>> {
        let first = self.first_row();
        let idx = first..first + count;
        match self {
            Family::R => Ok(idx
                .map(|n| TriangleRow::new(n, (0..self.row_len(n) as i64).map(|k| r_coef(n, k)).collect()))
                .collect()),
            Family::T => Ok(idx
                .map(|n| TriangleRow::new(n, (0..self.row_len(n) as i64).map(|k| t_coef(n, k)).collect()))
                .collect()),
            Family::M | Family::N if count == 0 => Ok(Vec::new()),
            Family::M => Ok(m_rec_rows(count - 1)),
            Family::N => Ok(n_rec_rows(count - 1)),
            Family::RTilde => idx.map(tilde_r_row).collect(),
            Family::TTilde => idx.map(tilde_t_row).collect(),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown triangle {s:?} (expected R, T, M, N, Rtilde or Ttilde)"))
    }
}
