//! Exact polynomial algebra in `y = tan x` and `z = sec x`.
//!
//! [`YZPoly`] carries unreduced expansions such as `(Dz)^n(z)`; [`YPoly`]
//! carries the one-variable families `P_n`, `Q_n`, `R_n`, `T_n`.
//! [`ReducedPair`] is the canonical form `f(y) + z·g(y)` of an element of
//! `Z[y, z] / (z^2 - 1 - y^2)`.
//!
//! The derivation `D` acts by `D(y) = z^2`, `D(z) = y·z`, and the operator
//! `Dz` is `p ↦ D(z·p)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Int, Rational};
use crate::triangles::{factorial, r_coef, t_coef};

fn add_into<K: Ord>(terms: &mut BTreeMap<K, Int>, key: K, c: Int) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// Writes `c·body` as one signed term of a sum; `first` controls whether a
/// leading `+` is emitted.
fn write_term(f: &mut fmt::Formatter<'_>, first: bool, c: &Int, body: &str) -> fmt::Result {
    let mag = c.abs();
    match (first, c.is_negative()) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    if body.is_empty() {
        write!(f, "{mag}")
    } else if mag.is_one() {
        f.write_str(body)
    } else {
        write!(f, "{mag}{body}")
    }
}

fn power_str(var: char, e: u32) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

// ---------------------------------------------------------------------------
// YPoly

/// Sparse polynomial in `y` with integer coefficients. No zero coefficient is
/// ever stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct YPoly {
    terms: BTreeMap<u32, Int>,
}

impl YPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn y() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<Int>) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: impl Into<Int>, exp: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c.into());
        p
    }

    /// `1 + y^2`, i.e. `z^2` in the quotient ring.
    pub fn one_plus_y2() -> Self {
        Self::from_coeffs(&[1, 0, 1])
    }

    /// Builds from dense coefficients, lowest degree first.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        let mut p = Self::zero();
        for (e, &c) in coeffs.iter().enumerate() {
            p.add_term(e as u32, Int::from(c));
        }
        p
    }

    pub fn add_term(&mut self, exp: u32, c: Int) {
        add_into(&mut self.terms, exp, c);
    }

    pub fn coeff(&self, exp: u32) -> Int {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &Int)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    /// `d/dy`.
    pub fn derivative(&self) -> Self {
        let mut out = Self::zero();
        for (&e, c) in &self.terms {
            if e > 0 {
                out.add_term(e - 1, c * Int::from(e));
            }
        }
        out
    }

    /// Multiplies by `y^k`.
    pub fn shift(&self, k: u32) -> Self {
        Self { terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, s: &Int) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(&e, c)| (e, c * s)).collect() }
    }

    /// Divides every coefficient by `d`, or `None` if any division is inexact.
    pub fn div_exact(&self, d: &Int) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let mut terms = BTreeMap::new();
        for (&e, c) in &self.terms {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            terms.insert(e, q);
        }
        Some(Self { terms })
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Horner evaluation at an exact rational point.
    pub fn eval(&self, y: &Rational) -> Rational {
        let Some(deg) = self.degree() else {
            return Rational::zero();
        };
        let mut acc = Rational::zero();
        for e in (0..=deg).rev() {
            acc = &(&acc * y) + &Rational::from_int(self.coeff(e));
        }
        acc
    }

    /// Dense coefficient list `[c_0, c_1, ..., c_deg]`.
    pub fn dense(&self) -> Vec<Int> {
        match self.degree() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|e| self.coeff(e)).collect(),
        }
    }
}

impl fmt::Display for YPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            write_term(f, i == 0, c, &power_str('y', e))?;
        }
        Ok(())
    }
}

/// Serialized as `[[exponent, "coefficient"], ...]` in ascending exponent
/// order; coefficients are exact decimal strings.
impl Serialize for YPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.len()))?;
        for (e, c) in self.terms() {
            seq.serialize_element(&(e, c.to_string()))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for YPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<(u32, String)> = Vec::deserialize(d)?;
        let mut p = YPoly::zero();
        for (e, c) in raw {
            let c: Int = c.parse().map_err(|_| de::Error::custom(format!("bad coefficient {c:?}")))?;
            if c.is_zero() || p.terms.contains_key(&e) {
                return Err(de::Error::custom(format!("non-canonical term at exponent {e}")));
            }
            p.terms.insert(e, c);
        }
        Ok(p)
    }
}

impl<'a> Add<&'a YPoly> for &'a YPoly {
    type Output = YPoly;
    fn add(self, rhs: &YPoly) -> YPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a YPoly> for &'a YPoly {
    type Output = YPoly;
    fn sub(self, rhs: &YPoly) -> YPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c);
        }
        out
    }
}

impl<'a> Mul<&'a YPoly> for &'a YPoly {
    type Output = YPoly;
    fn mul(self, rhs: &YPoly) -> YPoly {
        let mut out = YPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &YPoly {
    type Output = YPoly;
    fn neg(self) -> YPoly {
        YPoly { terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

// ---------------------------------------------------------------------------
// YZPoly

/// Sparse polynomial in commuting `y, z` with integer coefficients, keyed by
/// `(y-exponent, z-exponent)`. Iteration order is ascending in the
/// y-exponent, then in the z-exponent.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct YZPoly {
    terms: BTreeMap<(u32, u32), Int>,
}

impl YZPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn y() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn z() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// `c · y^a · z^b`.
    pub fn monomial(c: impl Into<Int>, a: u32, b: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(a, b, c.into());
        p
    }

    pub fn add_term(&mut self, a: u32, b: u32, c: Int) {
        add_into(&mut self.terms, (a, b), c);
    }

    pub fn coeff(&self, a: u32, b: u32) -> Int {
        self.terms.get(&(a, b)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &Int)> + '_ {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Multiplies by `y^dy · z^dz`.
    pub fn shift(&self, dy: u32, dz: u32) -> Self {
        Self { terms: self.terms.iter().map(|(&(a, b), c)| ((a + dy, b + dz), c.clone())).collect() }
    }

    /// The derivation `D` with `D(y) = z^2`, `D(z) = y·z`:
    /// `c·y^a·z^b ↦ c·a·y^(a-1)·z^(b+2) + c·b·y^(a+1)·z^b`.
    pub fn diff(&self) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            if a > 0 {
                out.add_term(a - 1, b + 2, c * Int::from(a));
            }
            if b > 0 {
                out.add_term(a + 1, b, c * Int::from(b));
            }
        }
        out
    }

    /// `D(z · p)`.
    pub fn apply_dz(&self) -> Self {
        self.shift(0, 1).diff()
    }

    /// `n`-fold [`apply_dz`](Self::apply_dz); the zeroth iterate is `self`.
    pub fn dz_iter(&self, n: u32) -> Self {
        let mut p = self.clone();
        for _ in 0..n {
            p = p.apply_dz();
        }
        p
    }

    /// `n`-fold [`diff`](Self::diff).
    pub fn diff_iter(&self, n: u32) -> Self {
        let mut p = self.clone();
        for _ in 0..n {
            p = p.diff();
        }
        p
    }

    /// Canonical form modulo `z^2 = 1 + y^2`: `z^(2j) ↦ (1+y^2)^j` and
    /// `z^(2j+1) ↦ z·(1+y^2)^j`.
    pub fn reduce_z(&self) -> ReducedPair {
        let mut powers = vec![YPoly::one()];
        let mut f = YPoly::zero();
        let mut g = YPoly::zero();
        for (&(a, b), c) in &self.terms {
            let j = (b / 2) as usize;
            while powers.len() <= j {
                let next = powers.last().unwrap() * &YPoly::one_plus_y2();
                powers.push(next);
            }
            let term = powers[j].shift(a).scale(c);
            if b % 2 == 0 {
                f = &f + &term;
            } else {
                g = &g + &term;
            }
        }
        ReducedPair { f, g }
    }
}

impl From<&YPoly> for YZPoly {
    fn from(p: &YPoly) -> Self {
        let mut out = YZPoly::zero();
        for (e, c) in p.terms() {
            out.add_term(e, 0, c.clone());
        }
        out
    }
}

impl fmt::Display for YZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, ((a, b), c)) in self.terms().enumerate() {
            let body = power_str('y', a) + &power_str('z', b);
            write_term(f, i == 0, c, &body)?;
        }
        Ok(())
    }
}

/// Serialized as `[[[y_exp, z_exp], "coefficient"], ...]` in canonical order.
impl Serialize for YZPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.len()))?;
        for ((a, b), c) in self.terms() {
            seq.serialize_element(&([a, b], c.to_string()))?;
        }
        seq.end()
    }
}

impl<'a> Add<&'a YZPoly> for &'a YZPoly {
    type Output = YZPoly;
    fn add(self, rhs: &YZPoly) -> YZPoly {
        let mut out = self.clone();
        for ((a, b), c) in rhs.terms() {
            out.add_term(a, b, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a YZPoly> for &'a YZPoly {
    type Output = YZPoly;
    fn sub(self, rhs: &YZPoly) -> YZPoly {
        let mut out = self.clone();
        for ((a, b), c) in rhs.terms() {
            out.add_term(a, b, -c);
        }
        out
    }
}

impl<'a> Mul<&'a YZPoly> for &'a YZPoly {
    type Output = YZPoly;
    fn mul(self, rhs: &YZPoly) -> YZPoly {
        let mut out = YZPoly::zero();
        for ((a1, b1), c1) in self.terms() {
            for ((a2, b2), c2) in rhs.terms() {
                out.add_term(a1 + a2, b1 + b2, c1 * c2);
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------
// ReducedPair

/// `f(y) + z·g(y)`, the unique representative of a class in
/// `Z[y, z] / (z^2 - 1 - y^2)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct ReducedPair {
    pub f: YPoly,
    pub g: YPoly,
}

impl ReducedPair {
    pub fn new(f: YPoly, g: YPoly) -> Self {
        Self { f, g }
    }

    /// The representative `f + z·g` as an unreduced polynomial.
    pub fn embed(&self) -> YZPoly {
        &YZPoly::from(&self.f) + &YZPoly::from(&self.g).shift(0, 1)
    }

    /// The derivation induced by `D` on the quotient:
    /// `(f, g) ↦ ((1+y^2)·f', y·g + (1+y^2)·g')`.
    pub fn diff(&self) -> Self {
        let w = YPoly::one_plus_y2();
        Self { f: &w * &self.f.derivative(), g: &self.g.shift(1) + &(&w * &self.g.derivative()) }
    }
}

impl<'a> Mul<&'a ReducedPair> for &'a ReducedPair {
    type Output = ReducedPair;
    fn mul(self, rhs: &ReducedPair) -> ReducedPair {
        let gg = &(&self.g * &rhs.g) * &YPoly::one_plus_y2();
        ReducedPair { f: &(&self.f * &rhs.f) + &gg, g: &(&self.f * &rhs.g) + &(&self.g * &rhs.f) }
    }
}

impl fmt::Display for ReducedPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + z·({})", self.f, self.g)
    }
}

// ---------------------------------------------------------------------------
// Polynomial families

/// Hoffman's `P_n` with `D^n(tan x) = P_n(tan x)`, by `P_0 = y`,
/// `P_{n+1} = (1+y^2)·P_n'`.
pub fn hoffman_p(n: u32) -> YPoly {
    let w = YPoly::one_plus_y2();
    (0..n).fold(YPoly::y(), |p, _| &w * &p.derivative())
}

/// Hoffman's `Q_n` with `D^n(sec x) = sec x · Q_n(tan x)`, by `Q_0 = 1`,
/// `Q_{n+1} = (1+y^2)·Q_n' + y·Q_n`.
pub fn hoffman_q(n: u32) -> YPoly {
    let w = YPoly::one_plus_y2();
    (0..n).fold(YPoly::one(), |q, _| &(&w * &q.derivative()) + &q.shift(1))
}

fn require_positive(family: &'static str, n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::UndefinedIndex { family, n: 0 });
    }
    Ok(())
}

/// Sum of `coef(n, k) · y^(n - 2k - y_drop) · (1+y^2)^(base + k)` over `0..=upper_k`.
fn closed_form(n: u32, upper_k: u32, y_drop: u32, base: u32, coef: impl Fn(u64, i64) -> Int) -> YPoly {
    let w = YPoly::one_plus_y2();
    let mut wpow = w.pow(base);
    let mut out = YPoly::zero();
    for k in 0..=upper_k {
        let term = wpow.shift(n - 2 * k - y_drop).scale(&coef(n as u64, k as i64));
        out = &out + &term;
        wpow = &wpow * &w;
    }
    out
}

/// `R_n(y) = Σ_{k=0}^{⌊(n-1)/2⌋} C(n, 2k+1) · y^(n-2k-1) · (1+y^2)^(⌊n/2⌋+k)`.
pub fn r_poly_closed(n: u32) -> Result<YPoly> {
    require_positive("R_n", n)?;
    Ok(closed_form(n, (n - 1) / 2, 1, n / 2, r_coef))
}

/// `T_n(y) = Σ_{k=0}^{⌊n/2⌋} C(n, 2k) · y^(n-2k) · (1+y^2)^(⌊(n-1)/2⌋+k)`.
pub fn t_poly_closed(n: u32) -> Result<YPoly> {
    require_positive("T_n", n)?;
    Ok(closed_form(n, n / 2, 0, (n - 1) / 2, t_coef))
}

/// Pulls a family member out of `(Dz)^(n-1)(seed)`: the reduced pair must
/// have all its mass on one side (`on_z` selects `g`), and that side must
/// be divisible by `(n-1)!`.
fn extract_from_dz(family: &'static str, n: u32, seed: &YZPoly, on_z: bool) -> Result<YPoly> {
    require_positive(family, n)?;
    let ReducedPair { f, g } = seed.dz_iter(n - 1).reduce_z();
    let (keep, other) = if on_z { (g, f) } else { (f, g) };
    if !other.is_zero() {
        let side = if on_z { "z-free" } else { "z" };
        return Err(Error::InternalInconsistency(format!(
            "{family} for n = {n}: expected an empty {side} part, found {other}"
        )));
    }
    let fact = factorial((n - 1) as u64);
    keep.div_exact(&fact)
        .ok_or_else(|| Error::InternalInconsistency(format!("{family} for n = {n}: {keep} is not divisible by {fact}")))
}

/// `R_n` from the operator expansion: `(Dz)^(2m)(z) = (2m)!·z·R_{2m+1}` and
/// `(Dz)^(2m+1)(z) = (2m+1)!·R_{2m+2}`.
pub fn r_poly_dz(n: u32) -> Result<YPoly> {
    extract_from_dz("R_n", n, &YZPoly::z(), n % 2 == 1)
}

/// `T_n` from the operator expansion: `(Dz)^(2m)(y) = (2m)!·T_{2m+1}` and
/// `(Dz)^(2m+1)(y) = (2m+1)!·z·T_{2m+2}`.
pub fn t_poly_dz(n: u32) -> Result<YPoly> {
    extract_from_dz("T_n", n, &YZPoly::y(), n.is_multiple_of(2))
}

/// `R~_n`: `T_n` for even `n`, `R_n` for odd `n`. Even powers of `y` only.
pub fn tilde_r_poly(n: u32) -> Result<YPoly> {
    require_positive("R~_n", n)?;
    if n.is_multiple_of(2) {
        t_poly_closed(n)
    } else {
        r_poly_closed(n)
    }
}

/// `T~_n`: `R_n` for even `n`, `T_n` for odd `n`. Odd powers of `y` only.
pub fn tilde_t_poly(n: u32) -> Result<YPoly> {
    require_positive("T~_n", n)?;
    if n.is_multiple_of(2) {
        r_poly_closed(n)
    } else {
        t_poly_closed(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn yp(c: &[i64]) -> YPoly {
        YPoly::from_coeffs(c)
    }

    fn yz(terms: &[(i64, u32, u32)]) -> YZPoly {
        let mut p = YZPoly::zero();
        for &(c, a, b) in terms {
            p.add_term(a, b, Int::from(c));
        }
        p
    }

    #[test]
    fn diff_examples() {
        assert_eq!(YZPoly::z().diff(), yz(&[(1, 1, 1)]));
        assert_eq!(YZPoly::y().diff(), yz(&[(1, 0, 2)]));
        assert!(YZPoly::one().diff().is_zero());
        assert_eq!(yz(&[(1, 1, 3)]).diff(), yz(&[(1, 0, 5), (3, 2, 3)]));
    }

    #[test]
    fn dz_examples() {
        assert_eq!(YZPoly::z().apply_dz(), yz(&[(2, 1, 2)]));
        assert_eq!(YZPoly::y().apply_dz(), yz(&[(1, 2, 1), (1, 0, 3)]));
        assert_eq!(yz(&[(2, 1, 2)]).apply_dz(), yz(&[(6, 2, 3), (2, 0, 5)]));
        assert_eq!(YZPoly::z().dz_iter(0), YZPoly::z());
        assert_eq!(YZPoly::y().dz_iter(1), yz(&[(1, 2, 1), (1, 0, 3)]));
        assert_eq!(YZPoly::z().dz_iter(2), yz(&[(6, 2, 3), (2, 0, 5)]));
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(yz(&[(1, 0, 2)]).reduce_z(), ReducedPair::new(yp(&[1, 0, 1]), YPoly::zero()));
        assert_eq!(yz(&[(1, 3, 0)]).reduce_z(), ReducedPair::new(yp(&[0, 0, 0, 1]), YPoly::zero()));
        assert_eq!(yz(&[(2, 1, 2)]).reduce_z(), ReducedPair::new(yp(&[0, 2, 0, 2]), YPoly::zero()));
        assert_eq!(yz(&[(1, 0, 3)]).reduce_z(), ReducedPair::new(YPoly::zero(), yp(&[1, 0, 1])));
    }

    #[test]
    fn embed_then_reduce_is_identity() {
        let pair = ReducedPair::new(yp(&[3, -1, 0, 4]), yp(&[0, 2, 5]));
        assert_eq!(pair.embed().reduce_z(), pair);
    }

    #[test]
    fn reduced_diff_examples() {
        let d = |f: &[i64], g: &[i64]| ReducedPair::new(yp(f), yp(g)).diff();
        assert_eq!(d(&[0, 1], &[]), ReducedPair::new(yp(&[1, 0, 1]), YPoly::zero()));
        assert_eq!(d(&[], &[1]), ReducedPair::new(YPoly::zero(), yp(&[0, 1])));
        assert_eq!(d(&[], &[0, 1]), ReducedPair::new(YPoly::zero(), yp(&[1, 0, 2])));
    }

    #[test]
    fn hoffman_small() {
        assert_eq!(hoffman_p(0), YPoly::y());
        assert_eq!(hoffman_q(0), YPoly::one());
        assert_eq!(hoffman_p(1), yp(&[1, 0, 1]));
        assert_eq!(hoffman_p(2), yp(&[0, 2, 0, 2]));
        // sec'' = sec·(1 + 2 tan^2)
        assert_eq!(hoffman_q(2), yp(&[1, 0, 2]));
    }

    #[test]
    fn listed_r_and_t() {
        let r = [yp(&[1]), yp(&[0, 2, 0, 2]), yp(&[1, 0, 5, 0, 4]), yp(&[0, 4, 0, 16, 0, 20, 0, 8])];
        let t = [yp(&[0, 1]), yp(&[1, 0, 2]), yp(&[0, 3, 0, 7, 0, 4]), yp(&[1, 0, 9, 0, 16, 0, 8])];
        for (i, (r, t)) in r.iter().zip(&t).enumerate() {
            let n = i as u32 + 1;
            assert_eq!(&r_poly_closed(n).unwrap(), r, "R_{n} closed");
            assert_eq!(&r_poly_dz(n).unwrap(), r, "R_{n} dz");
            assert_eq!(&t_poly_closed(n).unwrap(), t, "T_{n} closed");
            assert_eq!(&t_poly_dz(n).unwrap(), t, "T_{n} dz");
        }
        assert_eq!(r_poly_closed(5).unwrap(), yp(&[1, 0, 14, 0, 41, 0, 44, 0, 16]));
    }

    #[test]
    fn index_zero_is_rejected() {
        for res in [r_poly_closed(0), t_poly_closed(0), r_poly_dz(0), t_poly_dz(0), tilde_r_poly(0), tilde_t_poly(0)] {
            assert!(matches!(res, Err(Error::UndefinedIndex { n: 0, .. })));
        }
    }

    #[test]
    fn display_and_serialization() {
        assert_eq!(yp(&[0, 3, 0, 7, 0, 4]).to_string(), "3y + 7y^3 + 4y^5");
        assert_eq!(YPoly::y().to_string(), "y");
        assert_eq!(yp(&[-1, 0, -1]).to_string(), "-1 - y^2");
        assert_eq!(YPoly::zero().to_string(), "0");
        assert_eq!(yz(&[(6, 2, 3), (2, 0, 5)]).to_string(), "2z^5 + 6y^2z^3");
        let r2 = yp(&[0, 2, 0, 2]);
        let json = serde_json::to_string(&r2).unwrap();
        assert_eq!(json, r#"[[1,"2"],[3,"2"]]"#);
        assert_eq!(serde_json::from_str::<YPoly>(&json).unwrap(), r2);
        assert!(serde_json::from_str::<YPoly>(r#"[[1,"0"]]"#).is_err());
        assert_eq!(serde_json::to_string(&yz(&[(2, 1, 2)])).unwrap(), r#"[[[1,2],"2"]]"#);
    }

    #[test]
    fn eval_and_exact_division() {
        let p = yp(&[1, 0, 5, 0, 4]);
        assert_eq!(p.eval(&Rational::new(1, 2).unwrap()), Rational::new(5, 2).unwrap());
        assert_eq!(yp(&[2, 4]).div_exact(&Int::from(2)), Some(yp(&[1, 2])));
        assert_eq!(yp(&[2, 3]).div_exact(&Int::from(2)), None);
    }

    #[test]
    fn stored_terms_are_nonzero() {
        let p = &yp(&[1, 2]) - &yp(&[1, 2]);
        assert!(p.is_zero());
        let q = &yz(&[(1, 1, 1)]) - &yz(&[(1, 1, 1)]);
        assert_eq!(q, YZPoly::zero());
    }
}
