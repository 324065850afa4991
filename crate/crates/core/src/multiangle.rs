//! `tan(nx)` from `t = tan(x)`, exactly.
//!
//! [`tan_beeler`] evaluates the alternating binomial sums
//!
//! ```text
//!             Σ_k (-1)^k C(n, 2k+1) t^(2k+1)
//! tan(nx) = ----------------------------------
//!               Σ_k (-1)^k C(n, 2k) t^(2k)
//! ```
//!
//! and two oracles reach the same value by unrelated code paths: repeated
//! angle addition carried projectively, and the real/imaginary parts of
//! `(q + ip)^n` for `t = p/q`.

use std::fmt;
use std::ops::Neg;

use num_traits::Zero;

use crate::exact::{GaussianInt, Rational};
use crate::triangles::{r_coef, t_coef};

/// Float check is skipped when the Beeler denominator is smaller than this.
pub const FLOAT_CHECK_MIN_DENOMINATOR: f64 = 1e-6;

/// Exact value of `tan(nx)`, or a pole where the denominator vanishes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TanValue {
    Finite(Rational),
    Pole,
}

impl TanValue {
    pub fn is_pole(&self) -> bool {
        matches!(self, TanValue::Pole)
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            TanValue::Finite(r) => Some(r),
            TanValue::Pole => None,
        }
    }

    /// `num / den`, with a zero denominator meaning a pole.
    fn from_ratio(num: &Rational, den: &Rational) -> Self {
        match num.checked_div(den) {
            Ok(v) => TanValue::Finite(v),
            Err(_) => TanValue::Pole,
        }
    }
}

impl Neg for TanValue {
    type Output = TanValue;
    fn neg(self) -> TanValue {
        match self {
            TanValue::Finite(r) => TanValue::Finite(-r),
            TanValue::Pole => TanValue::Pole,
        }
    }
}

impl fmt::Display for TanValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TanValue::Finite(r) => write!(f, "{r}"),
            TanValue::Pole => f.write_str("pole"),
        }
    }
}

/// Numerator and denominator sums of the binomial form, before division.
pub fn beeler_parts(n: u32, t: &Rational) -> (Rational, Rational) {
    let n64 = n as u64;
    let t2 = t * t;
    let mut num = Rational::zero();
    let mut den = Rational::zero();
    // t^(2k) and t^(2k+1)
    let mut even = Rational::one();
    let mut odd = t.clone();
    for k in 0..=(n / 2) as i64 {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        den = &den + &(&even * &Rational::from_int(t_coef(n64, k) * sign));
        // Upper index ⌊(n-1)/2⌋ is -1 for n = 0: empty numerator.
        if n >= 1 && k <= ((n - 1) / 2) as i64 {
            num = &num + &(&odd * &Rational::from_int(r_coef(n64, k) * sign));
        }
        even = &even * &t2;
        odd = &odd * &t2;
    }
    (num, den)
}

pub fn tan_beeler(n: u32, t: &Rational) -> TanValue {
    let (num, den) = beeler_parts(n, t);
    TanValue::from_ratio(&num, &den)
}

/// Iterates `u ← (u + t) / (1 - u·t)` from `u = 0`, holding `u` as a ratio
/// `(p : q)` so an intermediate pole (`q = 0`) carries through.
pub fn tan_addition_oracle(n: u32, t: &Rational) -> TanValue {
    let mut p = Rational::zero();
    let mut q = Rational::one();
    for _ in 0..n {
        // (p/q + t) / (1 - (p/q)·t) = (p + t·q) / (q - t·p)
        let np = &p + &(t * &q);
        let nq = &q - &(t * &p);
        p = np;
        q = nq;
    }
    TanValue::from_ratio(&p, &q)
}

/// `tan(n·arctan(p/q)) = Im((q + ip)^n) / Re((q + ip)^n)`.
pub fn tan_gaussian_oracle(n: u32, t: &Rational) -> TanValue {
    let base = GaussianInt::new(t.denom().clone(), t.numer().clone());
    let g = base.pow(n);
    if g.re.is_zero() {
        return TanValue::Pole;
    }
    TanValue::Finite(Rational::new(g.im, g.re).expect("nonzero real part"))
}

/// Outcome of comparing the exact value with `f64` trigonometry.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum FloatCheck {
    /// `|exact as f64 - tan(n·atan(t))|`.
    Diff(f64),
    /// Pole, `n = 0`, or too close to a pole for `f64` to be meaningful.
    NotApplicable,
}

pub fn tan_float_check(n: u32, t: &Rational) -> FloatCheck {
    if n == 0 {
        return FloatCheck::NotApplicable;
    }
    let (num, den) = beeler_parts(n, t);
    if den.to_f64().abs() < FLOAT_CHECK_MIN_DENOMINATOR {
        return FloatCheck::NotApplicable;
    }
    let TanValue::Finite(exact) = TanValue::from_ratio(&num, &den) else {
        return FloatCheck::NotApplicable;
    };
    let float = (n as f64 * t.to_f64().atan()).tan();
    FloatCheck::Diff((exact.to_f64() - float).abs())
}
