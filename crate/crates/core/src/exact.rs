//! Exact arithmetic: arbitrary-precision integers, rationals kept in lowest
//! terms, and Gaussian integers.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer.
pub type Int = BigInt;

/// An exact fraction `num / den` with `den > 0` and `gcd(|num|, den) = 1`.
///
/// Zero is always `0/1`, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rational {
    num: Int,
    den: Int,
}

impl Rational {
    pub fn new(num: impl Into<Int>, den: impl Into<Int>) -> Result<Self> {
        let (num, den) = (num.into(), den.into());
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    /// `den` must be nonzero.
    fn normalized(mut num: Int, mut den: Int) -> Self {
        debug_assert!(!den.is_zero());
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        let g = num.gcd(&den);
        if !g.is_one() {
            num /= &g;
            den /= &g;
        }
        Self { num, den }
    }

    pub fn from_int(n: impl Into<Int>) -> Self {
        Self { num: n.into(), den: Int::one() }
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn numer(&self) -> &Int {
        &self.num
    }

    pub fn denom(&self) -> &Int {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    /// Exact quotient, or [`Error::DivisionByZero`] when `rhs` is zero.
    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn recip(&self) -> Result<Rational> {
        Rational::one().checked_div(self)
    }

    pub fn pow(&self, exp: u32) -> Rational {
        // Powers of a reduced fraction stay reduced.
        Self {
            num: num_traits::pow(self.num.clone(), exp as usize),
            den: num_traits::pow(self.den.clone(), exp as usize),
        }
    }

    /// Nearest-ish `f64`. Both parts are shifted down together when they
    /// exceed the double range, so huge but moderate ratios still convert.
    pub fn to_f64(&self) -> f64 {
        let nb = self.num.bits();
        let db = self.den.bits();
        let shift = nb.max(db).saturating_sub(1000);
        let num = &self.num >> shift;
        let den = &self.den >> shift;
        match (num.to_f64(), den.to_f64()) {
            (Some(n), Some(d)) if d != 0.0 => n / d,
            _ => {
                // Denominator vanished under the shift: the value exceeds f64.
                if self.num.is_negative() {
                    f64::NEG_INFINITY
                } else {
                    f64::INFINITY
                }
            }
        }
    }
}

impl Default for Rational {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Int> for Rational {
    fn from(n: Int) -> Self {
        Self::from_int(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Accepts `p/q` or a bare integer `p`, with optional sign and surrounding
/// whitespace.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseRational { input: s.to_string() };
        let s_trim = s.trim();
        let (p, q) = match s_trim.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s_trim, "1"),
        };
        let num: Int = p.parse().map_err(|_| bad())?;
        let den: Int = q.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }
}

impl<'a> Add<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        if self.den == rhs.den {
            return Rational::normalized(&self.num + &rhs.num, self.den.clone());
        }
        Rational::normalized(&self.num * &rhs.den + &rhs.num * &self.den, &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        Rational::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational { num: -self.num, den: self.den }
    }
}

macro_rules! forward_owned_binop {
    ($ty:ty, $tr:ident, $m:ident) => {
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a $ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &$ty) -> $ty {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned_binop!(Rational, Add, add);
forward_owned_binop!(Rational, Sub, sub);
forward_owned_binop!(Rational, Mul, mul);

/// `re + i·im` with integer parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussianInt {
    pub re: Int,
    pub im: Int,
}

impl GaussianInt {
    pub fn new(re: impl Into<Int>, im: impl Into<Int>) -> Self {
        Self { re: re.into(), im: im.into() }
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    pub fn i() -> Self {
        Self::new(0, 1)
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -&self.im }
    }

    /// `|a|^2 = re^2 + im^2`.
    pub fn norm(&self) -> Int {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Square-and-multiply; `a^0 = 1`.
    pub fn pow(&self, mut exp: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_negative() {
            write!(f, "{} - {}i", self.re, -&self.im)
        } else {
            write!(f, "{} + {}i", self.re, self.im)
        }
    }
}

impl<'a> Add<&'a GaussianInt> for &'a GaussianInt {
    type Output = GaussianInt;
    fn add(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl<'a> Sub<&'a GaussianInt> for &'a GaussianInt {
    type Output = GaussianInt;
    fn sub(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl<'a> Mul<&'a GaussianInt> for &'a GaussianInt {
    type Output = GaussianInt;
    fn mul(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt { re: &self.re * &rhs.re - &self.im * &rhs.im, im: &self.re * &rhs.im + &self.im * &rhs.re }
    }
}

impl Neg for &GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        GaussianInt { re: -&self.re, im: -&self.im }
    }
}

forward_owned_binop!(GaussianInt, Add, add);
forward_owned_binop!(GaussianInt, Sub, sub);
forward_owned_binop!(GaussianInt, Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p, d).unwrap()
    }

    #[test]
    fn rational_arithmetic() {
        assert_eq!(q(1, 2) + q(1, 3), q(5, 6));
        assert_eq!(q(2, 3) * q(3, 2), Rational::one());
        assert_eq!(q(1, 1).checked_div(&q(0, 1)), Err(Error::DivisionByZero));
        assert_eq!(q(3, 4).checked_div(&q(-3, 8)).unwrap(), q(-2, 1));
        assert_eq!(q(1, 2) - q(1, 2), Rational::zero());
    }

    #[test]
    fn normalization() {
        let r = q(6, -4);
        assert_eq!(r.numer(), &Int::from(-3));
        assert_eq!(r.denom(), &Int::from(2));
        let z = q(0, -7);
        assert_eq!(z.denom(), &Int::from(1));
        assert_eq!(z, Rational::zero());
        assert_eq!(Rational::new(1, 0), Err(Error::DivisionByZero));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("3/7".parse::<Rational>().unwrap(), q(3, 7));
        assert_eq!(" -10/4 ".parse::<Rational>().unwrap(), q(-5, 2));
        assert_eq!("12".parse::<Rational>().unwrap(), q(12, 1));
        assert_eq!("1/0".parse::<Rational>(), Err(Error::DivisionByZero));
        assert!(matches!("1/x".parse::<Rational>(), Err(Error::ParseRational { .. })));
        assert!(matches!("".parse::<Rational>(), Err(Error::ParseRational { .. })));
        assert_eq!(q(-5, 2).to_string(), "-5/2");
        assert_eq!(q(4, 2).to_string(), "2");
    }

    #[test]
    fn thirty_factorial_is_exact() {
        let f: Int = (1..=30u32).map(Int::from).product();
        assert_eq!(f.to_string(), "265252859812191058636308480000000");
    }

    #[test]
    fn to_f64_handles_huge_parts() {
        let big = num_traits::pow(Int::from(10), 400);
        let r = Rational::new(&big * 3, &big * 4).unwrap();
        assert_eq!(r.to_f64(), 0.75);
        let r = Rational::new(Int::from(1) + &big, big.clone() * 2).unwrap();
        assert!((r.to_f64() - 0.5).abs() < 1e-15);
        assert_eq!(q(-1, 3).to_f64(), -1.0 / 3.0);
    }

    #[test]
    fn gaussian_products() {
        let g = GaussianInt::new;
        assert_eq!(&g(1, 1) * &g(1, 1), g(0, 2));
        assert_eq!(&g(1, 0) * &g(7, -3), g(7, -3));
        assert_eq!(&g(1, 2) * &g(3, 4), g(-5, 10));
    }

    #[test]
    fn gaussian_powers() {
        let g = GaussianInt::new;
        assert_eq!(g(1, 1).pow(0), g(1, 0));
        assert_eq!(g(1, 1).pow(2), g(0, 2));
        // (1+i)^4 by repeated multiplication.
        let mut acc = GaussianInt::one();
        for _ in 0..4 {
            acc = &acc * &g(1, 1);
        }
        assert_eq!(acc, g(-4, 0));
        assert_eq!(g(1, 1).pow(4), g(-4, 0));
        assert_eq!(g(0, 0).pow(0), GaussianInt::one());
    }

    fn small_rat() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..30).prop_map(|(p, d)| Rational::new(p, d).unwrap())
    }

    fn small_gauss() -> impl Strategy<Value = GaussianInt> {
        (-20i64..20, -20i64..20).prop_map(|(a, b)| GaussianInt::new(a, b))
    }

    proptest! {
        #[test]
        fn rational_ring_laws(a in small_rat(), b in small_rat(), c in small_rat()) {
            prop_assert_eq!((&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
            for r in [&a + &b, &a * &b, &a - &c] {
                prop_assert!(r.denom().is_positive());
                prop_assert!(r.numer().gcd(r.denom()).is_one());
            }
            if !b.is_zero() {
                let d = a.checked_div(&b).unwrap();
                prop_assert!(d.denom().is_positive());
                prop_assert!(d.numer().gcd(d.denom()).is_one());
                prop_assert_eq!(d * &b, a.clone());
            }
        }

        #[test]
        fn gaussian_ring_laws(a in small_gauss(), b in small_gauss(), c in small_gauss()) {
            prop_assert_eq!((&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
            prop_assert_eq!((&a * &b).norm(), a.norm() * b.norm());
        }

        #[test]
        fn gaussian_pow_adds_exponents(a in small_gauss(), m in 0u32..=10, n in 0u32..=10) {
            prop_assert_eq!(a.pow(m + n), &a.pow(m) * &a.pow(n));
        }
    }
}
