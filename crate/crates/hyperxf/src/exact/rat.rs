//! Arbitrary-precision rational scalar.
//!
//! `Rat` is the universal scalar of the crate: every parameter, series term,
//! residual and power-series coefficient is a `Rat`. The representation is
//! kept canonical at all times (positive denominator, gcd(|num|, den) = 1),
//! so identity residuals can be compared to zero exactly.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational number in canonical form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    /// `num/den`, reduced. Panics if `den == 0`; use [`Rat::from_str`] for
    /// fallible construction from untrusted input.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rat(BigRational::from_integer(n))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// True for integers in `{0, -1, -2, ...}` — the values a lower
    /// (denominator) parameter must avoid.
    pub fn is_nonpositive_integer(&self) -> bool {
        self.is_integer() && !self.0.is_positive()
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    /// Multiplicative inverse; `Err` on zero.
    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero { expr: "1/0".into() });
        }
        Ok(Rat(self.0.recip()))
    }

    /// Integer power by repeated squaring; negative exponents invert
    /// (error on zero base).
    pub fn pow(&self, exp: i64) -> Result<Self> {
        if exp == 0 {
            return Ok(Rat::one());
        }
        let mut base = if exp < 0 { self.recip()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut result = Rat::one();
        while e > 0 {
            if e & 1 == 1 {
                result *= &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(result)
    }

    /// The value as an i64 if it is an integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    /// The value as a u32 if it is a non-negative integer that fits.
    pub fn to_u32(&self) -> Option<u32> {
        if self.is_integer() {
            self.0.numer().to_u32()
        } else {
            None
        }
    }

    /// Rational square root, when one exists: returns `t >= 0` with `t^2 == self`.
    pub fn sqrt_exact(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let ns = self.0.numer().sqrt();
        let ds = self.0.denom().sqrt();
        if &(&ns * &ns) == self.0.numer() && &(&ds * &ds) == self.0.denom() {
            Some(Rat(BigRational::new(ns, ds)))
        } else {
            None
        }
    }

    /// Crude magnitude estimate `log2(|self|)`, used only for soft-check
    /// diagnostics. Returns `None` for zero.
    pub fn log2_magnitude(&self) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        Some(self.0.numer().bits() as i64 - self.0.denom().bits() as i64)
    }

    /// Decimal approximation string with the given number of significant
    /// digits, computed by integer division (no floating point). Used only
    /// for human-readable diagnostics; comparisons stay exact.
    pub fn to_decimal_string(&self, digits: u32) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let neg = self.is_negative();
        let num = self.0.numer().abs();
        let den = self.0.denom().clone();
        // scale so the quotient has `digits` significant digits
        let mut exp10: i64 = 0;
        let mut scaled_num = num.clone();
        let mut scaled_den = den.clone();
        let ten = BigInt::from(10);
        while scaled_num < scaled_den {
            scaled_num *= &ten;
            exp10 -= 1;
        }
        while &scaled_num / &scaled_den >= ten {
            scaled_den *= &ten;
            exp10 += 1;
        }
        // now 1 <= scaled_num/scaled_den < 10
        let mut mantissa = String::new();
        let mut rem = scaled_num;
        for i in 0..digits {
            let q = &rem / &scaled_den;
            rem = (&rem - &q * &scaled_den) * &ten;
            mantissa.push_str(&q.to_string());
            if i == 0 {
                mantissa.push('.');
            }
        }
        let sign = if neg { "-" } else { "" };
        format!("{sign}{mantissa}e{exp10}")
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<u32> for Rat {
    fn from(n: u32) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }
}

impl fmt::Display for Rat {
    /// Canonical rendering: `"num"` for integers, `"num/den"` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_int = |t: &str| -> Result<BigInt> {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("bad integer {t:?}")))
        };
        match s.split_once('/') {
            None => Ok(Rat(BigRational::from_integer(parse_int(s)?))),
            Some((n, d)) => {
                let den = parse_int(d)?;
                if den.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in {s:?}")));
                }
                Ok(Rat(BigRational::new(parse_int(n)?, den)))
            }
        }
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 = &self.0 + &rhs.0;
    }
}

impl AddAssign<Rat> for Rat {
    fn add_assign(&mut self, rhs: Rat) {
        self.0 = &self.0 + &rhs.0;
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        self.0 = &self.0 - &rhs.0;
    }
}

impl MulAssign<&Rat> for Rat {
    fn mul_assign(&mut self, rhs: &Rat) {
        self.0 = &self.0 * &rhs.0;
    }
}

impl MulAssign<Rat> for Rat {
    fn mul_assign(&mut self, rhs: Rat) {
        self.0 = &self.0 * &rhs.0;
    }
}

impl DivAssign<&Rat> for Rat {
    fn div_assign(&mut self, rhs: &Rat) {
        self.0 = &self.0 / &rhs.0;
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

impl Product for Rat {
    fn product<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::one(), |acc, x| acc * x)
    }
}

/// Shorthand for integer `Rat`s in tests and entry tables.
pub fn rat(n: i64) -> Rat {
    Rat::from(n)
}

/// Shorthand for `num/den` `Rat`s.
pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;

    #[test]
    fn canonical_after_construction() {
        let r = Rat::new(-4, -6);
        assert_eq!(r, ratio(2, 3));
        assert_eq!(r.to_string(), "2/3");
        let s = Rat::new(4, -6);
        assert_eq!(s.to_string(), "-2/3");
        assert!(s.denom() > &BigInt::from(0));
        assert_eq!(s.numer().gcd(s.denom()), BigInt::from(1));
    }

    #[test]
    fn display_and_parse_round_trip() {
        for s in ["0", "7", "-3", "5/9", "-22/7"] {
            let r: Rat = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert_eq!("4/8".parse::<Rat>().unwrap().to_string(), "1/2");
        assert!("1/0".parse::<Rat>().is_err());
        assert!("x".parse::<Rat>().is_err());
    }

    #[test]
    fn pow_and_recip() {
        assert_eq!(ratio(2, 3).pow(3).unwrap(), ratio(8, 27));
        assert_eq!(ratio(2, 3).pow(-2).unwrap(), ratio(9, 4));
        assert_eq!(rat(5).pow(0).unwrap(), rat(1));
        assert!(Rat::zero().pow(-1).is_err());
    }

    #[test]
    fn sqrt_exact_detects_squares() {
        assert_eq!(ratio(9, 4).sqrt_exact(), Some(ratio(3, 2)));
        assert_eq!(rat(2).sqrt_exact(), None);
        assert_eq!(rat(-4).sqrt_exact(), None);
        assert_eq!(Rat::zero().sqrt_exact(), Some(Rat::zero()));
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(ratio(1, 4).to_decimal_string(3), "2.50e-1");
        assert_eq!(rat(-1250).to_decimal_string(3), "-1.25e3");
        assert_eq!(Rat::zero().to_decimal_string(3), "0");
    }

    #[test]
    fn nonpositive_integer_detection() {
        assert!(rat(0).is_nonpositive_integer());
        assert!(rat(-5).is_nonpositive_integer());
        assert!(!rat(2).is_nonpositive_integer());
        assert!(!ratio(-1, 2).is_nonpositive_integer());
    }
}
